#pragma once

#include "hodgeprobe/kform.hpp"
#include "hodgeprobe/lattice.hpp"

namespace hodgeprobe {

/// Matrix of the induced map on the p-th exterior power in the e_I basis
/// (subset masks in ascending numeric order). Entries are p x p minors:
/// (wedge^p M)(e_J) has e_I coefficient det M[I, J].
inline ExactMatrix induced_power_map(const ExactMatrix& m, int p) {
    if (m.rows() != m.cols()) throw Error("induced_power_map: matrix not square");
    int n = static_cast<int>(m.rows());
    if (p <= 0 || p > n) throw DegreeMismatch("induced_power_map: need 0 < p <= dim");
    std::vector<uint64_t> basis = subset_masks(n, p);
    size_t nn = basis.size();
    ExactMatrix out(nn, nn);
    for (size_t jj = 0; jj < nn; ++jj) {
        std::vector<int> cols = positions_of(basis[jj]);
        for (size_t ii = 0; ii < nn; ++ii) {
            std::vector<int> rows = positions_of(basis[ii]);
            ExactMatrix sub(p, p);
            bool zero_row = false;
            for (int i = 0; i < p && !zero_row; ++i) {
                bool nz = false;
                for (int j = 0; j < p; ++j) {
                    sub(i, j) = m(rows[i], cols[j]);
                    if (!sub(i, j).is_zero()) nz = true;
                }
                zero_row = !nz;
            }
            if (!zero_row) out(ii, jj) = det(std::move(sub));
        }
    }
    return out;
}

/// Gram-determinant extension of an alternating form to the p-th exterior
/// power: E_hat(e_I, e_J) = det (E(e_i, e_j))_{i in I, j in J}. p must be odd.
inline ExactMatrix gram_extension(const ExactMatrix& e, int p) {
    if (e.rows() != e.cols()) throw Error("gram_extension: matrix not square");
    if (p % 2 == 0) throw EvenP("gram_extension: p must be odd");
    int n = static_cast<int>(e.rows());
    if (p <= 0 || p > n) throw DegreeMismatch("gram_extension: need 0 < p <= dim");
    for (size_t i = 0; i < e.rows(); ++i)
        for (size_t j = 0; j < e.cols(); ++j)
            if (e(i, j) != -e(j, i)) throw Degenerate("gram_extension: form not alternating");
    std::vector<uint64_t> basis = subset_masks(n, p);
    size_t nn = basis.size();
    ExactMatrix out(nn, nn);
    for (size_t ii = 0; ii < nn; ++ii) {
        std::vector<int> rows = positions_of(basis[ii]);
        for (size_t jj = ii + 1; jj < nn; ++jj) {
            std::vector<int> cols = positions_of(basis[jj]);
            Scalar d = det(e.submatrix({rows.begin(), rows.end()}, {cols.begin(), cols.end()}));
            out(ii, jj) = d;
            out(jj, ii) = -d; // odd skew Gram: diagonal zero, transpose minor negates
        }
    }
    return out;
}

/// Shuffle comultiplication on a degree-2p multivector: on decomposables,
/// the signed sum over ordered (p,p)-shuffles of the front/back blocks,
/// landing in the alternating square of the p-th exterior power. The
/// result lives on the subset-index coordinate space (ascending masks).
inline Multivector shuffle_comultiplication(int p, const Multivector& x) {
    if (x.degree() != 2 * p) throw DegreeMismatch("shuffle_comultiplication: degree must be 2p");
    int n = x.ambient();
    std::vector<uint64_t> basis = subset_masks(n, p);
    if (basis.size() > 64) throw AmbientMismatch("shuffle_comultiplication: index space exceeds 64");
    std::map<uint64_t, size_t> index_of;
    for (size_t i = 0; i < basis.size(); ++i) index_of[basis[i]] = i;

    std::map<uint64_t, Scalar> acc;
    for (const auto& [mask, c] : x.terms()) {
        // enumerate p-subsets I of mask; J = mask \ I; both orders appear
        std::vector<int> elems = positions_of(mask);
        for (uint64_t sel : subset_masks(2 * p, p)) {
            uint64_t front = 0;
            for (int b : positions_of(sel)) front |= uint64_t(1) << elems[b];
            uint64_t back = mask & ~front;
            int sign = merge_sign(front, back);
            size_t fi = index_of.at(front);
            size_t bi = index_of.at(back);
            // e_front (outer-wedge) e_back; orient by index order
            uint64_t outer = (uint64_t(1) << fi) | (uint64_t(1) << bi);
            Scalar v = c;
            if (sign < 0) v = -v;
            if (fi > bi) v = -v;
            acc[outer] += v;
        }
    }
    size_t nn = basis.size();
    return KForm::from_term_map(static_cast<int>(nn), 2, std::move(acc));
}

/// Coefficients of the k-th wedge power of a 2-form with alternating
/// matrix S, via sub-Pfaffians: w^k = k! * sum_K Pf(S[K]) dx^K over
/// 2k-subsets K. Practical at or near the top power where few subsets
/// survive; the all-subsets loop is the reference path.
inline KForm power_via_pfaffians(const ExactMatrix& s, int k) {
    int n = static_cast<int>(s.rows());
    Integer fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    Scalar factorial{fact};
    std::map<uint64_t, Scalar> acc;
    for (uint64_t km : subset_masks(n, 2 * k)) {
        std::vector<int> idx = positions_of(km);
        Scalar pf = pfaffian(s.submatrix({idx.begin(), idx.end()}, {idx.begin(), idx.end()}));
        if (!pf.is_zero()) acc[km] = factorial * pf;
    }
    return KForm::from_term_map(n, 2 * k, std::move(acc));
}

/// Top power of a nondegenerate 2-form on 2m coordinates: m! Pf(S) dx^top.
inline KForm top_power_of_two_form(const ExactMatrix& s) {
    int n = static_cast<int>(s.rows());
    if (n % 2 != 0) throw Error("top power needs even dimension");
    return power_via_pfaffians(s, n / 2);
}

/// Power m-1 of a nondegenerate 2-form on 2m coordinates, through the
/// Pfaffian adjugate identity Pf(S with rows/cols a,b removed) =
/// (-1)^(a+b) (S^{-1})_{ab} Pf(S) for a < b. One inversion instead of
/// C(2m,2) sub-Pfaffians.
inline KForm near_top_power_of_two_form(const ExactMatrix& s) {
    int n = static_cast<int>(s.rows());
    if (n % 2 != 0) throw Error("near-top power needs even dimension");
    int m = n / 2;
    if (m == 0) throw Error("near-top power undefined on dimension 0");
    Scalar pf = pfaffian(s);
    if (pf.is_zero()) throw Degenerate("near-top power: form is degenerate");
    ExactMatrix sinv = inverse(s);
    Integer fact = 1;
    for (int i = 2; i <= m - 1; ++i) fact *= i;
    Scalar factorial{fact};
    uint64_t full = (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    std::map<uint64_t, Scalar> acc;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (sinv(a, b).is_zero()) continue;
            Scalar c = factorial * pf * sinv(a, b);
            if ((a + b) & 1) c = -c;
            uint64_t key = full & ~(uint64_t(1) << a) & ~(uint64_t(1) << b);
            acc[key] = std::move(c);
        }
    return KForm::from_term_map(n, 2 * (m - 1), std::move(acc));
}

} // namespace hodgeprobe
