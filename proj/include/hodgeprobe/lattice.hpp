#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hodgeprobe/matrix.hpp"

namespace hodgeprobe {

using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>; // row-major

struct LatticeBasis {
    std::vector<IVec> vectors;
};

inline ExactMatrix to_matrix(const IMat& m, size_t cols) {
    ExactMatrix r(m.size(), cols);
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != cols) throw Error("ragged integer matrix");
        for (size_t j = 0; j < cols; ++j) r(i, j) = Scalar(Integer(m[i][j]));
    }
    return r;
}

inline IMat to_integer(const ExactMatrix& m) {
    IMat r(m.rows(), IVec(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).integer_value();
    return r;
}

/// Clears denominators of a rational vector; result is primitive (gcd 1).
inline IVec primitive_integer_vector(const Vec& v) {
    Integer lcm = 1;
    for (const Scalar& s : v) {
        const Rational& q = s.rational_value();
        lcm = ::lcm(lcm, Integer(q.get_den()));
    }
    IVec out(v.size());
    Integer g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rational q = v[i].rational_value() * Rational(lcm);
        out[i] = q.get_num();
        g = ::gcd(g, out[i]);
    }
    if (g > 1)
        for (Integer& x : out) x /= g;
    return out;
}

/// Row Hermite normal form of the lattice spanned by the input rows.
/// Zero rows dropped; pivots positive; entries above a pivot reduced into
/// [0, pivot). Canonical basis of the row lattice.
inline IMat hnf_rows(IMat m) {
    if (m.empty()) return m;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        // gcd-reduce column c below row r
        for (;;) {
            size_t p = m.size();
            for (size_t i = r; i < m.size(); ++i)
                if (m[i][c] != 0 && (p == m.size() || abs(m[i][c]) < abs(m[p][c]))) p = i;
            if (p == m.size()) break; // column all zero
            std::swap(m[r], m[p]);
            bool clean = true;
            for (size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                Integer q = m[i][c] / m[r][c]; // truncated division
                if (q != 0)
                    for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < m.size() && m[r][c] != 0) {
            if (m[r][c] < 0)
                for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
            for (size_t i = 0; i < r; ++i) {
                Integer q = m[i][c] / m[r][c];
                if (m[i][c] - q * m[r][c] < 0) q -= 1; // floor division
                if (q != 0)
                    for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
            }
            ++r;
        }
    }
    m.resize(r);
    return m;
}

/// Basis of {x in Z^cols : Mx = 0}. Column reduction with unimodular ops;
/// the result is automatically saturated. Rows of the output are the basis.
inline IMat integer_kernel(const IMat& m, size_t cols) {
    // U starts as identity over the columns; column ops mirror into U.
    size_t n = cols;
    IMat a = m;
    for (IVec& row : a)
        if (row.size() != n) throw Error("integer_kernel: ragged matrix");
    IMat u(n, IVec(n));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;

    size_t lead = 0; // next free column
    for (size_t r = 0; r < a.size() && lead < n; ++r) {
        for (;;) {
            size_t p = n;
            for (size_t j = lead; j < n; ++j)
                if (a[r][j] != 0 && (p == n || abs(a[r][j]) < abs(a[r][p]))) p = j;
            if (p == n) break;
            if (p != lead) {
                for (IVec& row : a) std::swap(row[lead], row[p]);
                for (IVec& row : u) std::swap(row[lead], row[p]);
            }
            bool clean = true;
            for (size_t j = lead + 1; j < n; ++j) {
                if (a[r][j] == 0) continue;
                Integer q = a[r][j] / a[r][lead];
                if (q != 0) {
                    for (IVec& row : a) row[j] -= q * row[lead];
                    for (IVec& row : u) row[j] -= q * row[lead];
                }
                if (a[r][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][lead] != 0) ++lead;
    }
    IMat kernel;
    for (size_t j = lead; j < n; ++j) {
        IVec v(n);
        for (size_t i = 0; i < n; ++i) v[i] = u[i][j];
        kernel.push_back(std::move(v));
    }
    return hnf_rows(std::move(kernel));
}

/// Saturation {x in Z^m : kx in span(L) for some k != 0} of an integral
/// lattice basis, via the double-annihilator: integer kernel of the
/// integral defining equations of the rational row space.
inline LatticeBasis saturate(const LatticeBasis& l, size_t ambient_dim) {
    if (l.vectors.empty()) return {};
    ExactMatrix m = to_matrix(l.vectors, ambient_dim);
    std::vector<Vec> null = kernel_basis(m);
    if (null.empty()) {
        // full rank: saturation is all of Z^m
        IMat id(ambient_dim, IVec(ambient_dim));
        for (size_t i = 0; i < ambient_dim; ++i) id[i][i] = 1;
        return {id};
    }
    IMat eqs;
    for (const Vec& v : null) eqs.push_back(primitive_integer_vector(v));
    return {integer_kernel(eqs, ambient_dim)};
}

/// Quasi-symplectic (Frobenius) normal form of an integral alternating
/// nondegenerate matrix: U unimodular with U^T E U = [[0, D], [-D, 0]],
/// D = diag(d_1, ..., d_g), d_i > 0, d_1 | d_2 | ... | d_g.
struct SkewNormalForm {
    IMat u; // 2g x 2g unimodular (columns are the new basis)
    std::vector<Integer> divisors;
};

inline SkewNormalForm skew_normal_form(const IMat& e_in) {
    size_t n = e_in.size();
    if (n == 0 || n % 2 != 0) throw Degenerate("alternating matrix must have even size");
    for (size_t i = 0; i < n; ++i) {
        if (e_in[i].size() != n) throw Degenerate("matrix not square");
        for (size_t j = 0; j < n; ++j)
            if (e_in[i][j] != -e_in[j][i]) throw Degenerate("matrix not alternating");
    }
    if (det(to_matrix(e_in, n)).is_zero()) throw Degenerate("alternating form is degenerate");

    IMat m = e_in;
    IMat u(n, IVec(n));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;

    auto swap_idx = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(m[i], m[j]);
        for (IVec& row : m) std::swap(row[i], row[j]);
        for (IVec& row : u) std::swap(row[i], row[j]);
    };
    auto negate_idx = [&](size_t i) {
        for (size_t k = 0; k < n; ++k) m[i][k] = -m[i][k];
        for (size_t k = 0; k < n; ++k) m[k][i] = -m[k][i];
        for (IVec& row : u) row[i] = -row[i];
    };
    // basis change u_i <- u_i + c * u_j
    auto addmul = [&](size_t i, size_t j, const Integer& c) {
        if (c == 0) return;
        for (size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
        for (size_t k = 0; k < n; ++k) m[k][i] += c * m[k][j];
        for (IVec& row : u) row[i] += c * row[j];
    };
    auto nearest_quotient = [](const Integer& a, const Integer& b) {
        // round(a/b) with |a - q b| <= |b|/2
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (2 * r > abs(b)) q += 1;
        return q;
    };

    for (size_t base = 0; base < n; base += 2) {
        for (;;) {
            // smallest nonzero entry in the remaining block
            size_t bi = n, bj = n;
            for (size_t i = base; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != 0 && (bi == n || abs(m[i][j]) < abs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == n) throw Degenerate("alternating form is degenerate");
            swap_idx(bi, base);
            if (bj == base) bj = bi; // the swap moved it
            swap_idx(bj, base + 1);
            if (m[base][base + 1] < 0) negate_idx(base + 1);

            // reduce rows base and base+1 against the pivot
            bool residue = false;
            for (size_t k = base + 2; k < n; ++k) {
                Integer piv = m[base][base + 1];
                // m[base][k] shifts by c*piv under u_k <- u_k + c*u_{base+1}
                addmul(k, base + 1, -nearest_quotient(m[base][k], piv));
                // m[base+1][k] shifts by c*m[base+1][base] = -c*piv under u_k <- u_k + c*u_base
                addmul(k, base, nearest_quotient(m[base + 1][k], piv));
                if (m[base][k] != 0 || m[base + 1][k] != 0) residue = true;
            }
            if (residue) continue; // smaller pivot now exists, restart block

            // divisibility of the remaining block by the pivot
            Integer piv = m[base][base + 1];
            size_t vi = n, vj = n;
            for (size_t i = base + 2; i < n && vi == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (m[i][j] % piv != 0) {
                        vi = i;
                        vj = j;
                        break;
                    }
            if (vi == n) break;
            addmul(base, vi, 1); // drags a non-divisible entry into row base
        }
    }

    // gather as (pair lows | pair highs): new order 0,2,4,... then 1,3,5,...
    size_t g = n / 2;
    std::vector<size_t> perm(n);
    for (size_t k = 0; k < g; ++k) {
        perm[k] = 2 * k;
        perm[g + k] = 2 * k + 1;
    }
    IMat u2(n, IVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) u2[i][j] = u[i][perm[j]];

    SkewNormalForm out;
    out.u = std::move(u2);
    for (size_t k = 0; k < g; ++k) out.divisors.push_back(m[2 * k][2 * k + 1]);
    return out;
}

/// Pfaffian of an alternating matrix over the scalar field, by skew
/// elimination with pivoting. Sign tracks simultaneous row/column swaps.
inline Scalar pfaffian(ExactMatrix m) {
    size_t n = m.rows();
    if (n != m.cols()) throw Error("pfaffian of non-square matrix");
    if (n % 2 != 0) return Scalar(0);
    Scalar pf(1);
    for (size_t c = 0; c + 1 < n; c += 2) {
        size_t k = c + 1;
        while (k < n && m(c, k).is_zero()) ++k;
        if (k == n) return Scalar(0);
        if (k != c + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(m(c + 1, j), m(k, j));
            for (size_t i = 0; i < n; ++i) std::swap(m(i, c + 1), m(i, k));
            pf = -pf;
        }
        Scalar piv = m(c, c + 1);
        pf *= piv;
        Scalar inv = piv.inverse();
        for (size_t i = c + 2; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                Scalar upd = (m(c, i) * m(c + 1, j) - m(c, j) * m(c + 1, i)) * inv;
                if (!upd.is_zero()) {
                    m(i, j) -= upd;
                    m(j, i) = -m(i, j);
                }
            }
    }
    return pf;
}

} // namespace hodgeprobe
