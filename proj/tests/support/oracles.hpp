#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <random>
#include <vector>

#include "hodgeprobe/kform.hpp"
#include "hodgeprobe/matrix.hpp"

namespace oracles {

using hodgeprobe::ExactMatrix;
using hodgeprobe::Integer;
using hodgeprobe::KForm;
using hodgeprobe::Rational;
using hodgeprobe::Scalar;
using hodgeprobe::Vec;

/// Sign of a + b*sqrt(d) by exact interval refinement of sqrt(d):
/// bisection over rationals until the enclosure excludes zero.
inline int interval_sign(const Rational& a, const Rational& b, long d) {
    if (b == 0) return sgn(a);
    if (a == 0) return sgn(b);
    if (a * a == Rational(d) * b * b && sgn(a) != sgn(b)) return 0;
    Rational lo = 0, hi = Rational(d) + 1;
    for (int iter = 0; iter < 512; ++iter) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= Rational(d)) lo = mid;
        else hi = mid;
        Rational vlo = a + b * (b > 0 ? lo : hi);
        Rational vhi = a + b * (b > 0 ? hi : lo);
        if (vlo > 0) return 1;
        if (vhi < 0) return -1;
    }
    throw std::runtime_error("interval_sign did not converge");
}

inline int interval_sign(const Scalar& s) {
    if (!s.is_real()) throw std::runtime_error("interval_sign on non-real scalar");
    return interval_sign(s.a(), s.b(), s.d() == 0 ? 2 : s.d());
}

/// Signature of a symmetric matrix over F via congruence diagonalization.
/// Independent of the library's leading-minor test.
inline std::pair<int, int> signature(ExactMatrix s) {
    size_t n = s.rows();
    int pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    for (size_t step = 0; step < n; ++step) {
        // find a nonzero diagonal among remaining indices
        size_t p = n;
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && !s(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p == n) {
            // all remaining diagonals zero: create one from an off-diagonal
            size_t a = n, b = n;
            for (size_t i = 0; i < n && a == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && !s(i, j).is_zero()) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) break; // remaining block is zero
            for (size_t k = 0; k < n; ++k) s(a, k) += s(b, k);
            for (size_t k = 0; k < n; ++k) s(k, a) += s(k, b);
            p = a;
        }
        int sign = interval_sign(s(p, p));
        if (sign > 0) ++pos;
        else ++neg;
        Scalar inv = s(p, p).inverse();
        for (size_t i = 0; i < n; ++i) {
            if (i == p || done[i] || s(i, p).is_zero()) continue;
            Scalar f = s(i, p) * inv;
            for (size_t j = 0; j < n; ++j)
                if (!s(p, j).is_zero()) s(i, j) -= f * s(p, j); // row_i -= f row_p
            for (size_t j = 0; j < n; ++j)
                if (!s(j, p).is_zero()) s(j, i) -= f * s(j, p); // col_i -= f col_p
        }
        done[p] = true;
    }
    return {pos, neg};
}

/// Brute-force recursive Pfaffian by first-row expansion.
inline Scalar pfaffian_brute(const ExactMatrix& m) {
    size_t n = m.rows();
    if (n % 2 != 0) return Scalar(0);
    if (n == 0) return Scalar(1);
    Scalar acc;
    for (size_t k = 1; k < n; ++k) {
        if (m(0, k).is_zero()) continue;
        std::vector<size_t> rest;
        for (size_t i = 1; i < n; ++i)
            if (i != k) rest.push_back(i);
        Scalar sub = pfaffian_brute(m.submatrix(rest, rest));
        Scalar term = m(0, k) * sub;
        if (k % 2 == 0) term = -term; // (-1)^{k+1} with 0-based k
        acc += term;
    }
    return acc;
}

/// Evaluation-based wedge: (a ^ b)(v_1..v_{j+k}) as a signed sum over
/// front-block choices, computed from evaluations of a and b alone.
inline Scalar wedge_eval_brute(const KForm& a, const KForm& b, const std::vector<Vec>& vs) {
    int ja = a.degree(), jb = b.degree();
    if (static_cast<int>(vs.size()) != ja + jb) throw std::runtime_error("wedge_eval arity");
    Scalar acc;
    for (uint64_t sel : hodgeprobe::subset_masks(ja + jb, ja)) {
        std::vector<Vec> front, back;
        for (int i = 0; i < ja + jb; ++i) {
            if (sel & (uint64_t(1) << i)) front.push_back(vs[i]);
            else back.push_back(vs[i]);
        }
        uint64_t rest = ~sel & ((uint64_t(1) << (ja + jb)) - 1);
        int sign = hodgeprobe::merge_sign(sel, rest);
        Scalar term = a.evaluate(front) * b.evaluate(back);
        if (sign < 0) term = -term;
        acc += term;
    }
    return acc;
}

/// Multinomial brute-force expansion of the m-th power of a 2-form:
/// sum over ordered m-tuples of terms (grouped by multiset via repeated
/// wedge of singleton forms).
inline KForm power_brute(const KForm& w, int m) {
    KForm acc = KForm::constant(w.ambient(), Scalar(1));
    for (int i = 0; i < m; ++i) {
        KForm next(w.ambient(), acc.degree() + 2);
        for (const auto& [mw, cw] : w.terms()) {
            KForm t(w.ambient(), 2);
            t.set_coefficient(mw, cw);
            next = next + hodgeprobe::wedge(acc, t);
        }
        acc = next;
    }
    return acc;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    Rational rational(int lo = -5, int hi = 5, int den_max = 3) {
        std::uniform_int_distribution<int> num(lo, hi), den(1, den_max);
        Rational q(num(gen), den(gen));
        q.canonicalize();
        return q;
    }
    Scalar scalar(int lo = -5, int hi = 5) { return Scalar(rational(lo, hi)); }
    Vec vector(size_t n, int lo = -5, int hi = 5) {
        Vec v(n);
        for (auto& s : v) s = scalar(lo, hi);
        return v;
    }
    KForm form(int ambient, int degree, int nterms, int lo = -4, int hi = 4) {
        KForm f(ambient, degree);
        auto masks = hodgeprobe::subset_masks(ambient, degree);
        std::uniform_int_distribution<size_t> pick(0, masks.size() - 1);
        for (int t = 0; t < nterms; ++t) {
            uint64_t m = masks[pick(gen)];
            f.set_coefficient(m, f.coefficient(m) + scalar(lo, hi));
        }
        return f;
    }
};

} // namespace oracles
