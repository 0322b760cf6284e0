#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hodgeprobe/matrix.hpp"
#include "hodgeprobe/multi_index.hpp"

namespace hodgeprobe {

/// Term-count budget for expansion-heavy operations. Charges count every
/// candidate product/term materialized; overruns throw BudgetExceeded.
struct TermBudget {
    long long cap = 100000000; // default 10^8
    long long used = 0;
    void charge(long long n) {
        used += n;
        if (used > cap)
            throw BudgetExceeded("term budget exceeded: " + std::to_string(used) + " > " +
                                 std::to_string(cap));
    }
};

/// Translation-invariant alternating k-form on R^ambient, sparse over
/// strictly increasing multi-indices. Terms sorted by bitmask value,
/// no zero coefficients stored. Covariant multivectors share the layout.
class KForm {
public:
    KForm() = default;
    KForm(int ambient, int degree) : ambient_(ambient), degree_(degree) {
        if (ambient < 0 || ambient > 64) throw AmbientMismatch("ambient dimension must be in 0..64");
        if (degree < 0) throw DegreeMismatch("negative degree");
    }

    static KForm basis(int ambient, uint64_t mask) {
        KForm f(ambient, popcount(mask));
        f.terms_.emplace_back(mask, Scalar(1));
        return f;
    }
    static KForm constant(int ambient, const Scalar& c) {
        KForm f(ambient, 0);
        if (!c.is_zero()) f.terms_.emplace_back(0, c);
        return f;
    }

    int ambient() const { return ambient_; }
    int degree() const { return degree_; }
    const std::vector<std::pair<uint64_t, Scalar>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Scalar coefficient(uint64_t mask) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                                   [](const auto& t, uint64_t m) { return t.first < m; });
        if (it != terms_.end() && it->first == mask) return it->second;
        return Scalar(0);
    }

    void set_coefficient(uint64_t mask, const Scalar& c) {
        if (popcount(mask) != degree_) throw DegreeMismatch("mask length != degree");
        auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                                   [](const auto& t, uint64_t m) { return t.first < m; });
        if (it != terms_.end() && it->first == mask) {
            if (c.is_zero()) terms_.erase(it);
            else it->second = c;
        } else if (!c.is_zero()) {
            terms_.insert(it, {mask, c});
        }
    }

    /// Alternating evaluation on degree() many vectors.
    Scalar evaluate(const std::vector<Vec>& vectors) const {
        if (static_cast<int>(vectors.size()) != degree_)
            throw DegreeMismatch("evaluate: wrong number of arguments");
        for (const Vec& v : vectors)
            if (static_cast<int>(v.size()) != ambient_)
                throw AmbientMismatch("evaluate: vector of wrong dimension");
        Scalar acc;
        for (const auto& [mask, coeff] : terms_) {
            std::vector<int> rows = positions_of(mask);
            ExactMatrix sub(degree_, degree_);
            for (int i = 0; i < degree_; ++i)
                for (int j = 0; j < degree_; ++j) sub(i, j) = vectors[j][rows[i]];
            acc += coeff * det(std::move(sub));
        }
        return acc;
    }

    friend KForm operator+(const KForm& x, const KForm& y) {
        check_compatible(x, y);
        KForm r(x.ambient_, x.degree_);
        auto it = x.terms_.begin();
        auto jt = y.terms_.begin();
        while (it != x.terms_.end() || jt != y.terms_.end()) {
            if (jt == y.terms_.end() || (it != x.terms_.end() && it->first < jt->first)) {
                r.terms_.push_back(*it++);
            } else if (it == x.terms_.end() || jt->first < it->first) {
                r.terms_.push_back(*jt++);
            } else {
                Scalar s = it->second + jt->second;
                if (!s.is_zero()) r.terms_.emplace_back(it->first, std::move(s));
                ++it;
                ++jt;
            }
        }
        return r;
    }
    friend KForm operator-(const KForm& x, const KForm& y) { return x + (-y); }
    KForm operator-() const {
        KForm r(ambient_, degree_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }
    friend KForm operator*(const Scalar& s, const KForm& x) {
        KForm r(x.ambient_, x.degree_);
        if (s.is_zero()) return r;
        r.terms_.reserve(x.terms_.size());
        for (const auto& [m, c] : x.terms_) r.terms_.emplace_back(m, s * c);
        return r;
    }
    friend bool operator==(const KForm& x, const KForm& y) {
        return x.ambient_ == y.ambient_ && x.degree_ == y.degree_ && x.terms_ == y.terms_;
    }

    /// Canonical textual serialization: one line "i1,...,ik : scalar" per
    /// term in ascending bitmask order; "0" for the zero form.
    std::string canonical_text() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << "\n";
            first = false;
            os << mask_to_text(m) << " : " << c.str();
        }
        return os.str();
    }

    static KForm from_term_map(int ambient, int degree, std::map<uint64_t, Scalar> acc) {
        KForm r(ambient, degree);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
        return r;
    }

private:
    int ambient_ = 0;
    int degree_ = 0;
    std::vector<std::pair<uint64_t, Scalar>> terms_;

    static void check_compatible(const KForm& x, const KForm& y) {
        if (x.ambient_ != y.ambient_) throw AmbientMismatch("forms on different ambient spaces");
        if (x.degree_ != y.degree_) throw DegreeMismatch("forms of different degree");
    }
};

using Multivector = KForm;

inline KForm wedge(const KForm& a, const KForm& b, TermBudget* budget = nullptr) {
    if (a.ambient() != b.ambient()) throw AmbientMismatch("wedge: ambient mismatch");
    int deg = a.degree() + b.degree();
    if (deg > a.ambient()) return KForm(a.ambient(), deg); // silent vanishing
    if (budget) budget->charge(static_cast<long long>(a.term_count()) * b.term_count());
    std::map<uint64_t, Scalar> acc;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int sign = merge_sign(ma, mb);
            if (sign == 0) continue;
            Scalar v = ca * cb;
            if (sign < 0) v = -v;
            acc[ma | mb] += v;
        }
    return KForm::from_term_map(a.ambient(), deg, std::move(acc));
}

/// m-fold wedge power of a 2-form; power(w, 0) = 1.
inline KForm power(const KForm& w, int m, TermBudget* budget = nullptr) {
    if (w.degree() != 2) throw DegreeMismatch("power: base must have degree 2");
    KForm acc = KForm::constant(w.ambient(), Scalar(1));
    for (int i = 0; i < m; ++i) acc = wedge(acc, w, budget);
    return acc;
}

/// Interior product (contraction in the first slot) with a vector.
inline KForm interior(const Vec& v, const KForm& w) {
    if (w.degree() == 0) throw DegreeZero("interior product of a 0-form");
    if (static_cast<int>(v.size()) != w.ambient())
        throw AmbientMismatch("interior: vector dimension mismatch");
    std::map<uint64_t, Scalar> acc;
    for (const auto& [mask, coeff] : w.terms()) {
        uint64_t rest = mask;
        while (rest) {
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            if (v[p].is_zero()) continue;
            Scalar c = coeff * v[p];
            if (bits_below(mask, p) & 1) c = -c;
            acc[mask & ~(uint64_t(1) << p)] += c;
        }
    }
    return KForm::from_term_map(w.ambient(), w.degree() - 1, std::move(acc));
}

/// Pullback of a k-form along the linear map with matrix M (rows = source
/// coordinates of the form's space, cols = coordinates of the new domain):
/// (M^* w)(x_1, ..) = w(M x_1, ..). Coefficients are k x k minors of M.
inline KForm pullback_along(const ExactMatrix& m, const KForm& w) {
    if (static_cast<int>(m.rows()) != w.ambient())
        throw AmbientMismatch("pullback_along: matrix rows != form ambient");
    int k = w.degree();
    int target = static_cast<int>(m.cols());
    if (k == 0) {
        return KForm::constant(target, w.coefficient(0));
    }
    std::map<uint64_t, Scalar> acc;
    for (uint64_t km : subset_masks(target, k)) {
        std::vector<int> cols = positions_of(km);
        Scalar total;
        for (const auto& [mask, coeff] : w.terms()) {
            std::vector<int> rows = positions_of(mask);
            ExactMatrix sub(k, k);
            bool zero_row = false;
            for (int i = 0; i < k && !zero_row; ++i) {
                bool nz = false;
                for (int j = 0; j < k; ++j) {
                    sub(i, j) = m(rows[i], cols[j]);
                    if (!sub(i, j).is_zero()) nz = true;
                }
                if (!nz) zero_row = true;
            }
            if (zero_row) continue;
            Scalar d = det(std::move(sub));
            if (!d.is_zero()) total += coeff * d;
        }
        if (!total.is_zero()) acc[km] = std::move(total);
    }
    return KForm::from_term_map(target, k, std::move(acc));
}

/// KForm as an alternating coefficient matrix (degree 2 only):
/// W(i, j) = w(e_i, e_j), antisymmetric.
inline ExactMatrix two_form_matrix(const KForm& w) {
    if (w.degree() != 2) throw DegreeMismatch("two_form_matrix: degree must be 2");
    ExactMatrix m(w.ambient(), w.ambient());
    for (const auto& [mask, c] : w.terms()) {
        std::vector<int> ij = positions_of(mask);
        m(ij[0], ij[1]) = c;
        m(ij[1], ij[0]) = -c;
    }
    return m;
}

inline KForm two_form_from_matrix(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw Error("two_form_from_matrix: not square");
    KForm w(static_cast<int>(m.rows()), 2);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = i + 1; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) w.set_coefficient(mask_of({int(i), int(j)}), m(i, j));
    return w;
}

/// Parses one canonical line "i1,...,ik : scalar" (1-based indices).
inline KForm parse_kform_line(int ambient, const std::string& line) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("form term missing ':' in '" + line + "'");
    std::string idx = line.substr(0, colon);
    Scalar c = parse_scalar(line.substr(colon + 1));
    uint64_t mask = 0;
    int count = 0;
    std::istringstream is(idx);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = tok.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        int v = std::stoi(tok);
        if (v < 1 || v > ambient) throw ParseError("index out of range in '" + line + "'");
        uint64_t bit = uint64_t(1) << (v - 1);
        if (mask & bit) throw ParseError("repeated index in '" + line + "'");
        mask |= bit;
        ++count;
    }
    if (count == 0) throw ParseError("empty index list in '" + line + "'");
    KForm f(ambient, count);
    f.set_coefficient(mask, c);
    return f;
}

} // namespace hodgeprobe
