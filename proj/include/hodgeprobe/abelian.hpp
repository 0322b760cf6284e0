#pragma once

#include <map>
#include <string>

#include "hodgeprobe/exterior_maps.hpp"
#include "hodgeprobe/kform.hpp"
#include "hodgeprobe/span.hpp"

namespace hodgeprobe {

/// Lattice Z^{2n}, complex structure J over F, integral polarization E.
struct PolarizedAbelianVariety {
    int n = 0;
    ExactMatrix j;
    ExactMatrix e;
    std::string label;
    long d = 0; // field tower parameter; 0 when J is rational
};

struct AxiomReport {
    bool j_squares_to_minus_one = false;
    bool e_integral_alternating = false;
    bool e_j_invariant = false;
    bool positive_definite = false;
    std::string note;
    bool ok() const {
        return j_squares_to_minus_one && e_integral_alternating && e_j_invariant &&
               positive_definite;
    }
};

/// Checks the Riemann relations; reports per-axiom, never throws.
inline AxiomReport validate(const PolarizedAbelianVariety& a) {
    AxiomReport r;
    size_t n2 = 2 * static_cast<size_t>(a.n);
    if (a.n <= 0 || a.j.rows() != n2 || a.j.cols() != n2 || a.e.rows() != n2 ||
        a.e.cols() != n2) {
        r.note = "shape mismatch: J and E must be 2n x 2n";
        return r;
    }
    r.j_squares_to_minus_one = (a.j * a.j == -ExactMatrix::identity(n2));
    r.e_integral_alternating = a.e.is_integral() && (a.e == -(a.e.transpose()));
    r.e_j_invariant = (a.j.transpose() * a.e * a.j == a.e);
    try {
        ExactMatrix s = a.e * a.j; // S(x,y) = E(x, Jy) = (E J)_{xy}
        r.positive_definite = is_positive_definite(s);
    } catch (const NotSymmetric&) {
        r.positive_definite = false;
        r.note = "E(x, Jy) is not symmetric";
    }
    return r;
}

/// Kahler form normalized by omega(e_i, e_j) = E(e_i, e_j), i.e. the sum
/// over i < j only. (Summing over all ordered pairs would double every
/// coefficient; the evaluation-faithful convention is used throughout and
/// the discrepancy is flagged in reports.)
inline KForm kahler_form(const PolarizedAbelianVariety& a) {
    return two_form_from_matrix(a.e);
}

/// Greedy J-adapted real basis: picks standard basis vectors e_t, each
/// followed by J e_t, skipping anything already spanned. Returns the n
/// "complex" generators v_1, ..., v_n as matrix columns.
inline ExactMatrix complex_basis(const PolarizedAbelianVariety& a) {
    size_t n2 = 2 * static_cast<size_t>(a.n);
    std::vector<Vec> collected;
    std::vector<Vec> generators;
    auto spanned = [&](const Vec& v) {
        if (collected.empty()) return false;
        std::vector<Vec> rows = collected;
        size_t r0 = rank(from_rows(rows, n2));
        rows.push_back(v);
        return rank(from_rows(rows, n2)) == r0;
    };
    for (size_t t = 0; t < n2 && generators.size() < static_cast<size_t>(a.n); ++t) {
        Vec v(n2);
        v[t] = Scalar(1);
        if (spanned(v)) continue;
        Vec jv = a.j * v;
        collected.push_back(v);
        collected.push_back(jv);
        generators.push_back(std::move(v));
    }
    if (generators.size() != static_cast<size_t>(a.n))
        throw InvariantViolation("failed to build a J-adapted basis");
    ExactMatrix out(n2, a.n);
    for (size_t k = 0; k < generators.size(); ++k)
        for (size_t i = 0; i < n2; ++i) out(i, k) = generators[k][i];
    return out;
}

/// Hermitian metric H(x, y) = E(x, Jy) - i E(x, y) on the complex basis.
inline ExactMatrix hermitian_form(const PolarizedAbelianVariety& a) {
    ExactMatrix vb = complex_basis(a);
    Scalar iu = Scalar::imaginary_unit();
    ExactMatrix h(a.n, a.n);
    for (int k = 0; k < a.n; ++k)
        for (int l = 0; l < a.n; ++l) {
            Vec x = vb.col(k), y = vb.col(l);
            Vec jy = a.j * y;
            Scalar exjy, exy;
            for (size_t s = 0; s < x.size(); ++s)
                for (size_t t = 0; t < x.size(); ++t) {
                    if (x[s].is_zero()) continue;
                    if (!a.e(s, t).is_zero()) {
                        if (!jy[t].is_zero()) exjy += x[s] * a.e(s, t) * jy[t];
                        if (!y[t].is_zero()) exy += x[s] * a.e(s, t) * y[t];
                    }
                }
            h(k, l) = exjy - iu * exy;
        }
    return h;
}

/// Bidegree decomposition of complexified forms from the +-i eigenspace
/// splitting of J^T on the dual: (1,0)-forms satisfy phi(Jx) = i phi(x).
/// Wedge-eigenbasis change-of-basis matrices are built lazily per degree.
class BidegreeSolver {
public:
    explicit BidegreeSolver(const ExactMatrix& j) : j_(j), dim_(static_cast<int>(j.rows())) {
        Scalar iu = Scalar::imaginary_unit();
        ExactMatrix jt = j_.transpose();
        ExactMatrix holo_sys = jt - iu * ExactMatrix::identity(dim_);
        holo_ = kernel_basis(holo_sys);
        if (holo_.size() != static_cast<size_t>(dim_) / 2)
            throw InvariantViolation("J has wrong +i eigenspace dimension");
        for (const Vec& h : holo_) {
            Vec c(h.size());
            for (size_t t = 0; t < h.size(); ++t) c[t] = h[t].conj();
            anti_.push_back(std::move(c));
        }
    }

    int dim() const { return dim_; }

    /// Component of u in wedge^{a,b}; a + b must equal the degree of u.
    KForm component(const KForm& u, int a, int b) {
        if (a < 0 || b < 0 || a + b != u.degree())
            throw DegreeMismatch("bidegree_component: a + b must equal the degree");
        const DegreeData& dd = degree_data(u.degree());
        Vec coords(dd.basis_masks.size());
        for (size_t t = 0; t < dd.basis_masks.size(); ++t) coords[t] = u.coefficient(dd.basis_masks[t]);
        Vec c = dd.b_inverse * coords;
        KForm out(dim_, u.degree());
        auto range = dd.block_range.find({a, b});
        if (range == dd.block_range.end()) return out; // empty type block
        std::map<uint64_t, Scalar> acc;
        for (size_t col = range->second.first; col < range->second.second; ++col) {
            if (c[col].is_zero()) continue;
            for (size_t t = 0; t < dd.basis_masks.size(); ++t) {
                const Scalar& bt = dd.b_matrix(t, col);
                if (!bt.is_zero()) acc[dd.basis_masks[t]] += c[col] * bt;
            }
        }
        return KForm::from_term_map(dim_, u.degree(), std::move(acc));
    }

    /// Eigen-wedge basis forms of pure type (a, b), degree a + b.
    std::vector<KForm> type_basis(int a, int b) {
        const DegreeData& dd = degree_data(a + b);
        std::vector<KForm> out;
        auto range = dd.block_range.find({a, b});
        if (range == dd.block_range.end()) return out;
        for (size_t col = range->second.first; col < range->second.second; ++col) {
            KForm f(dim_, a + b);
            for (size_t t = 0; t < dd.basis_masks.size(); ++t)
                if (!dd.b_matrix(t, col).is_zero()) f.set_coefficient(dd.basis_masks[t], dd.b_matrix(t, col));
            out.push_back(std::move(f));
        }
        return out;
    }

private:
    ExactMatrix j_;
    int dim_;
    std::vector<Vec> holo_, anti_;

    struct DegreeData {
        std::vector<uint64_t> basis_masks;
        ExactMatrix b_matrix;  // columns: eigen-wedge forms in dx coordinates
        ExactMatrix b_inverse;
        std::map<std::pair<int, int>, std::pair<size_t, size_t>> block_range;
    };
    std::map<int, DegreeData> cache_;

    KForm covector_form(const Vec& c) const {
        KForm f(dim_, 1);
        for (int t = 0; t < dim_; ++t)
            if (!c[t].is_zero()) f.set_coefficient(uint64_t(1) << t, c[t]);
        return f;
    }

    const DegreeData& degree_data(int k) {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        DegreeData dd;
        dd.basis_masks = subset_masks(dim_, k);
        size_t nn = dd.basis_masks.size();
        dd.b_matrix = ExactMatrix(nn, nn);
        int half = dim_ / 2;
        size_t col = 0;
        for (int a = k; a >= 0; --a) {
            int b = k - a;
            if (a > half || b > half) continue;
            size_t start = col;
            for (uint64_t ha : subset_masks(half, a))
                for (uint64_t hb : subset_masks(half, b)) {
                    KForm f = KForm::constant(dim_, Scalar(1));
                    for (int t : positions_of(ha)) f = wedge(f, covector_form(holo_[t]));
                    for (int t : positions_of(hb)) f = wedge(f, covector_form(anti_[t]));
                    for (size_t t = 0; t < nn; ++t) dd.b_matrix(t, col) = f.coefficient(dd.basis_masks[t]);
                    ++col;
                }
            dd.block_range[{a, b}] = {start, col};
        }
        if (col != nn) throw InvariantViolation("bidegree basis is not complete");
        dd.b_inverse = inverse(dd.b_matrix);
        return cache_.emplace(k, std::move(dd)).first->second;
    }
};

inline KForm bidegree_component(const PolarizedAbelianVariety& a, const KForm& u, int p, int q) {
    BidegreeSolver solver(a.j);
    return solver.component(u, p, q);
}

struct HodgeBasis {
    int k = 0;
    std::vector<KForm> classes; // rational, echelonized
    size_t dim() const { return classes.size(); }
};

/// Q-basis of rational 2k-forms of pure type (k, k): rational points of the
/// span of the (k,k) eigen-wedge block over F(i).
inline HodgeBasis rational_hodge_classes(const PolarizedAbelianVariety& a, int k) {
    if (k < 0 || k > a.n) throw DegreeMismatch("rational_hodge_classes: need 0 <= k <= n");
    HodgeBasis out;
    out.k = k;
    int n2 = 2 * a.n;
    if (k == 0) {
        out.classes.push_back(KForm::constant(n2, Scalar(1)));
        return out;
    }
    BidegreeSolver solver(a.j);
    std::vector<KForm> tb = solver.type_basis(k, k);
    std::vector<uint64_t> masks = subset_masks(n2, 2 * k);
    std::vector<Vec> coords;
    for (const KForm& f : tb) {
        Vec v(masks.size());
        for (size_t t = 0; t < masks.size(); ++t) v[t] = f.coefficient(masks[t]);
        coords.push_back(std::move(v));
    }
    std::vector<Vec> pts = rational_points(expand_to_rational_span(coords, a.d), masks.size());
    for (const Vec& p : pts) {
        KForm f(n2, 2 * k);
        for (size_t t = 0; t < masks.size(); ++t)
            if (!p[t].is_zero()) f.set_coefficient(masks[t], p[t]);
        out.classes.push_back(std::move(f));
    }
    return out;
}

/// Rank of u -> u ^ omega^{(p-1)/2} from 1-forms to p-forms; hard Lefschetz
/// predicts 2n below the middle degree.
inline size_t lefschetz_rank(const PolarizedAbelianVariety& a, int p) {
    if (p % 2 == 0 || p >= 2 * a.n) throw DegreeMismatch("lefschetz_rank: p odd, p < 2n");
    int n2 = 2 * a.n;
    KForm lef = power(kahler_form(a), (p - 1) / 2);
    std::vector<uint64_t> masks = subset_masks(n2, p);
    ExactMatrix m(masks.size(), n2);
    for (int j = 0; j < n2; ++j) {
        KForm img = wedge(KForm::basis(n2, uint64_t(1) << j), lef);
        for (size_t t = 0; t < masks.size(); ++t) m(t, j) = img.coefficient(masks[t]);
    }
    return rank(m);
}

/// Enumerates multisets {i_1 <= ... <= i_m} over {0..s-1} in lexicographic
/// order, invoking fn on each; fn returning false stops the enumeration.
template <typename Fn>
void for_each_multiset(size_t s, size_t m, Fn&& fn) {
    if (s == 0 || m == 0) return;
    std::vector<size_t> idx(m, 0);
    for (;;) {
        if (!fn(idx)) return;
        size_t pos = m;
        while (pos > 0) {
            --pos;
            if (idx[pos] + 1 < s) {
                ++idx[pos];
                for (size_t q = pos + 1; q < m; ++q) idx[q] = idx[pos];
                break;
            }
            if (pos == 0) return;
        }
    }
}

/// Q-span of all m-fold wedge products of the rational (1,1) basis.
struct DivisorPowerSpan {
    FormSpan span;
    int degree = 0;
    size_t dim() const { return span.dim(); }
};

inline DivisorPowerSpan divisor_power_span(const PolarizedAbelianVariety& a, int m,
                                           const HodgeBasis& h11) {
    if (m < 0 || m > a.n) throw DegreeMismatch("divisor_power_span: need 0 <= m <= n");
    DivisorPowerSpan out;
    out.degree = 2 * m;
    if (m == 0) {
        out.span.insert_form(KForm::constant(2 * a.n, Scalar(1)));
        return out;
    }
    for_each_multiset(h11.classes.size(), static_cast<size_t>(m), [&](const std::vector<size_t>& idx) {
        KForm prod = h11.classes[idx[0]];
        for (size_t t = 1; t < idx.size(); ++t) prod = wedge(prod, h11.classes[idx[t]]);
        if (!prod.is_zero()) out.span.insert_form(prod);
        return true;
    });
    return out;
}

inline DivisorPowerSpan divisor_power_span(const PolarizedAbelianVariety& a, int m) {
    return divisor_power_span(a, m, rational_hodge_classes(a, 1));
}

// --- built-in catalog ---

inline PolarizedAbelianVariety product_variety(const PolarizedAbelianVariety& x,
                                               const PolarizedAbelianVariety& y,
                                               const std::string& label) {
    PolarizedAbelianVariety out;
    out.n = x.n + y.n;
    out.label = label;
    out.d = x.d != 0 ? x.d : y.d;
    if (x.d != 0 && y.d != 0 && x.d != y.d) throw FieldMismatch("product over mixed fields");
    size_t a = 2 * x.n, b = 2 * y.n;
    out.j = ExactMatrix(a + b, a + b);
    out.e = ExactMatrix(a + b, a + b);
    for (size_t i = 0; i < a; ++i)
        for (size_t jj = 0; jj < a; ++jj) {
            out.j(i, jj) = x.j(i, jj);
            out.e(i, jj) = x.e(i, jj);
        }
    for (size_t i = 0; i < b; ++i)
        for (size_t jj = 0; jj < b; ++jj) {
            out.j(a + i, a + jj) = y.j(i, jj);
            out.e(a + i, a + jj) = y.e(i, jj);
        }
    return out;
}

inline PolarizedAbelianVariety variety_power(const PolarizedAbelianVariety& x, int k,
                                             const std::string& label) {
    PolarizedAbelianVariety out = x;
    for (int i = 1; i < k; ++i) out = product_variety(out, x, label);
    out.label = label;
    return out;
}

inline PolarizedAbelianVariety make_a1() {
    PolarizedAbelianVariety a;
    a.n = 1;
    a.label = "A1";
    a.j = ExactMatrix(2, 2);
    a.j(0, 1) = Scalar(-1);
    a.j(1, 0) = Scalar(1);
    a.e = ExactMatrix(2, 2);
    a.e(0, 1) = Scalar(1);
    a.e(1, 0) = Scalar(-1);
    return a;
}

inline PolarizedAbelianVariety make_b2() {
    // abelian surface with elementary divisors (1, 2) in a quasi-symplectic basis
    PolarizedAbelianVariety a;
    a.n = 2;
    a.label = "B2";
    a.j = ExactMatrix(4, 4);
    a.j(2, 0) = Scalar(1);
    a.j(3, 1) = Scalar(1);
    a.j(0, 2) = Scalar(-1);
    a.j(1, 3) = Scalar(-1);
    a.e = ExactMatrix(4, 4);
    a.e(0, 2) = Scalar(1);
    a.e(2, 0) = Scalar(-1);
    a.e(1, 3) = Scalar(2);
    a.e(3, 1) = Scalar(-2);
    return a;
}

inline PolarizedAbelianVariety make_sqrt2_surface() {
    // product of a Q(sqrt 2)-structure elliptic curve with A1
    PolarizedAbelianVariety c;
    c.n = 1;
    c.label = "C_sqrt2";
    c.d = 2;
    Scalar rt2 = Scalar::sqrt_d(2);
    c.j = ExactMatrix(2, 2);
    c.j(0, 0) = rt2;
    c.j(0, 1) = Scalar(-3);
    c.j(1, 0) = Scalar(1);
    c.j(1, 1) = -rt2;
    c.e = ExactMatrix(2, 2);
    c.e(0, 1) = Scalar(1);
    c.e(1, 0) = Scalar(-1);
    PolarizedAbelianVariety s = product_variety(c, make_a1(), "S_sqrt2");
    s.d = 2;
    return s;
}

inline const std::vector<std::string>& catalog_labels() {
    static const std::vector<std::string> labels = {"A1", "A2", "A3", "B2", "S_sqrt2"};
    return labels;
}

inline PolarizedAbelianVariety catalog_get(const std::string& label) {
    if (label == "A1") return make_a1();
    if (label == "A2") return variety_power(make_a1(), 2, "A2");
    if (label == "A3") return variety_power(make_a1(), 3, "A3");
    if (label == "B2") return make_b2();
    if (label == "S_sqrt2") return make_sqrt2_surface();
    throw UnknownLabel("unknown catalog label: " + label);
}

} // namespace hodgeprobe
