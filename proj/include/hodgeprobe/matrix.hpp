#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hodgeprobe/scalar.hpp"

namespace hodgeprobe {

using Vec = std::vector<Scalar>;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(size_t n) {
        ExactMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec row(size_t i) const {
        Vec r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vec col(size_t j) const {
        Vec c(rows_);
        for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool is_integral() const {
        for (const Scalar& s : a_)
            if (!s.is_integer()) return false;
        return true;
    }
    bool is_rational() const {
        for (const Scalar& s : a_)
            if (!s.is_rational()) return false;
        return true;
    }
    bool is_zero() const {
        for (const Scalar& s : a_)
            if (!s.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
        check_same_shape(x, y);
        ExactMatrix r(x.rows_, x.cols_);
        for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }
    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
        check_same_shape(x, y);
        ExactMatrix r(x.rows_, x.cols_);
        for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }
    ExactMatrix operator-() const {
        ExactMatrix r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
        return r;
    }
    friend ExactMatrix operator*(const Scalar& s, const ExactMatrix& x) {
        ExactMatrix r(x.rows_, x.cols_);
        for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = s * x.a_[k];
        return r;
    }
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
        if (x.cols_ != y.rows_) throw Error("matrix product shape mismatch");
        ExactMatrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const Scalar& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (size_t j = 0; j < y.cols_; ++j) {
                    const Scalar& ykj = y(k, j);
                    if (!ykj.is_zero()) r(i, j) += xik * ykj;
                }
            }
        return r;
    }
    friend Vec operator*(const ExactMatrix& x, const Vec& v) {
        if (x.cols_ != v.size()) throw Error("matrix-vector shape mismatch");
        Vec r(x.rows_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t j = 0; j < x.cols_; ++j)
                if (!x(i, j).is_zero() && !v[j].is_zero()) r[i] += x(i, j) * v[j];
        return r;
    }

    ExactMatrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
        ExactMatrix r(rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
        return r;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;

    static void check_same_shape(const ExactMatrix& x, const ExactMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix shape mismatch");
    }
};

inline ExactMatrix from_rows(const std::vector<Vec>& rows, size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("ragged row list");
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

/// In-place reduced row echelon form. Pivot rule: columns left to right,
/// first nonzero entry top-down among unused rows. Pivots normalized to 1.
/// Returns the pivot columns in order.
inline std::vector<size_t> rref(ExactMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(ExactMatrix m) { return rref(m).size(); }

/// Basis of {x : Mx = 0}, reduced echelon parametrization: one vector per
/// free column (ascending), with entry 1 at its free column.
inline std::vector<Vec> kernel_basis(ExactMatrix m) {
    size_t n = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Scalar det(ExactMatrix m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    size_t n = m.rows();
    Scalar d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * inv;
            for (size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    size_t n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) throw Degenerate("matrix is singular");
    ExactMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// One particular solution of Mx = b, or nullopt when inconsistent.
inline std::optional<Vec> solve(const ExactMatrix& m, const Vec& b) {
    if (m.rows() != b.size()) throw Error("solve shape mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
    return x;
}

/// Sylvester criterion over F with the embedding sqrt(d) > 0: all leading
/// principal minors positive. Decided from the pivots of symmetric
/// elimination (minor_k = product of the first k pivots).
inline bool is_positive_definite(ExactMatrix s) {
    if (s.rows() != s.cols()) throw NotSymmetric("matrix is not square");
    size_t n = s.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (s(i, j) != s(j, i)) throw NotSymmetric("matrix is not symmetric");
    for (size_t c = 0; c < n; ++c) {
        if (!s(c, c).is_real()) throw FieldMismatch("definiteness test needs real entries");
        int sign = s(c, c).sign_real();
        if (sign <= 0) return false;
        Scalar inv = s(c, c).inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (s(i, c).is_zero()) continue;
            Scalar f = s(i, c) * inv;
            for (size_t j = c; j < n; ++j)
                if (!s(c, j).is_zero()) s(i, j) -= f * s(c, j);
        }
    }
    return true;
}

/// Q-basis of span_Q(basis) intersected with Q^m: rational unknowns q_j in
/// x = sum q_j b_j, with every constraint split into its 1, sqrt(d), i and
/// i*sqrt(d) components; the sqrt(d), i, i*sqrt(d) components must vanish.
/// To intersect an F(i)-subspace with Q^m, expand the generating set with
/// expand_to_rational_span first.
inline std::vector<Vec> rational_points(const std::vector<Vec>& basis, size_t m) {
    if (basis.empty()) return {};
    for (const Vec& v : basis)
        if (v.size() != m) throw Error("rational_points: basis vector of wrong length");

    size_t k = basis.size();
    ExactMatrix sys(3 * m, k);
    for (size_t j = 0; j < k; ++j)
        for (size_t t = 0; t < m; ++t) {
            const Scalar& val = basis[j][t];
            sys(t, j) = Scalar(val.b());
            sys(m + t, j) = Scalar(val.c());
            sys(2 * m + t, j) = Scalar(val.e());
        }
    std::vector<Vec> qs = kernel_basis(std::move(sys));
    std::vector<Vec> points;
    for (const Vec& q : qs) {
        Vec x(m);
        for (size_t t = 0; t < m; ++t) {
            Scalar acc;
            for (size_t j = 0; j < k; ++j)
                if (!q[j].is_zero()) acc += basis[j][t] * q[j];
            if (acc.b() != 0 || acc.c() != 0 || acc.e() != 0)
                throw Error("rational_points: residual non-rational component");
            x[t] = acc;
        }
        points.push_back(std::move(x));
    }
    ExactMatrix rows = from_rows(points, m);
    rref(rows);
    std::vector<Vec> out;
    for (size_t i = 0; i < rows.rows(); ++i) {
        Vec r = rows.row(i);
        bool zero = true;
        for (const Scalar& s : r)
            if (!s.is_zero()) zero = false;
        if (!zero) out.push_back(std::move(r));
    }
    return out;
}

/// Generating set of the same point set viewed as a Q-space: each vector
/// multiplied by 1, sqrt(d), i, i*sqrt(d). Feeding the result to
/// rational_points computes span_{F(i)}(basis) intersect Q^m.
inline std::vector<Vec> expand_to_rational_span(const std::vector<Vec>& basis, long d) {
    std::vector<Scalar> mults = {Scalar(1), Scalar::imaginary_unit()};
    if (d != 0) {
        mults.push_back(Scalar::sqrt_d(d));
        mults.push_back(Scalar::imaginary_unit() * Scalar::sqrt_d(d));
    }
    std::vector<Vec> out;
    for (const Vec& b : basis)
        for (const Scalar& u : mults) {
            Vec v(b.size());
            for (size_t t = 0; t < b.size(); ++t) v[t] = b[t] * u;
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace hodgeprobe
