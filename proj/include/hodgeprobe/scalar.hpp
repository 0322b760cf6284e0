#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include "hodgeprobe/errors.hpp"

namespace hodgeprobe {

using Rational = mpq_class;
using Integer = mpz_class;

enum class TowerLevel { rational, quadratic, gaussian };

/// Element of the tower Q <= Q(sqrt(d)) <= Q(sqrt(d), i), stored as
/// a + b*sqrt(d) + c*i + e*i*sqrt(d) with exact rational components.
/// d is a square-free positive integer; scalars with no sqrt(d) component
/// carry d = 0 and combine freely with any quadratic field.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}
    Scalar(int v) : a_(v) {}
    Scalar(const Integer& v) : a_(v) {}
    Scalar(const Rational& v) : a_(v) {}

    static Scalar sqrt_d(long d) {
        Scalar s;
        s.b_ = 1;
        s.d_ = d;
        s.check_d();
        return s;
    }
    static Scalar imaginary_unit() {
        Scalar s;
        s.c_ = 1;
        return s;
    }
    static Scalar make(Rational a, Rational b, Rational c, Rational e, long d) {
        Scalar s;
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        s.c_ = std::move(c);
        s.e_ = std::move(e);
        s.d_ = d;
        s.canon();
        s.check_d();
        return s;
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& e() const { return e_; }
    long d() const { return d_; }

    TowerLevel level() const {
        if (c_ != 0 || e_ != 0) return TowerLevel::gaussian;
        if (b_ != 0) return TowerLevel::quadratic;
        return TowerLevel::rational;
    }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && e_ == 0; }
    bool is_rational() const { return level() == TowerLevel::rational; }
    // lies in the real subfield F = Q(sqrt(d))
    bool is_real() const { return c_ == 0 && e_ == 0; }
    bool is_integer() const { return is_rational() && a_.get_den() == 1; }

    const Rational& rational_value() const {
        if (!is_rational()) throw FieldMismatch("scalar is not rational: " + str());
        return a_;
    }
    Integer integer_value() const {
        if (!is_integer()) throw FieldMismatch("scalar is not an integer: " + str());
        return a_.get_num();
    }

    Scalar operator-() const { return raw(-a_, -b_, -c_, -e_, d_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        long d = merged_d(x, y);
        return raw(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.e_ + y.e_, d);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        long d = merged_d(x, y);
        Rational dr(d);
        // (a1 + b1 r + c1 i + e1 i r)(a2 + b2 r + c2 i + e2 i r), r = sqrt(d), r^2 = d
        Rational a = x.a_ * y.a_ + x.b_ * y.b_ * dr - x.c_ * y.c_ - x.e_ * y.e_ * dr;
        Rational b = x.a_ * y.b_ + x.b_ * y.a_ - x.c_ * y.e_ - x.e_ * y.c_;
        Rational c = x.a_ * y.c_ + x.c_ * y.a_ + (x.b_ * y.e_ + x.e_ * y.b_) * dr;
        Rational e = x.a_ * y.e_ + x.e_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
        return raw(std::move(a), std::move(b), std::move(c), std::move(e), d);
    }

    Scalar inverse() const {
        if (is_zero()) throw Degenerate("division by zero scalar");
        // z = x + i y with x, y in F; 1/z = conj(z) / (x^2 + y^2)
        Scalar x = real_part();
        Scalar y = imag_part();
        Scalar nrm = x * x + y * y; // in F, nonzero
        // 1/w for w = u + v sqrt(d): (u - v sqrt(d)) / (u^2 - d v^2)
        Rational den = nrm.a_ * nrm.a_ - Rational(nrm.d_) * nrm.b_ * nrm.b_;
        if (den == 0) throw Degenerate("field norm vanished; d is not square-free");
        Scalar nrm_inv = raw(nrm.a_ / den, -nrm.b_ / den, 0, 0, nrm.d_);
        return conj() * nrm_inv;
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.e_ == y.e_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // complex conjugation i -> -i
    Scalar conj() const { return raw(a_, b_, -c_, -e_, d_); }
    // Galois conjugation sqrt(d) -> -sqrt(d)
    Scalar quad_conj() const { return raw(a_, -b_, c_, -e_, d_); }

    Scalar real_part() const { return raw(a_, b_, 0, 0, d_); }
    Scalar imag_part() const { return raw(c_, e_, 0, 0, d_); }

    /// Exact sign of a real element a + b*sqrt(d) under the embedding sqrt(d) > 0.
    /// Decided by rationalizing: compare a^2 against d b^2 with the sign pattern of a, b.
    int sign_real() const {
        if (!is_real()) throw FieldMismatch("sign of a non-real scalar: " + str());
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational a2 = a_ * a_;
        Rational db2 = Rational(d_) * b_ * b_;
        if (a2 == db2) return 0; // impossible for square-free d > 1, kept for safety
        return a2 > db2 ? sa : sb;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const Rational& q, const char* unit) {
            if (q == 0) return;
            Rational v = q;
            if (!first) {
                os << (sgn(v) < 0 ? "-" : "+");
                if (sgn(v) < 0) v = -v;
            }
            first = false;
            if (unit[0] == '\0') {
                os << v;
            } else if (v == 1) {
                os << unit;
            } else if (v == -1) {
                os << "-" << unit;
            } else {
                os << v << "*" << unit;
            }
        };
        emit(a_, "");
        std::string r = "sqrt(" + std::to_string(d_) + ")";
        emit(b_, r.c_str());
        emit(c_, "i");
        emit(e_, ("i*" + r).c_str());
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    Rational a_, b_, c_, e_;
    long d_ = 0;

    static Scalar raw(Rational a, Rational b, Rational c, Rational e, long d) {
        Scalar s;
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        s.c_ = std::move(c);
        s.e_ = std::move(e);
        s.d_ = d;
        s.canon();
        return s;
    }

    void canon() {
        if (b_ == 0 && e_ == 0) d_ = 0;
    }

    void check_d() const {
        if (b_ == 0 && e_ == 0) return;
        if (d_ < 2) throw FieldMismatch("tower parameter d must be >= 2");
        for (long f = 2; f * f <= d_; ++f)
            if (d_ % (f * f) == 0) throw FieldMismatch("tower parameter d must be square-free");
    }

    static long merged_d(const Scalar& x, const Scalar& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0) return x.d_;
        if (x.d_ != y.d_)
            throw FieldMismatch("mixing sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                                std::to_string(y.d_) + ")");
        return x.d_;
    }
};

/// Parses "num", "num/den", "sqrt(d)", "i", products, sums and parentheses,
/// e.g. "1/2+3*sqrt(2)" or "-i". Grammar: sum of terms, term = product of factors.
class ScalarParser {
public:
    explicit ScalarParser(std::string text) : s_(std::move(text)) {}

    Scalar parse() {
        Scalar v = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    std::string s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("scalar '" + s_ + "': " + msg + " at offset " + std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool eat(char ch) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar parse_sum() {
        Scalar v = parse_term();
        for (;;) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }
    Scalar parse_term() {
        Scalar v = parse_factor();
        for (;;) {
            if (eat('*')) v *= parse_factor();
            else if (eat('/')) {
                Scalar w = parse_factor();
                if (w.is_zero()) fail("division by zero");
                v /= w;
            } else return v;
        }
    }
    Scalar parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('(')) {
            Scalar v = parse_sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        if (s_.compare(pos_, 5, "sqrt(") == 0) {
            pos_ += 5;
            long d = parse_long();
            if (!eat(')')) fail("missing ')' after sqrt");
            return Scalar::sqrt_d(d);
        }
        if (s_[pos_] == 'i' && (pos_ + 1 == s_.size() || !isalnum(s_[pos_ + 1]))) {
            ++pos_;
            return Scalar::imaginary_unit();
        }
        if (isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Integer num = parse_integer();
            return Scalar(Rational(num));
        }
        fail("unexpected character");
    }
    Integer parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(s_.substr(start, pos_ - start));
    }
    long parse_long() {
        Integer v = parse_integer();
        if (!v.fits_slong_p()) fail("integer too large");
        return v.get_si();
    }
};

inline Scalar parse_scalar(const std::string& text) { return ScalarParser(text).parse(); }

} // namespace hodgeprobe
