#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "waring/rational.hpp"

namespace waring {

// Element a + b·√d of a quadratic extension of the rationals. d is a fixed
// non-square integer; d = -1 gives the Gaussian rationals. A purely rational
// value carries the sentinel d = 0 and mixes with any radicand, so integer
// literals and Rational values embed without ceremony. Two values with
// b ≠ 0 combine only when their radicands agree.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long n) : a_(n) {}
    QuadExt(Rational a) : a_(std::move(a)) {}
    QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_.is_zero()) {
            d_ = 0;
        } else {
            check_radicand(d_);
        }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    // a² − d·b², the product with the conjugate. Nonzero whenever the
    // value is nonzero, since d is not a square.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt& operator+=(const QuadExt& o) {
        d_ = reconcile(d_, o.d_);
        a_ += o.a_;
        b_ += o.b_;
        if (b_.is_zero()) d_ = 0;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) { return *this += -o; }
    QuadExt& operator*=(const QuadExt& o) {
        long d = reconcile(d_, o.d_);
        Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        d_ = b_.is_zero() ? 0 : d;
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        if (o.is_zero()) throw std::domain_error("QuadExt: division by zero");
        Rational n = o.norm();
        *this *= o.conj();
        a_ /= n;
        b_ /= n;
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Throws for a genuinely complex value (b ≠ 0 with d < 0).
    double to_double() const {
        if (b_.is_zero()) return a_.to_double();
        if (d_ < 0) throw std::domain_error("QuadExt: complex value has no real embedding");
        return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
    }

    std::complex<double> to_complex() const {
        if (d_ >= 0) return {to_double(), 0.0};
        return {a_.to_double(), b_.to_double() * std::sqrt(static_cast<double>(-d_))};
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::ostringstream os;
        if (!a_.is_zero()) os << a_.str() << (b_.sign() < 0 ? "-" : "+");
        else if (b_.sign() < 0) os << "-";
        Rational ab = waring::abs(b_);
        if (ab != Rational(1)) os << ab.str() << "*";
        os << "sqrt(" << d_ << ")";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
        return os << x.str();
    }

private:
    static void check_radicand(long d) {
        if (d == 0 || d == 1) throw std::invalid_argument("QuadExt: radicand must not be a square");
        if (d > 1) {
            long r = std::lround(std::sqrt(static_cast<double>(d)));
            if (r * r == d) throw std::invalid_argument("QuadExt: radicand must not be a square");
        }
    }
    static long reconcile(long d1, long d2) {
        if (d1 == 0) return d2;
        if (d2 == 0 || d1 == d2) return d1;
        throw std::domain_error("QuadExt: mismatched radicands");
    }

    Rational a_;
    Rational b_;
    long d_ = 0;
};

}  // namespace waring
