#pragma once

#include "ncq/rational.hpp"

#include <complex>
#include <string>
#include <string_view>

namespace ncq {

// Element a + b*w of Q(w), w a primitive cube root of unity (w^2 = -1 - w).
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(long v) : a_(v) {}
    Eisenstein(const Rational& a) : a_(a) {}
    Eisenstein(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Eisenstein omega() { return {Rational(0), Rational(1)}; }

    const Rational& real_part() const { return a_; }
    const Rational& omega_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    // Image under w -> w^2.
    Eisenstein conjugate() const { return {a_ - b_, -b_}; }
    // a^2 - ab + b^2, always >= 0.
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    Eisenstein inverse() const;

    std::complex<double> to_complex() const;

    Eisenstein& operator+=(const Eisenstein& o);
    Eisenstein& operator-=(const Eisenstein& o);
    Eisenstein& operator*=(const Eisenstein& o);
    Eisenstein& operator/=(const Eisenstein& o);

    friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
    friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
    friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
    friend Eisenstein operator/(Eisenstein x, const Eisenstein& y) { return x /= y; }
    friend Eisenstein operator-(const Eisenstein& x) { return {-x.a_, -x.b_}; }
    friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    Rational a_{0};
    Rational b_{0};
};

// Text form "p/q+r/s*w"; the parser also takes "p/q", "r/s*w", "w", "-w".
Eisenstein parse_eisenstein(std::string_view text);
std::string to_string(const Eisenstein& x);

}  // namespace ncq
