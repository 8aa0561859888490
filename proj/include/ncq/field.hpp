#pragma once

#include "ncq/eisenstein.hpp"
#include "ncq/rational.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace ncq {

using Complex = std::complex<double>;

enum class ScalarKind { Rational, Eisenstein, ComplexFloat };

std::string_view kind_name(ScalarKind k);
ScalarKind parse_kind(std::string_view name);

Complex parse_complex(std::string_view text);
std::string to_string(const Complex& x);

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr ScalarKind kind = ScalarKind::Rational;
    static constexpr bool exact = true;
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
    static Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
    static Rational parse(std::string_view s) { return parse_rational(s); }
    static std::string format(const Rational& x) { return to_string(x); }
};

template <>
struct FieldTraits<Eisenstein> {
    static constexpr ScalarKind kind = ScalarKind::Eisenstein;
    static constexpr bool exact = true;
    static Eisenstein from_rational(const Rational& r) { return Eisenstein(r); }
    static bool is_zero(const Eisenstein& x) { return x.is_zero(); }
    static double magnitude(const Eisenstein& x) { return std::sqrt(x.norm().get_d()); }
    static Complex to_complex(const Eisenstein& x) { return x.to_complex(); }
    static Eisenstein parse(std::string_view s) { return parse_eisenstein(s); }
    static std::string format(const Eisenstein& x) { return to_string(x); }
};

template <>
struct FieldTraits<Complex> {
    static constexpr ScalarKind kind = ScalarKind::ComplexFloat;
    static constexpr bool exact = false;
    static Complex from_rational(const Rational& r) { return {r.get_d(), 0.0}; }
    static bool is_zero(const Complex& x) { return x == Complex{}; }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static Complex to_complex(const Complex& x) { return x; }
    static Complex parse(std::string_view s) { return parse_complex(s); }
    static std::string format(const Complex& x) { return to_string(x); }
};

template <class F>
concept Field = requires { FieldTraits<F>::kind; };

template <Field F>
F from_rational(const Rational& r) { return FieldTraits<F>::from_rational(r); }

template <Field F>
F inverse(const F& x) { return F(1) / x; }

}  // namespace ncq
