#include "ncq/any_matrix.hpp"
#include "ncq/eisenstein.hpp"
#include "ncq/field.hpp"
#include "ncq/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace ncq {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

double parse_double(std::string_view s) {
    s = trim(s);
    double v = 0.0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad real number '" + std::string(s) + "'");
    return v;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("bad rational '" + std::string(text) + "'");
    Rational r;
    r.get_num() = mpz_class(std::string(num));
    r.get_den() = mpz_class(std::string(den));
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Eisenstein Eisenstein::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw Singular("division by zero in Q(w)");
    Eisenstein c = conjugate();
    return {c.a_ / n, c.b_ / n};
}

std::complex<double> Eisenstein::to_complex() const {
    const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
    return a_.get_d() + b_.get_d() * w;
}

Eisenstein& Eisenstein::operator+=(const Eisenstein& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Eisenstein& Eisenstein::operator-=(const Eisenstein& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

// (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
    if (sgn(o.b_) == 0) {
        a_ *= o.a_;
        b_ *= o.a_;
        return *this;
    }
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ - bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

Eisenstein& Eisenstein::operator/=(const Eisenstein& o) {
    if (sgn(o.b_) == 0) {
        if (sgn(o.a_) == 0) throw Singular("division by zero in Q(w)");
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

Eisenstein parse_eisenstein(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty Q(w) element");
    if (s.back() != 'w') return Eisenstein(parse_rational(s));
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            split = i;
            break;
        }
    std::string real = split == std::string::npos ? "0" : s.substr(0, split);
    std::string coef = split == std::string::npos ? s : s.substr(split);
    if (coef.empty() || coef == "+") coef = "1";
    if (coef == "-") coef = "-1";
    try {
        return {parse_rational(real), parse_rational(coef)};
    } catch (const ParseError&) {
        throw ParseError("bad Q(w) element '" + std::string(text) + "'");
    }
}

std::string to_string(const Eisenstein& x) {
    const Rational& a = x.real_part();
    const Rational& b = x.omega_part();
    if (sgn(b) == 0) return to_string(a);
    std::string w = to_string(abs(b)) + "*w";
    if (sgn(a) == 0) return (sgn(b) < 0 ? "-" : "") + w;
    return to_string(a) + (sgn(b) < 0 ? "-" : "+") + w;
}

std::string_view kind_name(ScalarKind k) {
    switch (k) {
        case ScalarKind::Rational: return "rational";
        case ScalarKind::Eisenstein: return "eisenstein";
        case ScalarKind::ComplexFloat: return "complex";
    }
    return "?";
}

ScalarKind parse_kind(std::string_view name) {
    if (name == "rational") return ScalarKind::Rational;
    if (name == "eisenstein") return ScalarKind::Eisenstein;
    if (name == "complex") return ScalarKind::ComplexFloat;
    throw ParseError("unknown scalar kind '" + std::string(name) + "'");
}

Complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty complex number");
    if (s.front() != '(') return {parse_double(s), 0.0};
    if (s.back() != ')') throw ParseError("bad complex '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError("bad complex '" + std::string(text) + "'");
    return {parse_double(s.substr(0, comma)), parse_double(s.substr(comma + 1))};
}

std::string to_string(const Complex& x) {
    return "(" + format_double(x.real()) + "," + format_double(x.imag()) + ")";
}

ScalarKind kind_of(const AnyMatrix& m) {
    return std::visit([](const auto& x) { return FieldTraits<typename std::decay_t<decltype(x)>::field_type>::kind; }, m);
}

std::size_t dim_of(const AnyMatrix& m) {
    return std::visit([](const auto& x) { return x.dim(); }, m);
}

namespace {

template <class Op>
AnyMatrix combine(const AnyMatrix& a, const AnyMatrix& b, const char* what, Op op) {
    if (a.index() != b.index())
        throw KindMismatch(std::string(what) + ": " + std::string(kind_name(kind_of(a))) + " vs " +
                           std::string(kind_name(kind_of(b))));
    return std::visit(
        [&](const auto& x) -> AnyMatrix {
            using M = std::decay_t<decltype(x)>;
            return op(x, std::get<M>(b));
        },
        a);
}

}  // namespace

AnyMatrix add(const AnyMatrix& a, const AnyMatrix& b) {
    return combine(a, b, "add", [](const auto& x, const auto& y) { return x + y; });
}

AnyMatrix multiply(const AnyMatrix& a, const AnyMatrix& b) {
    return combine(a, b, "multiply", [](const auto& x, const auto& y) { return x * y; });
}

AnyMatrix inverse(const AnyMatrix& m) {
    return std::visit([](const auto& x) -> AnyMatrix { return inverse(x); }, m);
}

nlohmann::json to_json(const AnyMatrix& m) {
    return std::visit(
        [](const auto& x) {
            using F = typename std::decay_t<decltype(x)>::field_type;
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < x.dim(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t j = 0; j < x.dim(); ++j) row.push_back(FieldTraits<F>::format(x(i, j)));
                rows.push_back(std::move(row));
            }
            return nlohmann::json{{"kind", kind_name(FieldTraits<F>::kind)}, {"dim", x.dim()}, {"entries", rows}};
        },
        m);
}

namespace {

template <Field F>
F scalar_from_json(const nlohmann::json& v) {
    if (v.is_string()) return FieldTraits<F>::parse(v.get<std::string>());
    if constexpr (std::is_same_v<F, Complex>) {
        if (v.is_number()) return {v.get<double>(), 0.0};
    } else {
        if (v.is_number_integer()) return F(Rational(v.get<long>()));
    }
    throw ParseError("bad matrix entry " + v.dump());
}

template <Field F>
Matrix<F> entries_from_json(const nlohmann::json& entries, std::size_t n) {
    if (!entries.is_array() || entries.size() != n)
        throw DimensionMismatch("matrix JSON: expected " + std::to_string(n) + " rows");
    Matrix<F> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != n)
            throw DimensionMismatch("matrix JSON: row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar_from_json<F>(row[j]);
    }
    return m;
}

}  // namespace

AnyMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("entries"))
        throw ParseError("matrix JSON needs \"kind\" and \"entries\"");
    ScalarKind kind = parse_kind(j.at("kind").get<std::string>());
    const auto& entries = j.at("entries");
    std::size_t n = j.contains("dim") ? j.at("dim").get<std::size_t>() : entries.size();
    if (n == 0) throw DimensionMismatch("matrix JSON: dim must be positive");
    switch (kind) {
        case ScalarKind::Rational: return entries_from_json<Rational>(entries, n);
        case ScalarKind::Eisenstein: return entries_from_json<Eisenstein>(entries, n);
        case ScalarKind::ComplexFloat: return entries_from_json<Complex>(entries, n);
    }
    throw ParseError("unreachable");
}

nlohmann::json parse_json_text(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("invalid JSON", line, col);
    }
}

}  // namespace ncq
