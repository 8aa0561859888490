#include "ncq/series.hpp"

#include <algorithm>

namespace ncq {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::OrdinaryI: return "OrdinaryI";
        case Family::OrdinaryII: return "OrdinaryII";
        case Family::BasicI: return "BasicI";
        case Family::BasicII: return "BasicII";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::OrdinaryI, Family::OrdinaryII, Family::BasicI, Family::BasicII})
        if (family_name(f) == name) return f;
    throw ParseError("unknown series family '" + std::string(name) + "'");
}

std::string_view orientation_name(Orientation o) {
    return o == Orientation::Normal ? "normal" : "reversed";
}

Orientation parse_orientation(std::string_view name) {
    if (name == "normal" || name == "Normal") return Orientation::Normal;
    if (name == "reversed" || name == "Reversed") return Orientation::Reversed;
    throw ParseError("unknown orientation '" + std::string(name) + "'");
}

Matrix<Complex> q_binomial_series(const Matrix<Complex>& a, const Matrix<Complex>& z, const BaseQ<Complex>& q) {
    return evaluate(SeriesSpec<Complex>{{a}, {}, z, q, Family::BasicI, Orientation::Normal, {}});
}

namespace {

double relative(const Matrix<Complex>& lhs, const Matrix<Complex>& rhs) {
    return frobenius_norm(lhs - rhs) / std::max(1.0, frobenius_norm(rhs));
}

}  // namespace

FunctionalResiduals functional_equation_residuals(const Matrix<Complex>& a, const Matrix<Complex>& z,
                                                  const BaseQ<Complex>& q) {
    const auto id = Matrix<Complex>::identity(a.dim());
    const auto f = q_binomial_series(a, z, q);
    const auto f_zq = q_binomial_series(a, z * q.value, q);
    const auto f_aq = q_binomial_series(a * q.value, z, q);
    FunctionalResiduals r;
    r.fq0 = relative(f, inverse(id - z) * (id - a * z) * f_zq);
    r.fq21 = relative(f, f_zq + f_aq * (id - a) * z);
    r.fq11 = relative(z * f, a * z * f_zq + f_aq * (id - a) * z);
    return r;
}

bool check_functional_equations(const Matrix<Complex>& a, const Matrix<Complex>& z, const BaseQ<Complex>& q,
                                double tol) {
    auto r = functional_equation_residuals(a, z, q);
    return r.fq0 <= tol && r.fq21 <= tol && r.fq11 <= tol;
}

}  // namespace ncq
