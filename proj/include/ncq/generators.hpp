#pragma once

#include "ncq/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

namespace ncq {

// Parameters an identity may draw on. Unused fields stay empty.
template <Field F>
struct Params {
    using field_type = F;
    std::size_t dim = 0;
    int n = 0;
    std::optional<Matrix<F>> A, B, C, D, Z;
    std::optional<Matrix<F>> E;  // central scalar matrix eI
    std::optional<Matrix<F>> W;  // commutes with A, B, D (PartiallyCommuting)
    std::optional<F> q;
    std::optional<F> d;  // the central scalar of CentralSum/CentralProduct/Rosengren
    std::vector<Matrix<F>> As, Bs, Cs;  // indexed families, length n+1
};

using ParamBundle = std::variant<Params<Rational>, Params<Eisenstein>, Params<Complex>>;

ScalarKind kind_of(const ParamBundle& p);

enum class FamilyName {
    Unconstrained,
    CentralSum,         // A + B - C = dI
    CentralProduct,     // B C^{-1} A = dI via B = d A^{-1} C
    Rosengren,          // the explicit 3x3 family over Q(w)
    ScalarCommutative,  // diagonal, so everything commutes
    PartiallyCommuting  // A, B, D, W polynomials in one matrix; C free
};

std::string_view family_name(FamilyName f);
FamilyName parse_family_name(std::string_view s);

struct ParamFamily {
    FamilyName name = FamilyName::Unconstrained;
    std::size_t dim = 2;
    ScalarKind kind = ScalarKind::Rational;
    int bound = 3;
    std::uint64_t seed = 0;
    int n = 0;  // length of the indexed families is n+1
};

inline constexpr int default_retries = 100;

// One deterministic draw. Rosengren requires the Eisenstein kind and dim 3.
ParamBundle sample(const ParamFamily& family);

template <Field F>
Params<F> sample_as(const ParamFamily& family) {
    return std::get<Params<F>>(sample(family));
}

// Seed of the a-th retry; attempt 0 keeps the seed unchanged.
std::uint64_t retry_seed(std::uint64_t seed, int attempt);

// Redraws (with retry_seed) until accept(params) holds.
template <class Accept>
ParamBundle sample_admissible(ParamFamily family, Accept accept, int attempts = default_retries) {
    const std::uint64_t base = family.seed;
    for (int a = 0; a < attempts; ++a) {
        family.seed = retry_seed(base, a);
        ParamBundle p = sample(family);
        if (accept(p)) return p;
    }
    throw ExhaustedRetries("no admissible parameters after " + std::to_string(attempts) + " draws");
}

// A commutes with B, C, D; B+C+D commutes with B, C, D; BCD = CDB = DBC.
template <Field F>
bool check_comrel(const Matrix<F>& a, const Matrix<F>& b, const Matrix<F>& c, const Matrix<F>& d,
                  double tol = 1e-12) {
    auto same = [tol](const Matrix<F>& x, const Matrix<F>& y) { return approx_equal(x, y, tol); };
    const Matrix<F> s = b + c + d;
    const Matrix<F> bcd = b * c * d;
    return same(a * b, b * a) && same(a * c, c * a) && same(a * d, d * a) && same(s * b, b * s) &&
           same(s * c, c * s) && same(s * d, d * s) && same(bcd, c * d * b) && same(bcd, d * b * c);
}

// A = aI and the B, C, D of the rotation family; b and c must be nonzero.
Params<Eisenstein> rosengren(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

}  // namespace ncq
