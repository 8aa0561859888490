#pragma once

#include "ncq/factorials.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ncq {

struct Truncation {
    enum class Kind { Auto, MaxTerms, Tolerance };
    Kind kind = Kind::Auto;
    std::size_t max_terms = 10000;
    double tol = 1e-14;

    static Truncation automatic() { return {}; }
    static Truncation terms(std::size_t n) { return {Kind::MaxTerms, n, 1e-14}; }
    static Truncation tolerance(double t, std::size_t cap = 10000) { return {Kind::Tolerance, cap, t}; }
};

// uppers has one more entry than lowers; the missing lower is I (ordinary)
// or Q (basic), appended when summands are formed.
template <Field F>
struct SeriesSpec {
    std::vector<Matrix<F>> uppers;
    std::vector<Matrix<F>> lowers;
    Matrix<F> argument;
    std::optional<BaseQ<F>> base;
    Family family = Family::OrdinaryI;
    Orientation orientation = Orientation::Normal;
    Truncation truncation;

    std::size_t dim() const { return argument.dim(); }
};

struct TerminationInfo {
    bool terminating = false;
    std::int64_t order = 0;
};

inline constexpr std::int64_t default_termination_bound = 64;

// Smallest n <= bound such that some upper is exactly -nI (ordinary) or q^{-n}I (basic).
template <Field F>
TerminationInfo detect_termination(const SeriesSpec<F>& spec, std::int64_t bound = default_termination_bound) {
    const bool basic = is_basic(spec.family);
    if (basic && !spec.base) return {};
    std::optional<QPowers<F>> qp;
    if (basic) qp.emplace(spec.base->value);
    for (std::int64_t n = 0; n <= bound; ++n) {
        F target = basic ? (*qp)(-n) : F(-n);
        for (const auto& a : spec.uppers)
            if (a.is_scalar(target)) return {true, n};
    }
    return {};
}

template <Field F>
FactorialSpec<F> summand_factorial(const SeriesSpec<F>& spec, std::int64_t k) {
    if (spec.uppers.size() != spec.lowers.size() + 1)
        throw DimensionMismatch("series: need exactly one more upper than lowers");
    if (is_basic(spec.family) && !spec.base) throw BadConfig("basic series needs a base q");
    FactorialSpec<F> f{spec.uppers, spec.lowers, spec.argument, spec.base, spec.family, spec.orientation, k};
    f.lowers.push_back(is_basic(spec.family) ? spec.base->embed(spec.dim()) : Matrix<F>::identity(spec.dim()));
    return f;
}

// The k-th term, evaluated directly from the factorial (not incrementally).
template <Field F>
Matrix<F> summand(const SeriesSpec<F>& spec, std::int64_t k) {
    return shifted_factorial(summand_factorial(spec, k));
}

template <Field F>
struct SeriesResult {
    Matrix<F> sum;
    std::size_t terms = 0;
    TerminationInfo termination;
};

template <Field F>
SeriesResult<F> evaluate_detailed(const SeriesSpec<F>& spec) {
    FactorialSpec<F> fs = summand_factorial(spec, 0);
    detail::validate(fs);
    const TerminationInfo term = detect_termination(spec);
    const Truncation& tr = spec.truncation;

    std::size_t cap = 0;
    bool until_small = false;
    if (term.terminating) {
        cap = static_cast<std::size_t>(term.order) + 1;
        if (tr.kind == Truncation::Kind::MaxTerms) cap = std::min(cap, tr.max_terms);
    } else if (tr.kind == Truncation::Kind::MaxTerms) {
        cap = tr.max_terms;
    } else {
        if constexpr (FieldTraits<F>::exact)
            throw NonConvergent("nonterminating series over an exact field needs an explicit term count");
        if (frobenius_norm(spec.argument) >= 1.0) throw NonConvergent("nonterminating series needs ||Z|| < 1");
        cap = tr.max_terms;
        until_small = true;
    }

    detail::Pairs<F> pairs(fs);
    // Each new summand extends the previous one by one block on the side the
    // definition prescribes.
    const bool left = pairs.block_index(1, 2) == 1;
    Matrix<F> term_k = Matrix<F>::identity(spec.dim());
    SeriesResult<F> out{Matrix<F>::zero(spec.dim()), 0, term};
    int small = 0;
    for (std::size_t k = 0; k < cap; ++k) {
        if (k > 0) {
            Matrix<F> b = pairs.oriented_block(static_cast<std::int64_t>(k - 1));
            term_k = left ? b * term_k : term_k * b;
        }
        out.sum += term_k;
        out.terms = k + 1;
        if (until_small) {
            small = frobenius_norm(term_k) < tr.tol ? small + 1 : 0;
            if (small == 3) return out;
        }
    }
    if (until_small) throw TermCapExceeded("series did not converge within " + std::to_string(cap) + " terms");
    return out;
}

template <Field F>
Matrix<F> evaluate(const SeriesSpec<F>& spec) {
    return evaluate_detailed(spec).sum;
}

// Type I 1phi0 f(A, Z) = sum_k [A; Q; Z]_k, the function in the q-binomial theorem.
Matrix<Complex> q_binomial_series(const Matrix<Complex>& a, const Matrix<Complex>& z, const BaseQ<Complex>& q);

struct FunctionalResiduals {
    double fq0 = 0;   // f(A,Z) = (I-Z)^{-1}(I-AZ) f(A,ZQ)
    double fq21 = 0;  // f(A,Z) = f(A,ZQ) + f(AQ,Z)(I-A)Z
    double fq11 = 0;  // Z f(A,Z) = AZ f(A,ZQ) + f(AQ,Z)(I-A)Z
};

FunctionalResiduals functional_equation_residuals(const Matrix<Complex>& a, const Matrix<Complex>& z,
                                                  const BaseQ<Complex>& q);
bool check_functional_equations(const Matrix<Complex>& a, const Matrix<Complex>& z, const BaseQ<Complex>& q,
                                double tol);

// Shorthands for summing a terminating (or truncated) series with default truncation.
template <Field F>
Matrix<F> sum_ordinary(Family fam, const std::type_identity_t<std::vector<Matrix<F>>>& ups,
                       const std::type_identity_t<std::vector<Matrix<F>>>& lows, const Matrix<F>& z,
                       Orientation o = Orientation::Normal) {
    return evaluate(SeriesSpec<F>{ups, lows, z, std::nullopt, fam, o, {}});
}

template <Field F>
Matrix<F> sum_basic(Family fam, const std::type_identity_t<std::vector<Matrix<F>>>& ups,
                    const std::type_identity_t<std::vector<Matrix<F>>>& lows, const std::type_identity_t<F>& q,
                    const Matrix<F>& z) {
    return evaluate(SeriesSpec<F>{ups, lows, z, BaseQ<F>{q}, fam, Orientation::Normal, {}});
}

}  // namespace ncq
