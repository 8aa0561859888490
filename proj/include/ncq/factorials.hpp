#pragma once

#include "ncq/nc_product.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace ncq {

enum class Family { OrdinaryI, OrdinaryII, BasicI, BasicII };
enum class Orientation { Normal, Reversed };

inline bool is_basic(Family f) { return f == Family::BasicI || f == Family::BasicII; }
inline bool is_type_one(Family f) { return f == Family::OrdinaryI || f == Family::BasicI; }

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
std::string_view orientation_name(Orientation o);
Orientation parse_orientation(std::string_view name);

// The base Q = qI. Being scalar it commutes with everything, so only q is stored.
template <Field F>
struct BaseQ {
    F value;
    Matrix<F> embed(std::size_t n) const { return Matrix<F>::scalar(n, value); }
    double modulus() const { return FieldTraits<F>::magnitude(value); }
};

template <Field F>
struct FactorialSpec {
    std::vector<Matrix<F>> uppers;
    std::vector<Matrix<F>> lowers;
    Matrix<F> argument;
    std::optional<BaseQ<F>> base;
    Family family = Family::OrdinaryI;
    Orientation orientation = Orientation::Normal;
    std::optional<std::int64_t> length = 0;  // nullopt: infinite

    std::size_t dim() const { return argument.dim(); }
};

// q^m for integer m, built by repeated multiplication and cached.
template <Field F>
class QPowers {
public:
    explicit QPowers(F q) : up_{F(1), q} {}

    const F& operator()(std::int64_t m) {
        if (m >= 0) {
            while (up_.size() <= static_cast<std::size_t>(m)) up_.push_back(up_.back() * up_[1]);
            return up_[m];
        }
        if (down_.empty()) {
            if (FieldTraits<F>::is_zero(up_[1])) throw Singular("negative power of zero base");
            down_ = {F(1), F(1) / up_[1]};
        }
        while (down_.size() <= static_cast<std::size_t>(-m)) down_.push_back(down_.back() * down_[1]);
        return down_[-m];
    }

private:
    std::vector<F> up_;
    std::vector<F> down_;
};

namespace detail {

template <Field F>
void validate(const FactorialSpec<F>& s) {
    if (s.uppers.size() != s.lowers.size())
        throw DimensionMismatch("factorial: " + std::to_string(s.uppers.size()) + " uppers vs " +
                                std::to_string(s.lowers.size()) + " lowers");
    const std::size_t n = s.argument.dim();
    if (n == 0) throw DimensionMismatch("factorial: empty argument");
    for (const auto* list : {&s.uppers, &s.lowers})
        for (const auto& m : *list)
            if (m.dim() != n) throw DimensionMismatch("factorial: parameter dim differs from argument dim");
    if (is_basic(s.family) && !s.base) throw BadConfig("basic factorial needs a base q");
}

// The i-th pair at shift m: upper (A_i + mI) or (I - A_i q^m); lower likewise,
// returned inverted.
template <Field F>
class Pairs {
public:
    explicit Pairs(const FactorialSpec<F>& s)
        : s_(s), qp_(s.base ? s.base->value : F(1)), basic_(is_basic(s.family)) {}

    Matrix<F> upper(std::size_t i, std::int64_t m) { return shifted(s_.uppers[i], m); }

    Matrix<F> lower_inverse(std::size_t i, std::int64_t m) {
        try {
            return inverse(shifted(s_.lowers[i], m));
        } catch (const Singular&) {
            throw Singular("singular lower factor (pair i=" + std::to_string(i + 1) + ", shift j=" +
                               std::to_string(m) + ")",
                           m, i + 1);
        }
    }

    // Normal block: prod_i lower_i^{-1} upper_i, then Z.
    Matrix<F> block(std::int64_t m) {
        Matrix<F> p = Matrix<F>::identity(s_.dim());
        for (std::size_t i = 0; i < s_.uppers.size(); ++i) p = p * lower_inverse(i, m) * upper(i, m);
        return p * s_.argument;
    }

    // Mirror image: Z, then prod over i descending of upper_i lower_i^{-1}.
    Matrix<F> reversed_block(std::int64_t m) {
        Matrix<F> p = s_.argument;
        for (std::size_t i = s_.uppers.size(); i-- > 0;) p = p * upper(i, m) * lower_inverse(i, m);
        return p;
    }

    Matrix<F> oriented_block(std::int64_t m) {
        return s_.orientation == Orientation::Normal ? block(m) : reversed_block(m);
    }

    // Elementary factors of one block, in multiplication order.
    void trace_block(std::int64_t m, std::vector<Matrix<F>>& out) {
        if (s_.orientation == Orientation::Normal) {
            for (std::size_t i = 0; i < s_.uppers.size(); ++i) {
                out.push_back(lower_inverse(i, m));
                out.push_back(upper(i, m));
            }
            out.push_back(s_.argument);
        } else {
            out.push_back(s_.argument);
            for (std::size_t i = s_.uppers.size(); i-- > 0;) {
                out.push_back(upper(i, m));
                out.push_back(lower_inverse(i, m));
            }
        }
    }

    // Shift index of the j-th block (j = 1..k) in a product of length k.
    std::int64_t block_index(std::int64_t j, std::int64_t k) const {
        bool falling = is_type_one(s_.family) == (s_.orientation == Orientation::Normal);
        return falling ? k - j : j - 1;
    }

private:
    Matrix<F> shifted(const Matrix<F>& x, std::int64_t m) {
        if (!basic_) return x + F(m);
        Matrix<F> r = x * (-qp_(m));
        return r += F(1);
    }

    const FactorialSpec<F>& s_;
    QPowers<F> qp_;
    bool basic_;
};

}  // namespace detail

template <Field F>
Matrix<F> infinite_q_factorial(const FactorialSpec<F>& spec, double tol = 1e-14,
                               std::size_t max_factors = 100000);

// Interlaced product of the given family and orientation. Type I is falling
// (block k-1 leftmost), type II rising; Reversed mirrors the whole factor list.
template <Field F>
Matrix<F> shifted_factorial(const FactorialSpec<F>& spec) {
    detail::validate(spec);
    if (!spec.length) return infinite_q_factorial(spec);
    const std::int64_t k = *spec.length;
    detail::Pairs<F> pairs(spec);
    FactorSequence<F> seq{[&](std::int64_t j) { return pairs.oriented_block(pairs.block_index(j, k)); }, 1, k,
                          spec.dim()};
    return ordered_product(seq);
}

// The elementary factors (inverted lowers, uppers, arguments) whose
// left-to-right product is shifted_factorial(spec). Finite nonnegative k only.
template <Field F>
std::vector<Matrix<F>> factor_trace(const FactorialSpec<F>& spec) {
    detail::validate(spec);
    if (!spec.length || *spec.length < 0) throw BadConfig("factor_trace needs a finite nonnegative length");
    const std::int64_t k = *spec.length;
    detail::Pairs<F> pairs(spec);
    std::vector<Matrix<F>> out;
    for (std::int64_t j = 1; j <= k; ++j) pairs.trace_block(pairs.block_index(j, k), out);
    return out;
}

template <Field F>
FactorialSpec<F> mirrored(FactorialSpec<F> spec) {
    spec.orientation = spec.orientation == Orientation::Normal ? Orientation::Reversed : Orientation::Normal;
    return spec;
}

template <Field F>
FactorialSpec<F> transposed(FactorialSpec<F> spec) {
    for (auto& m : spec.uppers) m = m.transpose();
    for (auto& m : spec.lowers) m = m.transpose();
    spec.argument = spec.argument.transpose();
    return spec;
}

template <Field F>
Matrix<F> infinite_q_factorial(const FactorialSpec<F>& spec, double tol, std::size_t max_factors) {
    if constexpr (FieldTraits<F>::exact) {
        (void)spec, (void)tol, (void)max_factors;
        throw KindMismatch("infinite products need complex entries");
    } else {
        detail::validate(spec);
        if (!is_basic(spec.family)) throw BadConfig("infinite products need a basic family");
        if (spec.base->modulus() >= 1.0) throw NonConvergent("infinite product needs |q| < 1");
        detail::Pairs<F> pairs(spec);
        const Matrix<F> id = Matrix<F>::identity(spec.dim());
        // Falling products grow on the left, rising ones on the right.
        const bool left = pairs.block_index(1, 2) == 1;
        Matrix<F> p = id;
        int small = 0;
        for (std::size_t m = 0; m < max_factors; ++m) {
            Matrix<F> f = pairs.oriented_block(static_cast<std::int64_t>(m));
            p = left ? f * p : p * f;
            small = frobenius_norm(f - id) < tol ? small + 1 : 0;
            if (small == 3) return p;
        }
        throw NonConvergent("infinite product did not settle within " + std::to_string(max_factors) + " factors");
    }
}

// Shorthands for the single-family products used throughout the catalog.
template <Field F>
Matrix<F> falling(const std::type_identity_t<std::vector<Matrix<F>>>& ups,
                  const std::type_identity_t<std::vector<Matrix<F>>>& lows, const Matrix<F>& z, std::int64_t k) {
    return shifted_factorial(FactorialSpec<F>{ups, lows, z, std::nullopt, Family::OrdinaryI, Orientation::Normal, k});
}

template <Field F>
Matrix<F> rising(const std::type_identity_t<std::vector<Matrix<F>>>& ups,
                 const std::type_identity_t<std::vector<Matrix<F>>>& lows, const Matrix<F>& z, std::int64_t k) {
    return shifted_factorial(FactorialSpec<F>{ups, lows, z, std::nullopt, Family::OrdinaryII, Orientation::Normal, k});
}

template <Field F>
Matrix<F> q_falling(const std::type_identity_t<std::vector<Matrix<F>>>& ups,
                    const std::type_identity_t<std::vector<Matrix<F>>>& lows, const std::type_identity_t<F>& q,
                    const Matrix<F>& z, std::int64_t k) {
    return shifted_factorial(FactorialSpec<F>{ups, lows, z, BaseQ<F>{q}, Family::BasicI, Orientation::Normal, k});
}

template <Field F>
Matrix<F> q_rising(const std::type_identity_t<std::vector<Matrix<F>>>& ups,
                   const std::type_identity_t<std::vector<Matrix<F>>>& lows, const std::type_identity_t<F>& q,
                   const Matrix<F>& z, std::int64_t k) {
    return shifted_factorial(FactorialSpec<F>{ups, lows, z, BaseQ<F>{q}, Family::BasicII, Orientation::Normal, k});
}

}  // namespace ncq
