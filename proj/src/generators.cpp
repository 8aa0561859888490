#include "ncq/generators.hpp"

#include <cmath>
#include <numbers>

namespace ncq {

ScalarKind kind_of(const ParamBundle& p) {
    switch (p.index()) {
        case 0: return ScalarKind::Rational;
        case 1: return ScalarKind::Eisenstein;
        default: return ScalarKind::ComplexFloat;
    }
}

namespace {

constexpr std::pair<FamilyName, std::string_view> family_names[] = {
    {FamilyName::Unconstrained, "Unconstrained"},   {FamilyName::CentralSum, "CentralSum"},
    {FamilyName::CentralProduct, "CentralProduct"}, {FamilyName::Rosengren, "Rosengren"},
    {FamilyName::ScalarCommutative, "ScalarCommutative"}, {FamilyName::PartiallyCommuting, "PartiallyCommuting"},
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Integer and real draws are derived from raw engine output by hand so the
// stream is identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(eng_() % span);
    }
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 eng_;
};

template <Field F>
struct Draw {
    Rng& rng;
    int m;

    // Entry of a generic random matrix.
    F entry() {
        if constexpr (std::is_same_v<F, Rational>) {
            return Rational(rng.integer(-m, m));
        } else if constexpr (std::is_same_v<F, Eisenstein>) {
            return Eisenstein(Rational(rng.integer(-m, m)), Rational(rng.integer(-m, m)));
        } else {
            return Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
    }

    // Scalar with a small denominator (exact) or in the unit box (complex).
    F scalar(bool nonzero = false) {
        if constexpr (FieldTraits<F>::exact) {
            for (;;) {
                Rational r(rng.integer(-2 * m, 2 * m), rng.integer(1, 3));
                r.canonicalize();
                if (!nonzero || sgn(r) != 0) return F(r);
            }
        } else {
            for (;;) {
                Complex z(rng.uniform(-2, 2), rng.uniform(-2, 2));
                if (!nonzero || std::abs(z) > 0.25) return z;
            }
        }
    }

    F base() {
        if constexpr (FieldTraits<F>::exact) {
            static const Rational choices[] = {Rational(1, 2), Rational(2, 3), Rational(3, 5)};
            return F(choices[rng.integer(0, 2)]);
        } else {
            return std::polar(rng.uniform(0.1, 0.5), rng.uniform(0, 2 * std::numbers::pi));
        }
    }

    Matrix<F> matrix(std::size_t n) {
        Matrix<F> a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = entry();
        return a;
    }

    // Entries with small denominators, so long indexed families rarely hit a
    // singular factor.
    Matrix<F> fine(std::size_t n) {
        Matrix<F> a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = scalar();
        return a;
    }

    Matrix<F> invertible(std::size_t n) {
        for (;;) {
            Matrix<F> a = matrix(n);
            try {
                (void)inverse(a);
                return a;
            } catch (const Singular&) {
            }
        }
    }

    Matrix<F> diagonal(std::size_t n) {
        Matrix<F> a(n);
        for (std::size_t i = 0; i < n; ++i) a(i, i) = scalar();
        return a;
    }

    // Complex arguments are rescaled into the convergence region.
    Matrix<F> argument(std::size_t n, bool diag) {
        Matrix<F> z = diag ? diagonal(n) : matrix(n);
        if constexpr (!FieldTraits<F>::exact) {
            double norm = frobenius_norm(z);
            if (norm > 0) z *= Complex(rng.uniform(0.1, 0.5) / norm, 0);
        }
        return z;
    }

    Matrix<F> polynomial(const Matrix<F>& x) {
        const std::size_t n = x.dim();
        Matrix<F> id = Matrix<F>::identity(n);
        return F(rng.integer(-m, m)) * id + F(rng.integer(-m, m)) * x + F(rng.integer(-m, m)) * (x * x);
    }
};

template <Field F>
Params<F> draw(const ParamFamily& fam) {
    Rng rng(fam.seed);
    Draw<F> dr{rng, fam.bound};
    const std::size_t n = fam.dim;
    Params<F> p;
    p.dim = n;
    p.n = fam.n;
    const bool diag = fam.name == FamilyName::ScalarCommutative;
    auto mat = [&] { return diag ? dr.diagonal(n) : dr.matrix(n); };
    auto fine = [&] { return diag ? dr.diagonal(n) : dr.fine(n); };

    switch (fam.name) {
        case FamilyName::Unconstrained:
        case FamilyName::ScalarCommutative:
            p.A = mat();
            p.B = mat();
            p.C = mat();
            p.D = mat();
            p.W = mat();
            break;
        case FamilyName::CentralSum: {
            p.A = dr.matrix(n);
            p.B = dr.matrix(n);
            p.d = dr.scalar();
            p.C = *p.A + *p.B - *p.d;
            p.D = dr.matrix(n);
            break;
        }
        case FamilyName::CentralProduct: {
            p.A = dr.invertible(n);
            p.C = dr.matrix(n);
            if constexpr (FieldTraits<F>::exact) {
                p.d = dr.scalar(true);
            } else {
                // keeps ||(1/d) I||_F in [0.2, 0.7]
                double r = std::sqrt(static_cast<double>(n)) / rng.uniform(0.2, 0.7);
                p.d = std::polar(r, rng.uniform(0, 2 * std::numbers::pi));
            }
            p.B = (*p.d) * inverse(*p.A) * (*p.C);
            p.D = dr.matrix(n);
            break;
        }
        case FamilyName::PartiallyCommuting: {
            Matrix<F> x = dr.matrix(n);
            p.A = dr.polynomial(x);
            p.B = dr.polynomial(x);
            p.C = dr.matrix(n);
            p.D = dr.polynomial(x);
            p.W = dr.polynomial(x);
            break;
        }
        case FamilyName::Rosengren:
            throw BadConfig("Rosengren family is only defined over the Eisenstein kind");
    }
    p.Z = dr.argument(n, diag);
    p.E = Matrix<F>::scalar(n, dr.scalar());
    p.q = dr.base();
    for (int j = 0; j <= fam.n; ++j) {
        p.As.push_back(fine());
        p.Bs.push_back(fine());
        p.Cs.push_back(fine());
    }
    return p;
}

Params<Eisenstein> draw_rosengren(const ParamFamily& fam) {
    if (fam.dim != 3) throw BadConfig("Rosengren family has dim 3");
    Rng rng(fam.seed);
    auto rat = [&](bool nonzero) {
        for (;;) {
            Rational r(rng.integer(-2 * fam.bound, 2 * fam.bound), rng.integer(1, 3));
            r.canonicalize();
            if (!nonzero || sgn(r) != 0) return r;
        }
    };
    Rational a = rat(false), b = rat(true), c = rat(true), d = rat(false);
    Params<Eisenstein> p = rosengren(a, b, c, d);
    p.n = fam.n;
    Draw<Eisenstein> dr{rng, fam.bound};
    p.Z = dr.matrix(3);
    p.E = Matrix<Eisenstein>::scalar(3, Eisenstein(rat(false)));
    p.q = dr.base();
    return p;
}

}  // namespace

std::string_view family_name(FamilyName f) {
    for (auto [k, v] : family_names)
        if (k == f) return v;
    return "?";
}

FamilyName parse_family_name(std::string_view s) {
    for (auto [k, v] : family_names)
        if (v == s) return k;
    throw BadConfig("unknown parameter family '" + std::string(s) + "'");
}

std::uint64_t retry_seed(std::uint64_t seed, int attempt) {
    return attempt == 0 ? seed : splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(attempt)));
}

ParamBundle sample(const ParamFamily& fam) {
    if (fam.dim == 0) throw BadConfig("dim must be positive");
    if (fam.name == FamilyName::Rosengren) {
        if (fam.kind != ScalarKind::Eisenstein) throw BadConfig("Rosengren family needs the eisenstein kind");
        return draw_rosengren(fam);
    }
    switch (fam.kind) {
        case ScalarKind::Rational: return draw<Rational>(fam);
        case ScalarKind::Eisenstein: return draw<Eisenstein>(fam);
        case ScalarKind::ComplexFloat: return draw<Complex>(fam);
    }
    throw BadConfig("unknown kind");
}

Params<Eisenstein> rosengren(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    if (sgn(b) == 0 || sgn(c) == 0) throw BadConfig("Rosengren family needs b, c nonzero");
    using E = Eisenstein;
    const E w = E::omega();
    const E w2 = w * w;
    const E bb(b), cc(c), dd(d), ib(Rational(1) / b), ic(Rational(1) / c);
    Params<E> p;
    p.dim = 3;
    p.A = Matrix<E>::scalar(3, E(a));
    p.B = Matrix<E>{{dd, bb, 0}, {ib, dd, cc}, {0, -w2 * ic, dd}};
    p.C = Matrix<E>{{dd, w * bb, 0}, {w2 * ib, dd, w * cc}, {0, -w * ic, dd}};
    p.D = Matrix<E>{{dd, w2 * bb, 0}, {w * ib, dd, w2 * cc}, {0, -ic, dd}};
    p.d = E(d);
    if (!check_comrel(*p.A, *p.B, *p.C, *p.D)) throw ConstraintViolated("Rosengren matrices fail the rotation relations");
    return p;
}

}  // namespace ncq
