#pragma once

#include "ncq/identities.hpp"

#include <type_traits>

namespace ncq::catalog_detail {

template <class P>
using field_t = typename std::decay_t<P>::field_type;

template <Field F>
const Matrix<F>& need(const std::optional<Matrix<F>>& m, const char* name) {
    if (!m) throw ConstraintViolated(std::string("missing parameter ") + name);
    return *m;
}

template <Field F>
const F& need_q(const Params<F>& p) {
    if (!p.q) throw ConstraintViolated("missing base q");
    return *p.q;
}

template <Field F>
F power(const F& q, long e) {
    QPowers<F> qp(q);
    return qp(e);
}

template <Field F>
Matrix<F> inv(const Matrix<F>& m) {
    return inverse(m);
}

inline long binom2(long n) { return n * (n - 1) / 2; }

// Instantiates a generic body for every scalar kind.
template <class Body>
void add(std::vector<IdentityCase>& out, IdentityCase info, Body body) {
    info.on_rational = [body](const Params<Rational>& p, Checker<Rational>& c) { body(p, c); };
    info.on_eisenstein = [body](const Params<Eisenstein>& p, Checker<Eisenstein>& c) { body(p, c); };
    info.on_complex = [body](const Params<Complex>& p, Checker<Complex>& c) { body(p, c); };
    out.push_back(std::move(info));
}

void add_lemma_cases(std::vector<IdentityCase>& out);
void add_summation_cases(std::vector<IdentityCase>& out);
void add_other_cases(std::vector<IdentityCase>& out);

}  // namespace ncq::catalog_detail
