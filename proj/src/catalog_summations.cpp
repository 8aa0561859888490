#include "catalog_support.hpp"

namespace ncq::catalog_detail {

namespace {

template <Field F>
SeriesSpec<F> ordinary(Family fam, std::vector<Matrix<F>> ups, std::vector<Matrix<F>> lows, Matrix<F> z,
                       Orientation o = Orientation::Normal) {
    return {std::move(ups), std::move(lows), std::move(z), std::nullopt, fam, o, {}};
}

template <Field F>
SeriesSpec<F> basic(Family fam, std::vector<Matrix<F>> ups, std::vector<Matrix<F>> lows, const F& q, Matrix<F> z) {
    return {std::move(ups), std::move(lows), std::move(z), BaseQ<F>{q}, fam, Orientation::Normal, {}};
}

// Sum of a terminating series plus the check that its first vanishing summand is zero.
template <Field F>
Matrix<F> terminating_sum(const SeriesSpec<F>& s, long n, Checker<F>& chk) {
    TerminationInfo t = detect_termination(s);
    chk.require(t.terminating && t.order <= n, "series must terminate by order n");
    chk.vanishes("summand n+1", summand(s, n + 1));
    return evaluate(s);
}

template <Field F>
void require_central(Checker<F>& chk, const Matrix<F>& s, const Matrix<F>& a, const Matrix<F>& b,
                     const Matrix<F>& c, std::string_view name) {
    chk.require_commute(s, a, std::string(name) + " and A");
    chk.require_commute(s, b, std::string(name) + " and B");
    chk.require_commute(s, c, std::string(name) + " and C");
}

}  // namespace

void add_summation_cases(std::vector<IdentityCase>& out) {
    add(out,
        {.id = "thm_cv_I",
         .title = "Chu-Vandermonde summation, type I",
         .statement = "2F1^I[A, -nI; C; I] = [C-A; C]^I_n"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            auto lhs = terminating_sum(ordinary<F>(Family::OrdinaryI, {A, I * F(-n)}, {C}, I), n, chk);
            chk.equal("summation", lhs, falling<F>({C - A}, {C}, I, n));
        });

    add(out,
        {.id = "thm_cv_II",
         .title = "Chu-Vandermonde summation, type II",
         .statement = "2F1^II[A, -nI; C; I] = [C-A+I; C]^II_n (C-A+nI)^-1 (C-A)"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            auto lhs = terminating_sum(ordinary<F>(Family::OrdinaryII, {A, I * F(-n)}, {C}, I), n, chk);
            const auto u = C - A + F(1);
            chk.equal("summation", lhs, rising<F>({u}, {C}, I, n) * inv(C - A + F(n)) * (C - A));
            if (n >= 1)
                chk.equal("shortened right side", lhs, rising<F>({u}, {C}, I, n - 1) * inv(C + F(n - 1)) * (C - A));
        });

    add(out,
        {.id = "thm_qcv_I",
         .title = "q-Chu-Vandermonde summation, type I",
         .statement = "2phi1^I[A, Q^-n; C; Q, Q] = [CA^-1; C; A]^I_n"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            auto lhs = terminating_sum(basic<F>(Family::BasicI, {A, I * power(q, -n)}, {C}, q, I * q), n, chk);
            chk.equal("summation", lhs, q_falling<F>({C * inv(A)}, {C}, q, A, n));
        });

    add(out,
        {.id = "thm_qcv_II",
         .title = "q-Chu-Vandermonde summation, type II",
         .statement = "2phi1^II[A, Q^-n; C; Q, Q] = [CA^-1 Q; C; A]^II_n (A-CQ^n)^-1 (A-C)"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            auto lhs = terminating_sum(basic<F>(Family::BasicII, {A, I * power(q, -n)}, {C}, q, I * q), n, chk);
            const auto u = C * inv(A) * q;
            chk.equal("summation", lhs, q_rising<F>({u}, {C}, q, A, n) * inv(A - C * power(q, n)) * (A - C));
            if (n >= 1)
                chk.equal("shortened right side", lhs,
                          q_rising<F>({u}, {C}, q, A, n - 1) * inv(I - C * power(q, n - 1)) * (A - C));
        });

    add(out,
        {.id = "thm_qcv_rev_I",
         .title = "q-Chu-Vandermonde summation with reversed argument, type I",
         .statement = "U = A^-1 C: 2phi1^I[A, Q^-n; C; Q, U Q^n] = [U; C; I]^I_n"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto U = inv(A) * C;
            auto lhs =
                terminating_sum(basic<F>(Family::BasicI, {A, I * power(q, -n)}, {C}, q, U * power(q, n)), n, chk);
            chk.equal("summation", lhs, q_falling<F>({U}, {C}, q, I, n));
        });

    add(out,
        {.id = "thm_qcv_rev_II",
         .title = "q-Chu-Vandermonde summation with reversed argument, type II",
         .statement = "U = A^-1 C: 2phi1^II[A, Q^-n; C; Q, U Q^n] = [UQ; C; I]^II_n (I-UQ^n)^-1 (I-U)"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto U = inv(A) * C;
            auto lhs =
                terminating_sum(basic<F>(Family::BasicII, {A, I * power(q, -n)}, {C}, q, U * power(q, n)), n, chk);
            chk.equal("summation", lhs, q_rising<F>({U * q}, {C}, q, I, n) * inv(I - U * power(q, n)) * (I - U));
        });

    add(out,
        {.id = "thm_ps_I",
         .title = "Pfaff-Saalschuetz summation, type I",
         .statement = "A+B-C central: 3F2^I[A, B, -nI; C, A+B-C+(1-n)I; I] = [C-B, C-A; C, C-A-B]^I_n",
         .family = FamilyName::CentralSum},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto S = A + B - C;
            require_central(chk, S, A, B, C, "A+B-C");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            auto lhs =
                terminating_sum(ordinary<F>(Family::OrdinaryI, {A, B, I * F(-n)}, {C, S + F(1 - n)}, I), n, chk);
            chk.equal("summation", lhs, falling<F>({C - B, C - A}, {C, C - A - B}, I, n));
        });

    add(out,
        {.id = "thm_ps_II",
         .title = "Pfaff-Saalschuetz summation, type II",
         .statement = "A+B-C central: 3F2^II[A, B, -nI; C, A+B-C+(1-n)I; I] = "
                      "[C-B+I, C-A+I; C, C-A-B]^II_n (C-A+nI)^-1 (C-B+nI)^-1 (C-B)(C-A)",
         .family = FamilyName::CentralSum},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto S = A + B - C;
            require_central(chk, S, A, B, C, "A+B-C");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            auto lhs =
                terminating_sum(ordinary<F>(Family::OrdinaryII, {A, B, I * F(-n)}, {C, S + F(1 - n)}, I), n, chk);
            const std::vector<Matrix<F>> ups{C - B + F(1), C - A + F(1)};
            const std::vector<Matrix<F>> lows{C, C - A - B};
            chk.equal("summation", lhs,
                      rising<F>(ups, lows, I, n) * inv(C - A + F(n)) * inv(C - B + F(n)) * (C - B) * (C - A));
            if (n >= 1)
                chk.equal("shortened right side", lhs,
                          rising<F>(ups, lows, I, n - 1) * inv(C + F(n - 1)) * inv(C - A - B + F(n - 1)) * (C - B) *
                              (C - A));
        });

    add(out,
        {.id = "thm_qps_I",
         .title = "q-Pfaff-Saalschuetz summation, type I",
         .statement = "P = BC^-1 A central, U = A^-1 C: "
                      "3phi2^I[A, B, Q^-n; C, PQ^{1-n}; Q, Q] = [CB^-1, U; C, A^-1 C B^-1; I]^I_n",
         .family = FamilyName::CentralProduct},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto P = B * inv(C) * A;
            require_central(chk, P, A, B, C, "BC^-1 A");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto U = inv(A) * C;
            auto lhs = terminating_sum(
                basic<F>(Family::BasicI, {A, B, I * power(q, -n)}, {C, P * power(q, 1 - n)}, q, I * q), n, chk);
            chk.equal("summation", lhs, q_falling<F>({C * inv(B), U}, {C, U * inv(B)}, q, I, n));
        });

    add(out,
        {.id = "thm_qps_II",
         .title = "q-Pfaff-Saalschuetz summation, type II",
         .statement = "P = BC^-1 A central, U = A^-1 C: 3phi2^II[A, B, Q^-n; C, PQ^{1-n}; Q, Q] = "
                      "[CB^-1 Q, UQ; C, A^-1 C B^-1; I]^II_n (I-UQ^n)^-1 (I-CB^-1 Q^n)^-1 (I-CB^-1)(I-U)",
         .family = FamilyName::CentralProduct},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto P = B * inv(C) * A;
            require_central(chk, P, A, B, C, "BC^-1 A");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto U = inv(A) * C;
            const auto CBi = C * inv(B);
            auto lhs = terminating_sum(
                basic<F>(Family::BasicII, {A, B, I * power(q, -n)}, {C, P * power(q, 1 - n)}, q, I * q), n, chk);
            const std::vector<Matrix<F>> ups{CBi * q, U * q};
            const std::vector<Matrix<F>> lows{C, U * inv(B)};
            const auto tail = (I - CBi) * (I - U);
            chk.equal("summation", lhs,
                      q_rising<F>(ups, lows, q, I, n) * inv(I - U * power(q, n)) * inv(I - CBi * power(q, n)) * tail);
            if (n >= 1)
                chk.equal("shortened right side", lhs,
                          q_rising<F>(ups, lows, q, I, n - 1) * inv(I - C * power(q, n - 1)) *
                              inv(I - U * inv(B) * power(q, n - 1)) * tail);
        });

    // Uppers and lowers exactly as written, including the (A/2 + I, A/2) pair.
    auto dougall_series = [](const auto& p, auto& chk, Family fam) {
        using F = field_t<decltype(p)>;
        const auto& A = need(p.A, "A");
        const auto& B = need(p.B, "B");
        const auto& C = need(p.C, "C");
        const auto& D = need(p.D, "D");
        chk.require(check_comrel(A, B, C, D, chk.tol()), "commutation relations comrel(A,B,C,D)");
        const auto I = Matrix<F>::identity(p.dim);
        const long n = p.n;
        const F half = from_rational<F>(Rational(1, 2));
        const auto H = A * half;
        std::vector<Matrix<F>> ups{H + F(1), A, B, C, D, F(2) * A - B - C - D + F(n + 1), I * F(-n)};
        std::vector<Matrix<F>> lows{H, A + F(n + 1), A - C + F(1), A - B + F(1), A - D + F(1), B + C + D - A - F(n)};
        return terminating_sum(ordinary<F>(fam, ups, lows, I), n, chk);
    };
    auto dougall_brackets = [](const auto& p) {
        using F = field_t<decltype(p)>;
        const auto& A = *p.A;
        const auto& B = *p.B;
        const auto& C = *p.C;
        const auto& D = *p.D;
        const F one(1);
        return std::pair<std::vector<Matrix<F>>, std::vector<Matrix<F>>>{
            {A - C - D + one, A - B - D + one, A + one, A - B - C + one},
            {A - C + one, A - B + one, A - D + one, A - B - C - D + one}};
    };

    add(out,
        {.id = "thm_dougall",
         .title = "Dougall 7F6 summation",
         .statement = "comrel(A,B,C,D): 7F6^I[A/2+I, A, B, C, D, 2A-B-C-D+(n+1)I, -nI; "
                      "A/2, A+(n+1)I, A-C+I, A-B+I, A-D+I, B+C+D-A-nI; I] = "
                      "[A-C-D+I, A-B-D+I, A+I, A-B-C+I; A-C+I, A-B+I, A-D+I, A-B-C-D+I]^I_n",
         .family = FamilyName::Rosengren},
        [dougall_series, dougall_brackets](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            auto lhs = dougall_series(p, chk, Family::OrdinaryI);
            auto [u, l] = dougall_brackets(p);
            chk.equal("summation", lhs, falling<F>(u, l, Matrix<F>::identity(p.dim), p.n));
        });

    add(out,
        {.id = "thm_dougall_typeII",
         .title = "Dougall 7F6 summation with type II brackets",
         .statement = "as thm_dougall with the series and/or the product taken of type II; "
                      "all four combinations agree",
         .family = FamilyName::Rosengren},
        [dougall_series, dougall_brackets](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto I = Matrix<F>::identity(p.dim);
            auto lhs2 = dougall_series(p, chk, Family::OrdinaryII);
            auto [u, l] = dougall_brackets(p);
            const auto rhs1 = falling<F>(u, l, I, p.n);
            const auto rhs2 = rising<F>(u, l, I, p.n);
            chk.equal("series II = product II", lhs2, rhs2);
            chk.equal("series II = product I", lhs2, rhs1);
            chk.equal("series I = product II", dougall_series(p, chk, Family::OrdinaryI), rhs2);
        });

    add(out,
        {.id = "thm_cv_reversed",
         .title = "Chu-Vandermonde summation, reversed type I",
         .statement = "reversed 2F1^I[A, -nI; C; I] = reversed [C-A; C]^I_n; reversing twice is the identity",
         .family = FamilyName::Unconstrained},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            auto series = ordinary<F>(Family::OrdinaryI, {A, I * F(-n)}, {C}, I, Orientation::Reversed);
            auto product =
                FactorialSpec<F>{{C - A}, {C}, I, std::nullopt, Family::OrdinaryI, Orientation::Reversed, n};
            auto lhs = terminating_sum(series, n, chk);
            const auto rhs = shifted_factorial(product);
            chk.equal("summation", lhs, rhs);
            // Reversal acts as transposition on matrices, so reversing twice
            // (transpose parameters, reverse, transpose back) gives the normal identity.
            auto normal = ordinary<F>(Family::OrdinaryI, {A, I * F(-n)}, {C}, I);
            auto t_series = ordinary<F>(Family::OrdinaryI, {A.transpose(), I * F(-n)}, {C.transpose()}, I,
                                        Orientation::Reversed);
            chk.equal("series reversed twice", evaluate(t_series).transpose(), evaluate(normal));
            chk.equal("reversal is transposition", shifted_factorial(mirrored(transposed(product))).transpose(),
                      rhs);
        });
}

}  // namespace ncq::catalog_detail
