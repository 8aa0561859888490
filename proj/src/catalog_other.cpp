#include "catalog_support.hpp"

namespace ncq::catalog_detail {

namespace {

template <Field F>
Matrix<F> product_over(std::size_t dim, long lo, long hi, std::function<Matrix<F>(std::int64_t)> g) {
    return ordered_product(FactorSequence<F>{std::move(g), lo, hi, dim});
}

template <Field F>
FactorialSpec<F> infinite(std::vector<Matrix<F>> ups, std::vector<Matrix<F>> lows, const F& q, Family fam,
                          std::size_t dim) {
    return {std::move(ups), std::move(lows), Matrix<F>::identity(dim), BaseQ<F>{q}, fam, Orientation::Normal,
            std::nullopt};
}

template <Field F>
void require_mutual(Checker<F>& chk, const std::vector<std::pair<const Matrix<F>*, const char*>>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            chk.require_commute(*xs[i].first, *xs[j].first, std::string(xs[i].second) + " and " + xs[j].second);
}

template <Field F>
void require_convergent(Checker<F>& chk, const Matrix<F>& z, const F& q) {
    chk.require(frobenius_norm(z) < 1.0, "argument needs ||Z|| < 1");
    chk.require(FieldTraits<F>::magnitude(q) < 1.0, "base needs |q| < 1");
}

template <Field F>
Matrix<F> one_phi_zero(Family fam, const Matrix<F>& a, const F& q, const Matrix<F>& z) {
    return evaluate(SeriesSpec<F>{{a}, {}, z, BaseQ<F>{q}, fam, Orientation::Normal, {}});
}

}  // namespace

void add_other_cases(std::vector<IdentityCase>& out) {
    add(out,
        {.id = "micro_easyidI",
         .title = "commutation of C-A past C^-1 A",
         .statement = "A C^-1 (C-A) = (C-A) C^-1 A = A - A C^-1 A",
         .uses_n = false},
        [](const auto& p, auto& chk) {
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const auto Ci = inv(C);
            chk.equal("identity", A * Ci * (C - A), (C - A) * Ci * A);
            chk.equal("common value", A * Ci * (C - A), A - A * Ci * A);
        });

    add(out,
        {.id = "micro_easyidQ",
         .title = "q-analogue of micro_easyidI",
         .statement = "(A-CQ)(I-CQ)^-1(I-A) = (I-A)(I-CQ)^-1(A-CQ) = (I-A) - (I-A)(I-CQ)^-1(I-A)",
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const auto m = inv(I - C * q);
            chk.equal("identity", (A - C * q) * m * (I - A), (I - A) * m * (A - C * q));
            chk.equal("common value", (A - C * q) * m * (I - A), (I - A) - (I - A) * m * (I - A));
        });

    add(out,
        {.id = "micro_easy32id",
         .title = "commutation step of the balanced 3F2 addition formula",
         .statement = "A+B-C central: (C-B+I)(C-A+I)(C+I)^-1 AB = AB (C+I)^-1 (C-B+I)(C-A+I)",
         .family = FamilyName::CentralSum,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto S = A + B - C;
            chk.require_commute(S, A, "A+B-C and A");
            chk.require_commute(S, B, "A+B-C and B");
            chk.require_commute(S, C, "A+B-C and C");
            const F one(1);
            const auto m = inv(C + one);
            const auto AB = A * B;
            const auto lhs = (C - B + one) * (C - A + one) * m * AB;
            chk.equal("identity", lhs, AB * m * (C - B + one) * (C - A + one));
            chk.equal("common value", lhs, AB * m * AB + (C - A - B + one) * AB);
        });

    add(out,
        {.id = "micro_easy32Qid",
         .title = "commutation step of the balanced 3phi2 addition formula",
         .statement = "BC^-1 A central, U = A^-1 C: (I-CB^-1 Q)(I-UQ)(I-CQ)^-1(I-A)(I-B) = "
                      "(I-A)(I-B)(I-CQ)^-1(I-CB^-1 Q)(I-UQ)",
         .family = FamilyName::CentralProduct,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto P = B * inv(C) * A;
            chk.require_commute(P, A, "BC^-1 A and A");
            chk.require_commute(P, B, "BC^-1 A and B");
            chk.require_commute(P, C, "BC^-1 A and C");
            const auto I = Matrix<F>::identity(p.dim);
            const auto U = inv(A) * C;
            const auto CBi = C * inv(B);
            const auto m = inv(I - C * q);
            const auto ab = (I - A) * (I - B);
            const auto lhs = (I - CBi * q) * (I - U * q) * m * ab;
            chk.equal("identity", lhs, ab * m * (I - CBi * q) * (I - U * q));
            chk.equal("common value", lhs, ab * m * ab * U * inv(B) * q + (I - U * inv(B) * q) * ab);
        });

    add(out,
        {.id = "micro_ps_n1",
         .title = "n = 1 case of the balanced 3F2 sum",
         .statement = "I - C^-1 A (A+B-C)^-1 B = C^-1 (C-B)(C-A-B)^-1 (C-A)",
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto I = Matrix<F>::identity(p.dim);
            const auto Ci = inv(C);
            chk.equal("identity", I - Ci * A * inv(A + B - C) * B, Ci * (C - B) * inv(C - A - B) * (C - A));
        });

    add(out,
        {.id = "micro_qps_n1",
         .title = "n = 1 case of the balanced 3phi2 sum",
         .statement = "I - (I-C)^-1(I-A)(I-BC^-1 A)^-1(I-B) = (I-C)^-1(I-CB^-1)(I-A^-1 CB^-1)^-1(I-A^-1 C)",
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto I = Matrix<F>::identity(p.dim);
            const auto Ai = inv(A), Bi = inv(B), Ci = inv(C);
            const auto m = inv(I - C);
            chk.equal("identity", I - m * (I - A) * inv(I - B * Ci * A) * (I - B),
                      m * (I - C * Bi) * inv(I - Ai * C * Bi) * (I - Ai * C));
        });

    add(out,
        {.id = "micro_aux2",
         .title = "base step of the second reversal lemma",
         .statement = "U = A^-1 C: C^-1 A (I-A)^-1 (I-U)(I-C)^-1(I-A) U = (I-C)^-1 (I-U) = I - (I-C)^-1(I-A)U",
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const auto I = Matrix<F>::identity(p.dim);
            const auto U = inv(A) * C;
            const auto m = inv(I - C);
            const auto lhs = inv(C) * A * inv(I - A) * (I - U) * m * (I - A) * U;
            chk.equal("identity", lhs, m * (I - U));
            chk.equal("common value", lhs, I - m * (I - A) * U);
        });

    add(out,
        {.id = "micro_dougall_n1",
         .title = "n = 1 case of the Dougall sum",
         .statement = "A, B, D commute: I - (A-C)^-1 B (A-B)^-1 C (B+C+D-A)^-1 D (A-D)^-1 (2A-B-C-D) = "
                      "(A-C)^-1 (A-B-D)(A-B)^-1 (A-C-D)(A-B-C-D)^-1 A (A-D)^-1 (A-B-C)",
         .family = FamilyName::PartiallyCommuting,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto& D = need(p.D, "D");
            require_mutual<F>(chk, {{&A, "A"}, {&B, "B"}, {&D, "D"}});
            const auto I = Matrix<F>::identity(p.dim);
            const auto lhs = I - inv(A - C) * B * inv(A - B) * C * inv(B + C + D - A) * D * inv(A - D) *
                                     (F(2) * A - B - C - D);
            const auto rhs = inv(A - C) * (A - B - D) * inv(A - B) * (A - C - D) * inv(A - B - C - D) * A *
                             inv(A - D) * (A - B - C);
            chk.equal("identity", lhs, rhs);
            // the substitutions that reduce it to micro_ps_n1
            const auto E = B * C, Fm = D * (F(2) * A - B - C - D), G = (A - B) * (A - C);
            chk.equal("G-E", G - E, A * (A - B - C));
            chk.equal("G-F", G - Fm, (A - B - D) * (A - C - D));
            chk.equal("G-E-F", G - E - Fm, (A - D) * (A - B - C - D));
        });

    add(out,
        {.id = "micro_dougall_n1_v",
         .title = "n = 1 case of the Dougall sum, variant",
         .statement = "A, B, C+D commute: I - (A-C)^-1 B (A-B)^-1 C (A-D)^-1 (2A-B-C-D)(B+C+D-A)^-1 D = "
                      "(A-C)^-1 (A-C-D)(A-B)^-1 (A-B-D)(A-D)^-1 A (A-B-C-D)^-1 (A-B-C)",
         .family = FamilyName::PartiallyCommuting,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto& W = need(p.W, "W");
            const auto D = W - C;  // C + D = W commutes with A and B
            const auto CD = C + D;
            require_mutual<F>(chk, {{&A, "A"}, {&B, "B"}, {&CD, "C+D"}});
            const auto I = Matrix<F>::identity(p.dim);
            const auto lhs = I - inv(A - C) * B * inv(A - B) * C * inv(A - D) * (F(2) * A - B - C - D) *
                                     inv(B + C + D - A) * D;
            const auto rhs = inv(A - C) * (A - C - D) * inv(A - B) * (A - B - D) * inv(A - D) * A *
                             inv(A - B - C - D) * (A - B - C);
            chk.equal("identity", lhs, rhs);
        });

    add(out,
        {.id = "micro_qdougall_n1",
         .title = "n = 1 case of a q-Dougall sum",
         .statement = "A, B, D commute: I - (I-C^-1 A)^-1 (I-B)(I-AB^-1)^-1 (I-B^-1 CB)(I-DA^-1 CB)^-1 (I-D)"
                      "(I-AD^-1)^-1 (I-AB^-1 D^-1 C^-1 A) = (I-C^-1 A)^-1 (I-AB^-1 D^-1)(I-AB^-1)^-1 "
                      "(I-C^-1 AD^-1)(I-B^-1 C^-1 AD^-1)^-1 (I-A)(I-AD^-1)^-1 (I-B^-1 C^-1 A)",
         .family = FamilyName::PartiallyCommuting,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto& D = need(p.D, "D");
            require_mutual<F>(chk, {{&A, "A"}, {&B, "B"}, {&D, "D"}});
            const auto I = Matrix<F>::identity(p.dim);
            const auto Ai = inv(A), Bi = inv(B), Ci = inv(C), Di = inv(D);
            const auto lhs = I - inv(I - Ci * A) * (I - B) * inv(I - A * Bi) * (I - Bi * C * B) *
                                     inv(I - D * Ai * C * B) * (I - D) * inv(I - A * Di) *
                                     (I - A * Bi * Di * Ci * A);
            const auto rhs = inv(I - Ci * A) * (I - A * Bi * Di) * inv(I - A * Bi) * (I - Ci * A * Di) *
                             inv(I - Bi * Ci * A * Di) * (I - A) * inv(I - A * Di) * (I - Bi * Ci * A);
            chk.equal("identity", lhs, rhs);
        });

    add(out,
        {.id = "micro_q32_n1",
         .title = "auxiliary identity for the q-Dougall n = 1 case",
         .statement = "A, B, D commute: I - D^-1 (I-BA^-1)^-1 (I-B)(I-DA^-1 CB)^-1 D (I-A^-1 CBDA^-1) = "
                      "D^-1 (I-BA^-1)^-1 (I-C^-1 AD^-1)(I-B^-1 C^-1 AD^-1)^-1 (I-A^-1) D",
         .family = FamilyName::PartiallyCommuting,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto& D = need(p.D, "D");
            require_mutual<F>(chk, {{&A, "A"}, {&B, "B"}, {&D, "D"}});
            const auto I = Matrix<F>::identity(p.dim);
            const auto Ai = inv(A), Bi = inv(B), Ci = inv(C), Di = inv(D);
            const auto lhs =
                I - Di * inv(I - B * Ai) * (I - B) * inv(I - D * Ai * C * B) * D * (I - Ai * C * B * D * Ai);
            const auto rhs = Di * inv(I - B * Ai) * (I - Ci * A * Di) * inv(I - Bi * Ci * A * Di) * (I - Ai) * D;
            chk.equal("identity", lhs, rhs);
        });

    add(out,
        {.id = "rel_comrelbcd",
         .title = "commutator chain under the rotation relations",
         .statement = "comrel(A,B,C,D): BC-CB = CD-DC = DB-BD",
         .family = FamilyName::Rosengren,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto& D = need(p.D, "D");
            chk.require(check_comrel(A, B, C, D, chk.tol()), "commutation relations comrel(A,B,C,D)");
            chk.equal("BC-CB = CD-DC", commutator(B, C), commutator(C, D));
            chk.equal("BC-CB = DB-BD", commutator(B, C), commutator(D, B));
        });

    add(out,
        {.id = "rel_comrelbcdd",
         .title = "BCD commutes with shifted triple products",
         .statement = "comrel(A,B,C,D), E central: BCD (B+E)(C+E)(D+E) = (B+E)(C+E)(D+E) BCD",
         .family = FamilyName::Rosengren,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto& D = need(p.D, "D");
            const auto& E = need(p.E, "E");
            chk.require(check_comrel(A, B, C, D, chk.tol()), "commutation relations comrel(A,B,C,D)");
            chk.require_commute(E, B, "E and B");
            chk.require_commute(E, C, "E and C");
            chk.require_commute(E, D, "E and D");
            const auto bcd = B * C * D;
            const auto t = (B + E) * (C + E) * (D + E);
            chk.equal("identity", bcd * t, t * bcd);
            const auto pairs = B * C + B * D + C * D;
            chk.equal("expansion", t, bcd + pairs * E + (B + C + D) * E * E + E * E * E);
            chk.equal("BCD and BC+BD+CD", bcd * pairs, pairs * bcd);
            const F one(1);
            const auto x2 = (A - B + one) * (A - C + one) * (A - D + F(2));
            const auto x3 = (A - C - D + one) * (A - B - D + one) * (A - B - C + one);
            chk.equal("BCD and second product", bcd * x2, x2 * bcd);
            chk.equal("BCD and third product", bcd * x3, x3 * bcd);
            chk.equal("second and third product", x2 * x3, x3 * x2);
        });

    add(out,
        {.id = "prop_base_inversion",
         .title = "inverting the base",
         .statement = "[A; C; Q^-1, Z]^I_n = C^-1 [A^-1; C^-1; Q, AZC^-1]^I_n C"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const auto& Z = need(p.Z, "Z");
            const F q = need_q(p);
            const long n = p.n;
            const auto Ci = inv(C);
            chk.equal("identity", q_falling<F>({A}, {C}, F(1) / q, Z, n),
                      Ci * q_falling<F>({inv(A)}, {Ci}, q, A * Z * Ci, n) * C);
        });

    add(out,
        {.id = "prop_sum_reversal",
         .title = "q-Chu-Vandermonde sum with the order of summation reversed",
         .statement = "U = A^-1 C, X = [U; A^-1 Q^{1-n}; C^-1 Q^{1-n}]^I_n, Y = [C^-1 Q^{1-n}; A^-1 Q^{1-n}; I]^I_n: "
                      "2phi1^I[A, Q^-n; C; Q, UQ^n] = C^-1 X Y^-1 C (-1)^n Q^{n(n-1)/2}, "
                      "Y^-1 = C [A; C; U]^I_n C^-1, X = (-1)^n Q^{-n(n-1)/2} prod_{j=1..n} A(I-AQ^{j-1})^-1 "
                      "(I-UQ^{n-j}) C^-1"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto Ai = inv(A), Ci = inv(C);
            const auto U = Ai * C;
            const F sign = n % 2 == 0 ? F(1) : F(-1);
            const F s = power(q, 1 - n);
            auto lhs = evaluate(SeriesSpec<F>{{A, I * power(q, -n)}, {C}, U * power(q, n), BaseQ<F>{q},
                                              Family::BasicI, Orientation::Normal, {}});
            const auto X = q_falling<F>({U}, {Ai * s}, q, Ci * s, n);
            const auto Y = q_falling<F>({Ci * s}, {Ai * s}, q, I, n);
            const auto Yi = inv(Y);
            chk.equal("reversed sum", lhs, Ci * X * Yi * C * (sign * power(q, binom2(n))));
            chk.equal("inverse of the lower product", Yi, C * q_falling<F>({A}, {C}, q, U, n) * Ci);
            const auto prod = product_over<F>(p.dim, 1, n, [&](std::int64_t j) {
                return A * inv(I - A * power(q, j - 1)) * (I - U * power(q, n - j)) * Ci;
            });
            chk.equal("upper product", X, prod * (sign * power(q, -binom2(n))));
        });

    add(out,
        {.id = "lem_aux1",
         .title = "first reversal lemma",
         .statement = "U = A^-1 C: prod_{j=1..n} C^-1 A (I-AQ^{j-1})^-1 (I-UQ^{n-j}) [A; C; U]^I_n = [U; C; I]^I_n"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto Ci = inv(C);
            const auto U = inv(A) * C;
            const auto prod = product_over<F>(p.dim, 1, n, [&](std::int64_t j) {
                return Ci * A * inv(I - A * power(q, j - 1)) * (I - U * power(q, n - j));
            });
            chk.equal("identity", prod * q_falling<F>({A}, {C}, q, U, n), q_falling<F>({U}, {C}, q, I, n));
        });

    add(out,
        {.id = "lem_aux2",
         .title = "second reversal lemma",
         .statement = "U = A^-1 C, n >= 1: C^-1 A (I-A)^-1 (I-UQ^{n-1}) [U; CQ; I]^I_{n-1} (I-C)^-1 (I-A) U = "
                      "[U; C; I]^I_n",
         .min_n = 1},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto U = inv(A) * C;
            const auto lhs = inv(C) * A * inv(I - A) * (I - U * power(q, n - 1)) *
                             q_falling<F>({U}, {C * q}, q, I, n - 1) * inv(I - C) * (I - A) * U;
            chk.equal("identity", lhs, q_falling<F>({U}, {C}, q, I, n));
        });

    add(out,
        {.id = "prop_telescoping",
         .title = "indefinite telescoping sum",
         .statement = "M_j = (I-C_j)^-1(I-A_j)(I-B_j C_j^-1 A_j)^-1(I-B_j), P_k = M_0...M_{k-1}, "
                      "T_k = (I-C_k)^-1(I-C_k B_k^-1)(I-A_k^-1 C_k B_k^-1)^-1(I-A_k^-1 C_k): "
                      "sum_{k=0..n} P_k T_k = I - P_{n+1}"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const long n = p.n;
            chk.require(p.As.size() > static_cast<std::size_t>(n) && p.Bs.size() > static_cast<std::size_t>(n) &&
                            p.Cs.size() > static_cast<std::size_t>(n),
                        "needs parameter families of length n+1");
            const auto I = Matrix<F>::identity(p.dim);
            Matrix<F> P = I;
            Matrix<F> sum = Matrix<F>::zero(p.dim);
            for (long k = 0; k <= n; ++k) {
                const auto& A = p.As[k];
                const auto& B = p.Bs[k];
                const auto& C = p.Cs[k];
                const auto m = inv(I - C);
                const auto M = m * (I - A) * inv(I - B * inv(C) * A) * (I - B);
                const auto T = m * (I - C * inv(B)) * inv(I - inv(A) * C * inv(B)) * (I - inv(A) * C);
                const auto next = P * M;
                chk.equal("term " + std::to_string(k), P * T, P - next);
                sum += P * T;
                P = next;
            }
            chk.equal("partial sum", sum, I - P);
        });

    add(out,
        {.id = "thm_qbinomial_I",
         .title = "nonterminating q-binomial theorem, type I",
         .statement = "||Z|| < 1: 1phi0^I[A; -; Q, Z] = [AZ; Z; I]^II_inf",
         .mode = Mode::Tolerance,
         .tol = 1e-9,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& Z = need(p.Z, "Z");
            const F q = need_q(p);
            require_convergent(chk, Z, q);
            const auto I = Matrix<F>::identity(p.dim);
            const auto f = one_phi_zero(Family::BasicI, A, q, Z);
            chk.equal("summation", f, infinite_q_factorial(infinite<F>({A * Z}, {Z}, q, Family::BasicII, p.dim)));
            const auto f_zq = one_phi_zero(Family::BasicI, A, q, Z * q);
            const auto f_aq = one_phi_zero(Family::BasicI, A * q, q, Z);
            chk.equal("functional equation f(A,Z) = (I-Z)^-1 (I-AZ) f(A,ZQ)", f, inv(I - Z) * (I - A * Z) * f_zq);
            chk.equal("functional equation f(A,Z) = f(A,ZQ) + f(AQ,Z)(I-A)Z", f, f_zq + f_aq * (I - A) * Z);
            chk.equal("functional equation Z f(A,Z) = AZ f(A,ZQ) + f(AQ,Z)(I-A)Z", Z * f,
                      A * Z * f_zq + f_aq * (I - A) * Z);
        });

    add(out,
        {.id = "thm_qbinomial_II",
         .title = "nonterminating q-binomial theorem, type II",
         .statement = "||Z|| < 1: 1phi0^II[A; -; Q, Z] = [AZQ^-1; Z; I]^I_inf (I-AZQ^-1)^-1",
         .mode = Mode::Tolerance,
         .tol = 1e-9,
         .uses_n = false},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& Z = need(p.Z, "Z");
            const F q = need_q(p);
            require_convergent(chk, Z, q);
            const auto I = Matrix<F>::identity(p.dim);
            const auto az = A * Z * (F(1) / q);
            chk.equal("summation", one_phi_zero(Family::BasicII, A, q, Z),
                      infinite_q_factorial(infinite<F>({az}, {Z}, q, Family::BasicI, p.dim)) * inv(I - az));
        });

    auto gauss = [](const auto& p, auto& chk, Family fam) {
        using F = field_t<decltype(p)>;
        const auto& A = need(p.A, "A");
        const auto& B = need(p.B, "B");
        const auto& C = need(p.C, "C");
        const F q = need_q(p);
        const auto P = B * inv(C) * A;
        chk.require_commute(P, A, "BC^-1 A and A");
        chk.require_commute(P, B, "BC^-1 A and B");
        chk.require_commute(P, C, "BC^-1 A and C");
        const auto I = Matrix<F>::identity(p.dim);
        const auto U = inv(A) * C;
        const auto V = U * inv(B);
        const auto CBi = C * inv(B);
        require_convergent(chk, V, q);
        chk.require(frobenius_norm(V) < 0.8, "argument needs ||V|| < 0.8");
        const auto lhs = evaluate(SeriesSpec<F>{{A, B}, {C}, V, BaseQ<F>{q}, fam, Orientation::Normal, {}});
        if (fam == Family::BasicI) {
            chk.equal("summation", lhs, infinite_q_factorial(infinite<F>({CBi, U}, {C, V}, q, Family::BasicI, p.dim)));
        } else {
            chk.equal("summation", lhs,
                      infinite_q_factorial(infinite<F>({CBi * q, U * q}, {C, V}, q, Family::BasicII, p.dim)) *
                          (I - CBi) * (I - U));
        }
    };

    add(out,
        {.id = "conj_qgauss_I",
         .title = "conjectured q-Gauss summation, type I",
         .statement = "BC^-1 A central, U = A^-1 C, V = A^-1 C B^-1, ||V|| < 1: "
                      "2phi1^I[A, B; C; Q, V] = [CB^-1, U; C, V; I]^I_inf",
         .mode = Mode::ConjectureNumeric,
         .tol = 1e-8,
         .family = FamilyName::CentralProduct,
         .uses_n = false},
        [gauss](const auto& p, auto& chk) { gauss(p, chk, Family::BasicI); });

    add(out,
        {.id = "conj_qgauss_II",
         .title = "conjectured q-Gauss summation, type II",
         .statement = "BC^-1 A central, U = A^-1 C, V = A^-1 C B^-1, ||V|| < 1: "
                      "2phi1^II[A, B; C; Q, V] = [CB^-1 Q, UQ; C, V; I]^II_inf (I-CB^-1)(I-U)",
         .mode = Mode::ConjectureNumeric,
         .tol = 1e-8,
         .family = FamilyName::CentralProduct,
         .uses_n = false},
        [gauss](const auto& p, auto& chk) { gauss(p, chk, Family::BasicII); });
}

}  // namespace ncq::catalog_detail
