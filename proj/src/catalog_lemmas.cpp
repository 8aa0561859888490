#include "catalog_support.hpp"

namespace ncq::catalog_detail {

namespace {

template <Field F>
void require_central(Checker<F>& chk, const Matrix<F>& s, const Matrix<F>& a, const Matrix<F>& b,
                     const Matrix<F>& c, std::string_view name) {
    chk.require_commute(s, a, std::string(name) + " and A");
    chk.require_commute(s, b, std::string(name) + " and B");
    chk.require_commute(s, c, std::string(name) + " and C");
}

}  // namespace

void add_lemma_cases(std::vector<IdentityCase>& out) {
    add(out,
        {.id = "lem_add_I",
         .title = "addition formula, shifted factorial of type I",
         .statement = "[C-A; C]^I_n - [C-A; C+I]^I_n C^-1 A = [C-A; C]^I_{n+1}"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            auto lhs = falling<F>({C - A}, {C}, I, n) - falling<F>({C - A}, {C + F(1)}, I, n) * inv(C) * A;
            chk.equal("addition", lhs, falling<F>({C - A}, {C}, I, n + 1));
        });

    add(out,
        {.id = "lem_add_II",
         .title = "addition formula, shifted factorial of type II",
         .statement = "[C-A+I; C]^II_n (C-A+nI)^-1 - C^-1 A [C-A+I; C+I]^II_n (C-A+nI)^-1 = "
                      "[C-A+I; C]^II_{n+1} (C-A+(n+1)I)^-1"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto u = C - A + F(1);
            const auto t = inv(C - A + F(n));
            auto lhs = rising<F>({u}, {C}, I, n) * t - inv(C) * A * rising<F>({u}, {C + F(1)}, I, n) * t;
            chk.equal("addition", lhs, rising<F>({u}, {C}, I, n + 1) * inv(C - A + F(n + 1)));
        });

    add(out,
        {.id = "lem_add_qI",
         .title = "addition formula, Q-shifted factorial of type I",
         .statement = "[CA^-1; C; A]^I_n - [CA^-1; CQ; A]^I_n (I-C)^-1(I-A) = [CA^-1; C; A]^I_{n+1}"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto u = C * inv(A);
            auto lhs = q_falling<F>({u}, {C}, q, A, n) - q_falling<F>({u}, {C * q}, q, A, n) * inv(I - C) * (I - A);
            chk.equal("addition", lhs, q_falling<F>({u}, {C}, q, A, n + 1));
        });

    add(out,
        {.id = "lem_add_qI_rev",
         .title = "addition formula, Q-shifted factorial of type I, unit argument",
         .statement = "with U = A^-1 C: [U; C; I]^I_n - [U; CQ; I]^I_n (I-C)^-1(I-A) U Q^n = [U; C; I]^I_{n+1}"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto U = inv(A) * C;
            auto lhs = q_falling<F>({U}, {C}, q, I, n) -
                       q_falling<F>({U}, {C * q}, q, I, n) * inv(I - C) * (I - A) * U * power(q, n);
            chk.equal("addition", lhs, q_falling<F>({U}, {C}, q, I, n + 1));
        });

    add(out,
        {.id = "lem_add_qII",
         .title = "addition formula, Q-shifted factorial of type II",
         .statement = "[CA^-1 Q; C; A]^II_n (A-CQ^n)^-1 - (I-C)^-1(I-A) [CA^-1 Q; CQ; A]^II_n (A-CQ^n)^-1 = "
                      "[CA^-1 Q; C; A]^II_{n+1} (A-CQ^{n+1})^-1"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto u = C * inv(A) * q;
            const auto t = inv(A - C * power(q, n));
            auto lhs = q_rising<F>({u}, {C}, q, A, n) * t -
                       inv(I - C) * (I - A) * q_rising<F>({u}, {C * q}, q, A, n) * t;
            chk.equal("addition", lhs, q_rising<F>({u}, {C}, q, A, n + 1) * inv(A - C * power(q, n + 1)));
        });

    add(out,
        {.id = "lem_add_qII_rev",
         .title = "addition formula, Q-shifted factorial of type II, unit argument",
         .statement = "with U = A^-1 C: [UQ; C; I]^II_n (I-UQ^n)^-1 - (I-C)^-1(I-A) U Q^n [UQ; CQ; I]^II_n "
                      "(I-UQ^n)^-1 = [UQ; C; I]^II_{n+1} (I-UQ^{n+1})^-1"},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& C = need(p.C, "C");
            const F q = need_q(p);
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto U = inv(A) * C;
            const auto t = inv(I - U * power(q, n));
            auto lhs = q_rising<F>({U * q}, {C}, q, I, n) * t -
                       inv(I - C) * (I - A) * U * power(q, n) * q_rising<F>({U * q}, {C * q}, q, I, n) * t;
            chk.equal("addition", lhs, q_rising<F>({U * q}, {C}, q, I, n + 1) * inv(I - U * power(q, n + 1)));
        });

    add(out,
        {.id = "lem_ps_I",
         .title = "addition formula behind the balanced 3F2 sum, type I",
         .statement = "S = A+B-C central, K = C^-1 A (S+(1-n)I)^-1 B (S-nI)^-1 (S+I): "
                      "[C-B, C-A; C, C-A-B]^I_n - [C-B, C-A; C+I, C-A-B-I]^I_n K = [C-B, C-A; C, C-A-B]^I_{n+1}",
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
            const auto K = inv(C) * A * inv(S + F(1 - n)) * B * inv(S - F(n)) * (S + F(1));
            const std::vector<Matrix<F>> ups{C - B, C - A};
            auto lhs = falling<F>(ups, {C, C - A - B}, I, n) - falling<F>(ups, {C + F(1), C - A - B - F(1)}, I, n) * K;
            chk.equal("addition", lhs, falling<F>(ups, {C, C - A - B}, I, n + 1));
        });

    add(out,
        {.id = "lem_ps_II",
         .title = "addition formula behind the balanced 3F2 sum, type II",
         .statement = "S = A+B-C central, K as in lem_ps_I, T_n = (C-A+nI)^-1 (C-B+nI)^-1: "
                      "[C-B+I, C-A+I; C, C-A-B]^II_n T_n - K [C-B+I, C-A+I; C+I, C-A-B-I]^II_n T_n = "
                      "[C-B+I, C-A+I; C, C-A-B]^II_{n+1} T_{n+1}",
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
            const auto K = inv(C) * A * inv(S + F(1 - n)) * B * inv(S - F(n)) * (S + F(1));
            auto T = [&](long k) { return inv(C - A + F(k)) * inv(C - B + F(k)); };
            const std::vector<Matrix<F>> ups{C - B + F(1), C - A + F(1)};
            auto lhs = rising<F>(ups, {C, C - A - B}, I, n) * T(n) -
                       K * rising<F>(ups, {C + F(1), C - A - B - F(1)}, I, n) * T(n);
            chk.equal("addition", lhs, rising<F>(ups, {C, C - A - B}, I, n + 1) * T(n + 1));
        });

    // The correction term carries Q^{-n}; without it the formula fails for n >= 1.
    add(out,
        {.id = "lem_ps_qI",
         .title = "addition formula behind the balanced 3phi2 sum, type I",
         .statement = "P = BC^-1 A central, U = A^-1 C, V = A^-1 C B^-1, "
                      "K = (I-C)^-1(I-A)(I-PQ^{1-n})^-1(I-B)(I-PQ^-n)^-1(I-PQ): "
                      "[CB^-1, U; C, V; I]^I_n - [CB^-1, U; CQ, VQ^-1; I]^I_n K Q^-n = [CB^-1, U; C, V; I]^I_{n+1}",
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
            const auto V = U * inv(B);
            const auto K = inv(I - C) * (I - A) * inv(I - P * power(q, 1 - n)) * (I - B) * inv(I - P * power(q, -n)) *
                           (I - P * q);
            const std::vector<Matrix<F>> ups{C * inv(B), U};
            auto lhs = q_falling<F>(ups, {C, V}, q, I, n) -
                       q_falling<F>(ups, {C * q, V * power(q, -1)}, q, I, n) * K * power(q, -n);
            chk.equal("addition", lhs, q_falling<F>(ups, {C, V}, q, I, n + 1));
        });

    add(out,
        {.id = "lem_ps_qII",
         .title = "addition formula behind the balanced 3phi2 sum, type II",
         .statement = "P, U, V, K as in lem_ps_qI, T_n = (I-UQ^n)^-1 (I-CB^-1 Q^n)^-1: "
                      "[CB^-1 Q, UQ; C, V; I]^II_n T_n - Q^-n K [CB^-1 Q, UQ; CQ, VQ^-1; I]^II_n T_n = "
                      "[CB^-1 Q, UQ; C, V; I]^II_{n+1} T_{n+1}",
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
            const auto V = U * inv(B);
            const auto CBi = C * inv(B);
            const auto K = inv(I - C) * (I - A) * inv(I - P * power(q, 1 - n)) * (I - B) * inv(I - P * power(q, -n)) *
                           (I - P * q);
            auto T = [&](long k) { return inv(I - U * power(q, k)) * inv(I - CBi * power(q, k)); };
            const std::vector<Matrix<F>> ups{CBi * q, U * q};
            auto lhs = q_rising<F>(ups, {C, V}, q, I, n) * T(n) -
                       power(q, -n) * K * q_rising<F>(ups, {C * q, V * power(q, -1)}, q, I, n) * T(n);
            chk.equal("addition", lhs, q_rising<F>(ups, {C, V}, q, I, n + 1) * T(n + 1));
        });

    add(out,
        {.id = "lem_dougall",
         .title = "addition formula behind the very-well-poised 7F6 sum",
         .statement = "comrel(A,B,C,D), T = B+C+D-A: "
                      "[A-C-D+I, A-B-D+I, A+I, A-B-C+I; A-C+I, A-B+I, A-D+I, A-B-C-D+I]^I_n - "
                      "[A-C-D+I, A-B-D+I, A+3I, A-B-C+I; A-C+2I, A-B+2I, A-D+2I, A-B-C-D]^I_n "
                      "(T-(n+1)I)^-1 T (A+(n+1)I)^-1 (A+I) (A+(n+2)I)^-1 (A+2I) (T-nI)^-1 (2A-B-C-D+(2+2n)I) "
                      "(A-C+I)^-1 B (A-B+I)^-1 C (A-D+I)^-1 D = [first bracket]^I_{n+1}",
         .family = FamilyName::Rosengren},
        [](const auto& p, auto& chk) {
            using F = field_t<decltype(p)>;
            const auto& A = need(p.A, "A");
            const auto& B = need(p.B, "B");
            const auto& C = need(p.C, "C");
            const auto& D = need(p.D, "D");
            chk.require(check_comrel(A, B, C, D, chk.tol()), "commutation relations comrel(A,B,C,D)");
            const auto I = Matrix<F>::identity(p.dim);
            const long n = p.n;
            const auto one = F(1);
            const auto T = B + C + D - A;
            const std::vector<Matrix<F>> u{A - C - D + one, A - B - D + one, A + one, A - B - C + one};
            const std::vector<Matrix<F>> l{A - C + one, A - B + one, A - D + one, A - B - C - D + one};
            const std::vector<Matrix<F>> u2{A - C - D + one, A - B - D + one, A + F(3), A - B - C + one};
            const std::vector<Matrix<F>> l2{A - C + F(2), A - B + F(2), A - D + F(2), A - B - C - D};
            const auto K = inv(T - F(n + 1)) * T * inv(A + F(n + 1)) * (A + one) * inv(A + F(n + 2)) * (A + F(2)) *
                           inv(T - F(n)) * (F(2) * A - B - C - D + F(2 + 2 * n)) * inv(A - C + one) * B *
                           inv(A - B + one) * C * inv(A - D + one) * D;
            auto lhs = falling<F>(u, l, I, n) - falling<F>(u2, l2, I, n) * K;
            chk.equal("addition", lhs, falling<F>(u, l, I, n + 1));
        });
}

}  // namespace ncq::catalog_detail
