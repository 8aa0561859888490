// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "classical_oracle.hpp"
#include "ncq/identities.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ncq;

namespace {

struct Verdict {
    bool ok = true;
    std::string note;
};

struct Tally {
    std::map<Outcome, std::size_t> counts;
    double max_residual = 0;
    std::size_t total = 0;
    std::string first_bad;

    void add(const VerificationReport& r, Outcome expected) {
        ++counts[r.outcome];
        ++total;
        max_residual = std::max(max_residual, r.residual);
        if (r.outcome != expected && first_bad.empty())
            first_bad = r.id + " dim=" + std::to_string(r.dim) + " n=" + std::to_string(r.n) +
                        " seed=" + std::to_string(r.seed) + " " + std::string(outcome_name(r.outcome)) + " " +
                        r.detail;
    }

    std::size_t count(Outcome o) const {
        auto it = counts.find(o);
        return it == counts.end() ? 0 : it->second;
    }

    std::string summary() const {
        std::ostringstream s;
        s << total << " runs";
        for (auto [o, c] : counts) s << ", " << outcome_name(o) << "=" << c;
        s << ", max residual " << max_residual;
        if (!first_bad.empty()) s << "; first unexpected: " << first_bad;
        return s.str();
    }
};

std::vector<VerificationReport> suite(const std::string& filter, int trials, std::vector<std::size_t> dims, int n_lo,
                                      int n_hi, std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.filter = filter;
    cfg.trials = trials;
    cfg.dims = std::move(dims);
    cfg.n_lo = n_lo;
    cfg.n_hi = n_hi;
    cfg.seed = seed;
    return verify_suite(cfg);
}

// Every run must pass; exact runs additionally need a zero residual.
Verdict all_pass(const std::vector<VerificationReport>& reports, bool exact, std::size_t expected_runs) {
    Tally t;
    for (const auto& r : reports) t.add(r, Outcome::Pass);
    Verdict v;
    v.ok = t.total == expected_runs && t.count(Outcome::Pass) == t.total && (!exact || t.max_residual == 0);
    v.note = t.summary();
    if (t.total != expected_runs) v.note += "; expected " + std::to_string(expected_runs) + " runs";
    return v;
}

// Exact grid criteria

Verdict chu_vandermonde() {
    return all_pass(suite("thm_cv_I,thm_cv_II", 50, {1, 2, 3, 4}, 0, 6, 101), true, 2 * 4 * 7 * 50);
}

// The I - CQ^j factors are checked before the identity is evaluated: draws
// are redrawn until every factor up to the order n is invertible.
Verdict q_chu_vandermonde() {
    Tally t;
    std::size_t rejected = 0;
    for (const char* id : {"thm_qcv_I", "thm_qcv_II", "thm_qcv_rev_I", "thm_qcv_rev_II"}) {
        for (std::size_t dim = 1; dim <= 4; ++dim)
            for (int n = 0; n <= 6; ++n)
                for (int trial = 0; trial < 50; ++trial) {
                    ParamFamily fam{FamilyName::Unconstrained, dim, ScalarKind::Rational, 3,
                                    trial_seed(202, id, dim, n, trial), n};
                    // pre-check: I - CQ^j invertible for 0 <= j <= n
                    auto admissible = [&](const Params<Rational>& p) {
                        const auto I = Matrix<Rational>::identity(dim);
                        Rational qj = 1;
                        for (int j = 0; j <= n; ++j, qj *= *p.q) {
                            try {
                                (void)inverse(I - *p.C * qj);
                            } catch (const Singular&) {
                                return false;
                            }
                        }
                        return true;
                    };
                    VerificationReport report;
                    const std::uint64_t base = fam.seed;
                    for (int a = 0; a < default_retries; ++a) {
                        fam.seed = retry_seed(base, a);
                        auto p = sample_as<Rational>(fam);
                        if (!admissible(p)) {
                            ++rejected;
                            continue;
                        }
                        // other factors (A, or the closed form's extra inverse) may still be singular
                        report = verify(id, p);
                        if (report.outcome != Outcome::EvaluationError) break;
                    }
                    t.add(report, Outcome::Pass);
                }
    }
    Verdict v;
    v.ok = t.total == 4 * 4 * 7 * 50 && t.count(Outcome::Pass) == t.total && t.max_residual == 0;
    v.note = t.summary() + ", draws rejected by the pre-check " + std::to_string(rejected);
    return v;
}

Verdict pfaff_saalschuetz() {
    return all_pass(suite("thm_ps_I,thm_ps_II,thm_qps_I,thm_qps_II", 50, {2, 3, 4}, 0, 6, 303), true,
                    4 * 3 * 7 * 50);
}

Verdict dougall() {
    auto reports = suite("thm_dougall,thm_dougall_typeII", 50, {3}, 0, 4, 404);
    Verdict v = all_pass(reports, true, 2 * 5 * 50);
    // the type II case compares the other three bracket combinations
    ParamFamily fam{FamilyName::Rosengren, 3, ScalarKind::Eisenstein, 3, 4040, 3};
    auto run = run_case(find_case("thm_dougall_typeII"), sample_as<Eisenstein>(fam));
    std::size_t combos = 0;
    for (const auto& c : run.checks) combos += c.label.starts_with("series") && c.equal;
    v.ok = v.ok && combos == 3;
    v.note += ", bracket combinations checked per run: 1 + " + std::to_string(combos);
    return v;
}

Verdict lemmas_and_micro() {
    const std::string filter = "lem_add_*,lem_ps_*,lem_dougall,micro_*";
    auto reports = suite(filter, 100, {2, 3}, 0, 6, 505);
    std::size_t expected = 0;
    for (const auto& c : catalog()) {
        if (!glob_match(filter, c.id)) continue;
        const std::size_t dims = c.family == FamilyName::Rosengren ? 1 : 2;
        expected += dims * (c.uses_n ? 7 : 1) * 100;
    }
    return all_pass(reports, true, expected);
}

Verdict reversal_lemmas() {
    // lem_aux2 needs n >= 1
    return all_pass(suite("lem_aux1,lem_aux2,prop_base_inversion,prop_sum_reversal", 50, {2, 3}, 0, 5, 606), true,
                    (3 * 6 + 5) * 2 * 50);
}

Verdict q_binomial() {
    auto reports = suite("thm_qbinomial_I,thm_qbinomial_II", 50, {2, 3}, 0, 0, 707);
    Verdict v = all_pass(reports, false, 2 * 2 * 50);
    // the sampler keeps ||Z||_F <= 0.5 and |q| <= 0.5 on every draw, retries included
    std::size_t out_of_range = 0;
    for (const auto& r : reports)
        for (int a = 0; a < 3; ++a) {
            auto p = sample_as<Complex>(
                {FamilyName::Unconstrained, r.dim, ScalarKind::ComplexFloat, 3, retry_seed(r.seed, a)});
            out_of_range += frobenius_norm(*p.Z) > 0.5 || std::abs(*p.q) > 0.5;
        }
    v.ok = v.ok && out_of_range == 0;
    for (const auto& r : reports) v.ok = v.ok && r.residual <= 1e-9;
    v.note += ", draws outside the region " + std::to_string(out_of_range);
    return v;
}

Verdict q_gauss_evidence() {
    auto reports = suite("conj_qgauss_I,conj_qgauss_II", 50, {2, 3}, 0, 0, 808);
    Tally t;
    for (const auto& r : reports) t.add(r, Outcome::Evidence);
    Verdict v;
    v.ok = t.total == 2 * 2 * 50 && t.count(Outcome::Evidence) == t.total && t.max_residual <= 1e-8;
    v.note = t.summary() + " (reported as evidence)";
    return v;
}

Verdict telescoping() { return all_pass(suite("prop_telescoping", 50, {2, 3}, 0, 5, 909), true, 2 * 6 * 50); }

Verdict reversed_chu_vandermonde() {
    Verdict v = all_pass(suite("thm_cv_reversed", 50, {1, 2, 3, 4}, 0, 6, 1010), true, 4 * 7 * 50);
    // reversing twice returns every factorial unchanged, over all families
    std::mt19937_64 rng(1011);
    auto entry = [&] {
        Rational r(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3));
        r.canonicalize();
        return r;
    };
    auto mat = [&](std::size_t n) {
        Matrix<Rational> m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry();
        return m;
    };
    std::size_t checked = 0, bad = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 1 + t % 4;
        const Family fam = static_cast<Family>(t % 4);
        std::optional<BaseQ<Rational>> base;
        if (is_basic(fam)) base = BaseQ<Rational>{Rational(3, 5)};
        FactorialSpec<Rational> s{{mat(n), mat(n)}, {mat(n), mat(n)}, mat(n), base, fam,
                                  t % 8 < 4 ? Orientation::Normal : Orientation::Reversed, t % 7};
        try {
            const auto value = shifted_factorial(s);
            bad += !(shifted_factorial(mirrored(mirrored(s))) == value);
            bad += !(shifted_factorial(mirrored(transposed(s))) == value.transpose());
            ++checked;
        } catch (const Singular&) {
        }
    }
    v.ok = v.ok && bad == 0 && checked > 200;
    v.note += " | double reversal on " + std::to_string(checked) + " factorials, mismatches " + std::to_string(bad);
    return v;
}

// Scalar regression against the classical sums

struct ScalarDraw {
    Rational a, b, c, d, q;
};

using Oracle = std::function<std::pair<Rational, Rational>(const ScalarDraw&, long)>;

Verdict scalar_oracles() {
    const std::vector<std::pair<std::vector<const char*>, Oracle>> groups = {
        {{"thm_cv_I", "thm_cv_II", "thm_cv_reversed"},
         [](const ScalarDraw& s, long n) {
             return std::pair{oracle::chu_vandermonde_sum(s.a, s.c, n), oracle::chu_vandermonde_closed(s.a, s.c, n)};
         }},
        {{"thm_qcv_I", "thm_qcv_II"},
         [](const ScalarDraw& s, long n) {
             return std::pair{oracle::q_chu_vandermonde_sum(s.a, s.c, s.q, n),
                              oracle::q_chu_vandermonde_closed(s.a, s.c, s.q, n)};
         }},
        {{"thm_qcv_rev_I", "thm_qcv_rev_II"},
         [](const ScalarDraw& s, long n) {
             return std::pair{oracle::q_chu_vandermonde_rev_sum(s.a, s.c, s.q, n),
                              oracle::q_chu_vandermonde_rev_closed(s.a, s.c, s.q, n)};
         }},
        {{"thm_ps_I", "thm_ps_II"},
         [](const ScalarDraw& s, long n) {
             return std::pair{oracle::pfaff_saalschuetz_sum(s.a, s.b, s.c, n),
                              oracle::pfaff_saalschuetz_closed(s.a, s.b, s.c, n)};
         }},
        {{"thm_qps_I", "thm_qps_II"},
         [](const ScalarDraw& s, long n) {
             return std::pair{oracle::q_pfaff_saalschuetz_sum(s.a, s.b, s.c, s.q, n),
                              oracle::q_pfaff_saalschuetz_closed(s.a, s.b, s.c, s.q, n)};
         }},
        {{"thm_dougall", "thm_dougall_typeII"},
         [](const ScalarDraw& s, long n) {
             return std::pair{oracle::dougall_sum(s.a, s.b, s.c, s.d, n),
                              oracle::dougall_closed(s.a, s.b, s.c, s.d, n)};
         }},
    };
    std::mt19937_64 rng(1111);
    auto draw = [&] {
        Rational r(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
        r.canonicalize();
        return r;
    };
    const Rational bases[] = {Rational(1, 2), Rational(2, 3), Rational(3, 5)};
    std::size_t compared = 0, skipped = 0, bad = 0;
    std::string first;
    for (const auto& [ids, orc] : groups)
        for (const char* id : ids)
            for (long n = 0; n <= 6; ++n)
                for (int t = 0; t < 20; ++t) {
                    ScalarDraw s{draw(), draw(), draw(), draw(), bases[rng() % 3]};
                    Params<Rational> p;
                    p.dim = 1;
                    p.n = static_cast<int>(n);
                    p.A = Matrix<Rational>::scalar(1, s.a);
                    p.B = Matrix<Rational>::scalar(1, s.b);
                    p.C = Matrix<Rational>::scalar(1, s.c);
                    p.D = Matrix<Rational>::scalar(1, s.d);
                    p.Z = Matrix<Rational>::identity(1);
                    p.q = s.q;
                    auto run = run_case(find_case(id), p);
                    if (run.report.outcome == Outcome::EvaluationError) {
                        ++skipped;  // a denominator of the classical sum vanishes
                        continue;
                    }
                    const SubCheck<Rational>* sum = nullptr;
                    for (const auto& c : run.checks)
                        if (c.label == "summation" || c.label == "series II = product II") sum = &c;
                    bool ok = run.report.outcome == Outcome::Pass && sum != nullptr;
                    if (ok) {
                        auto [series, closed] = orc(s, n);
                        ok = series == closed && sum->lhs(0, 0) == series && sum->rhs(0, 0) == closed;
                    }
                    ++compared;
                    if (!ok) {
                        ++bad;
                        if (first.empty()) first = std::string(id) + " n=" + std::to_string(n);
                    }
                }
    Verdict v;
    v.ok = bad == 0 && compared > 1000;
    v.note = std::to_string(compared) + " scalar runs compared with the classical sums and closed forms, " +
             std::to_string(skipped) + " undefined draws skipped, mismatches " + std::to_string(bad);
    if (!first.empty()) v.note += " (first: " + first + ")";
    return v;
}

// Every terminating summation reports the summand at n+1, computed directly.
Verdict termination() {
    std::size_t seen = 0, nonzero = 0, missing = 0;
    for (const auto& c : catalog()) {
        if (!c.id.starts_with("thm_") || c.mode != Mode::Exact) continue;
        const bool rosengren = c.family == FamilyName::Rosengren;
        for (std::size_t dim : rosengren ? std::vector<std::size_t>{3} : std::vector<std::size_t>{1, 2, 3})
            for (int n = 0; n <= 6; ++n)
                for (int trial = 0; trial < 5; ++trial) {
                    ParamFamily fam{c.family, dim, rosengren ? ScalarKind::Eisenstein : ScalarKind::Rational, 3,
                                    trial_seed(1212, c.id, dim, n, trial), n};
                    auto count = [&](const auto& run) {
                        if (run.report.outcome == Outcome::EvaluationError) return false;
                        bool found = false;
                        for (const auto& s : run.checks)
                            if (s.label == "summand n+1") {
                                found = true;
                                ++seen;
                                nonzero += !s.lhs.is_zero();
                            }
                        missing += !found;
                        return true;
                    };
                    const std::uint64_t base = fam.seed;
                    for (int a = 0; a < default_retries; ++a) {
                        fam.seed = retry_seed(base, a);
                        bool done = rosengren ? count(run_case(c, sample_as<Eisenstein>(fam)))
                                              : count(run_case(c, sample_as<Rational>(fam)));
                        if (done) break;
                    }
                }
    }
    Verdict v;
    v.ok = seen > 0 && nonzero == 0 && missing == 0;
    v.note = std::to_string(seen) + " terminating series checked, nonzero summands " + std::to_string(nonzero) +
             ", runs without the check " + std::to_string(missing);
    return v;
}

Verdict reproducibility() {
    auto render = [](unsigned threads) {
        SuiteConfig cfg;
        cfg.trials = 2;
        cfg.dims = {1, 2, 3};
        cfg.n_hi = 4;
        cfg.seed = 1313;
        cfg.threads = threads;
        std::string out;
        for (const auto& r : verify_suite(cfg)) out += to_jsonl(r) + "\n";
        return out;
    };
    const std::string a = render(1), b = render(1), c = render(4);
    Verdict v;
    v.ok = !a.empty() && a == b && a == c;
    v.note = std::to_string(a.size()) + " bytes of jsonl over the exact catalog; identical across repeated and " +
             "multi-threaded runs: " + (v.ok ? "yes" : "no");
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"Chu-Vandermonde I and II, exact over Q, dims 1-4, n 0-6, 50 trials", chu_vandermonde},
        {"q-Chu-Vandermonde, both arguments, I and II, invertibility pre-checked", q_chu_vandermonde},
        {"Pfaff-Saalschuetz and q-Pfaff-Saalschuetz I and II, dims 2-4", pfaff_saalschuetz},
        {"Dougall 7F6 over Q(w), n 0-4, all four bracket combinations", dougall},
        {"addition lemmas and micro identities, 100 trials, dims 2-3", lemmas_and_micro},
        {"reversal lemmas, base inversion, summation reversal, dims 2-3, n 0-5", reversal_lemmas},
        {"nonterminating q-binomial I and II, complex, residual <= 1e-9", q_binomial},
        {"conjectured q-Gauss I and II, evidence residual <= 1e-8", q_gauss_evidence},
        {"telescoping sum with indexed families, dims 2-3, n 0-5", telescoping},
        {"reversed Chu-Vandermonde and the double reversal involution", reversed_chu_vandermonde},
        {"dimension-1 runs against classical scalar oracles", scalar_oracles},
        {"summand n+1 of every terminating series is exactly zero", termination},
        {"byte-identical jsonl for identical seeds", reproducibility},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !v.ok;
        std::printf("%s %2zu  %s  [%.1fs]\n      %s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                    v.note.c_str());
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                total);
    return failed == 0 ? 0 : 1;
}
