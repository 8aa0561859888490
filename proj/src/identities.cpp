#include "ncq/identities.hpp"

#include "catalog_support.hpp"

#include <json.hpp>

#include <atomic>
#include <thread>

namespace ncq {

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::Exact: return "exact";
        case Mode::Tolerance: return "tolerance";
        case Mode::ConjectureNumeric: return "conjecture";
    }
    return "?";
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::ConstraintViolated: return "constraint_violated";
        case Outcome::EvaluationError: return "evaluation_error";
        case Outcome::Evidence: return "evidence";
    }
    return "?";
}

ScalarKind IdentityCase::default_kind() const {
    if (mode != Mode::Exact) return ScalarKind::ComplexFloat;
    return family == FamilyName::Rosengren ? ScalarKind::Eisenstein : ScalarKind::Rational;
}

const std::vector<IdentityCase>& catalog() {
    static const std::vector<IdentityCase> cases = [] {
        std::vector<IdentityCase> out;
        catalog_detail::add_lemma_cases(out);
        catalog_detail::add_summation_cases(out);
        catalog_detail::add_other_cases(out);
        return out;
    }();
    return cases;
}

const IdentityCase& find_case(std::string_view id) {
    for (const auto& c : catalog())
        if (c.id == id) return c;
    throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

namespace {

bool glob_one(std::string_view p, std::string_view t) {
    // iterative matcher with single-star backtracking
    std::size_t pi = 0, ti = 0, star = std::string_view::npos, mark = 0;
    while (ti < t.size()) {
        if (pi < p.size() && (p[pi] == '?' || p[pi] == t[ti])) {
            ++pi;
            ++ti;
        } else if (pi < p.size() && p[pi] == '*') {
            star = pi++;
            mark = ti;
        } else if (star != std::string_view::npos) {
            pi = star + 1;
            ti = ++mark;
        } else {
            return false;
        }
    }
    while (pi < p.size() && p[pi] == '*') ++pi;
    return pi == p.size();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view text) {
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = pattern.find(',', start);
        if (glob_one(pattern.substr(start, comma - start), text)) return true;
        if (comma == std::string_view::npos) return false;
        start = comma + 1;
    }
}

double effective_tol(const IdentityCase& c, std::optional<double> override_tol) {
    if (override_tol) return *override_tol;
    return c.mode == Mode::Exact ? 1e-9 : c.tol;
}

VerificationReport verify(std::string_view id, const ParamBundle& params, std::optional<double> tol) {
    const IdentityCase& c = find_case(id);
    return std::visit([&](const auto& p) { return run_case(c, p, tol).report; }, params);
}

std::uint64_t trial_seed(std::uint64_t seed, std::string_view id, std::size_t dim, int n, int trial) {
    // FNV-1a over the id, then mixed with the grid coordinates
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char ch : id) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    std::uint64_t x = seed;
    for (std::uint64_t v : {h, static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(trial)})
        x = retry_seed(x ^ v, 1);
    return x;
}

namespace {

struct Task {
    const IdentityCase* c;
    ParamFamily family;
    int trial;
};

VerificationReport run_task(const Task& t, std::optional<double> tol) {
    VerificationReport last;
    const std::uint64_t seed = t.family.seed;
    for (int a = 0; a < default_retries; ++a) {
        ParamFamily fam = t.family;
        fam.seed = retry_seed(seed, a);
        try {
            ParamBundle p = sample(fam);
            last = std::visit([&](const auto& x) { return run_case(*t.c, x, tol).report; }, p);
        } catch (const Error& e) {
            last = VerificationReport{t.c->id, seed, t.trial, fam.dim, fam.n, Outcome::EvaluationError, 0, 0, e.what()};
            break;
        }
        const bool singular = last.outcome == Outcome::EvaluationError && last.detail.starts_with("Singular");
        if (!singular) break;
        if (a + 1 == default_retries) last.detail = "ExhaustedRetries: " + last.detail;
    }
    last.seed = seed;
    last.trial = t.trial;
    return last;
}

}  // namespace

std::vector<VerificationReport> verify_suite(const SuiteConfig& cfg) {
    if (cfg.trials < 0) throw BadConfig("trials must be nonnegative");
    if (cfg.n_lo < 0 || cfg.n_hi < cfg.n_lo) throw BadConfig("bad n range");
    std::vector<Task> tasks;
    for (const auto& c : catalog()) {
        const bool selected = cfg.filter.empty() ? c.mode == Mode::Exact : glob_match(cfg.filter, c.id);
        if (!selected) continue;
        const FamilyName fam = cfg.family.value_or(c.family);
        const ScalarKind kind = c.mode != Mode::Exact        ? ScalarKind::ComplexFloat
                                : fam == FamilyName::Rosengren ? ScalarKind::Eisenstein
                                                               : ScalarKind::Rational;
        const std::vector<std::size_t> dims =
            fam == FamilyName::Rosengren ? std::vector<std::size_t>{3} : cfg.dims;
        for (std::size_t dim : dims) {
            const int lo = c.uses_n ? std::max(cfg.n_lo, c.min_n) : 0;
            const int hi = c.uses_n ? cfg.n_hi : 0;
            for (int n = lo; n <= hi; ++n)
                for (int trial = 0; trial < cfg.trials; ++trial) {
                    ParamFamily pf{fam, dim, kind, 3, trial_seed(cfg.seed, c.id, dim, n, trial), n};
                    tasks.push_back({&c, pf, trial});
                }
        }
    }

    std::vector<VerificationReport> out(tasks.size());
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, tasks.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) out[i] = run_task(tasks[i], cfg.tol);
    };
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    pool.clear();
    return out;
}

std::string to_jsonl(const VerificationReport& r, bool timing) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["seed"] = r.seed;
    j["trial"] = r.trial;
    j["dim"] = r.dim;
    j["n"] = r.n;
    j["outcome"] = outcome_name(r.outcome);
    j["residual"] = r.residual;
    j["ms"] = timing ? nlohmann::ordered_json(r.ms) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

}  // namespace ncq
