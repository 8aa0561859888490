#pragma once

#include "ncq/generators.hpp"
#include "ncq/series.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncq {

enum class Mode { Exact, Tolerance, ConjectureNumeric };
// Evidence is the outcome of a conjecture run: a residual, not a verdict.
enum class Outcome { Pass, Fail, ConstraintViolated, EvaluationError, Evidence };

std::string_view mode_name(Mode m);
std::string_view outcome_name(Outcome o);

template <Field F>
struct SubCheck {
    std::string label;
    Matrix<F> lhs;
    Matrix<F> rhs;
    bool equal = false;
    double residual = 0;
};

// Collects the comparisons of one identity run. Exact kinds compare entrywise;
// ComplexFloat uses the relative Frobenius residual against tol.
template <Field F>
class Checker {
public:
    explicit Checker(double tol) : tol_(tol) {}

    void require(bool ok, std::string_view what) const {
        if (!ok) throw ConstraintViolated(std::string(what));
    }
    void require_commute(const Matrix<F>& x, const Matrix<F>& y, std::string_view what) const {
        require(approx_equal(x * y, y * x, tol_), std::string(what) + " must commute");
    }

    void equal(std::string label, Matrix<F> lhs, Matrix<F> rhs) {
        SubCheck<F> c{std::move(label), std::move(lhs), std::move(rhs)};
        double scale = std::max(1.0, frobenius_norm(c.rhs));
        c.residual = frobenius_norm(c.lhs - c.rhs) / scale;
        if constexpr (FieldTraits<F>::exact) {
            c.equal = c.lhs == c.rhs;
            if (c.equal) c.residual = 0;
        } else {
            c.equal = c.residual <= tol_;
        }
        checks_.push_back(std::move(c));
    }
    void vanishes(std::string label, Matrix<F> m) {
        const std::size_t n = m.dim();
        equal(std::move(label), std::move(m), Matrix<F>::zero(n));
    }

    double tol() const { return tol_; }
    const std::vector<SubCheck<F>>& checks() const { return checks_; }

private:
    double tol_;
    std::vector<SubCheck<F>> checks_;
};

template <Field F>
using CaseBody = std::function<void(const Params<F>&, Checker<F>&)>;

struct IdentityCase {
    std::string id;
    std::string title;      // e.g. "Chu-Vandermonde, type I"
    std::string statement;  // the identity, written out
    Mode mode = Mode::Exact;
    double tol = 0;         // Tolerance / ConjectureNumeric threshold
    FamilyName family = FamilyName::Unconstrained;
    bool uses_n = true;
    int min_n = 0;
    CaseBody<Rational> on_rational;
    CaseBody<Eisenstein> on_eisenstein;
    CaseBody<Complex> on_complex;

    // The kind a suite run samples: complex for numeric modes, Q(w) for the
    // Rosengren family, Q otherwise.
    ScalarKind default_kind() const;

    template <Field F>
    const CaseBody<F>& body() const {
        if constexpr (std::is_same_v<F, Rational>) return on_rational;
        else if constexpr (std::is_same_v<F, Eisenstein>) return on_eisenstein;
        else return on_complex;
    }
};

const std::vector<IdentityCase>& catalog();
const IdentityCase& find_case(std::string_view id);  // throws UnknownIdentity

// Shell-style pattern with * and ?; a comma separates alternatives.
bool glob_match(std::string_view pattern, std::string_view text);

struct VerificationReport {
    std::string id;
    std::uint64_t seed = 0;
    int trial = 0;
    std::size_t dim = 0;
    int n = 0;
    Outcome outcome = Outcome::Pass;
    double residual = 0;
    double ms = 0;
    std::string detail;
};

template <Field F>
struct CaseRun {
    VerificationReport report;
    std::vector<SubCheck<F>> checks;
};

// Tolerance used for a case when no override is given (complex runs of exact
// cases fall back to 1e-9).
double effective_tol(const IdentityCase& c, std::optional<double> override_tol);

template <Field F>
CaseRun<F> run_case(const IdentityCase& c, const Params<F>& p, std::optional<double> tol = std::nullopt) {
    CaseRun<F> run;
    run.report.id = c.id;
    run.report.dim = p.dim;
    run.report.n = p.n;
    Checker<F> chk(effective_tol(c, tol));
    const auto start = std::chrono::steady_clock::now();
    try {
        if (c.uses_n && p.n < c.min_n)
            throw ConstraintViolated("needs n >= " + std::to_string(c.min_n));
        c.body<F>()(p, chk);
        bool ok = true;
        for (const auto& s : chk.checks()) {
            ok = ok && s.equal;
            run.report.residual = std::max(run.report.residual, s.residual);
            if (!s.equal && run.report.detail.empty()) run.report.detail = "mismatch: " + s.label;
        }
        run.report.outcome = c.mode == Mode::ConjectureNumeric ? Outcome::Evidence : ok ? Outcome::Pass : Outcome::Fail;
    } catch (const ConstraintViolated& e) {
        run.report.outcome = Outcome::ConstraintViolated;
        run.report.detail = e.what();
    } catch (const Singular& e) {
        run.report.outcome = Outcome::EvaluationError;
        run.report.detail = std::string("Singular: ") + e.what();
    } catch (const Error& e) {
        run.report.outcome = Outcome::EvaluationError;
        run.report.detail = e.what();
    }
    run.report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    run.checks = chk.checks();
    return run;
}

VerificationReport verify(std::string_view id, const ParamBundle& params,
                          std::optional<double> tol = std::nullopt);

struct SuiteConfig {
    std::string filter;  // empty: every Exact-mode case
    int trials = 10;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{1, 2, 3};
    int n_lo = 0;
    int n_hi = 5;
    std::optional<FamilyName> family;  // overrides each case's default family
    std::optional<double> tol;
    unsigned threads = 0;              // 0: hardware concurrency
};

// Cases in catalog order, then dims, n, trial. Rosengren-family cases run at
// dim 3 only and n-independent cases once per (dim, trial) with n = 0.
// Draws that hit a singular factor are redrawn up to 100 times.
std::vector<VerificationReport> verify_suite(const SuiteConfig& cfg);

std::uint64_t trial_seed(std::uint64_t seed, std::string_view id, std::size_t dim, int n, int trial);

// One JSON object per line: {id, seed, trial, dim, n, outcome, residual, ms}.
// Elapsed time is nondeterministic, so ms is null unless timing is requested.
std::string to_jsonl(const VerificationReport& r, bool timing = false);

}  // namespace ncq
