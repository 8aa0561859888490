#include "ncq/cli.hpp"

#include "ncq/any_matrix.hpp"
#include "ncq/identities.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ncq::cli {

namespace {

int parse_int(std::string_view s, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw BadConfig(std::string("bad ") + what + " '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::pair<int, int> parse_range(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        int v = parse_int(text, "n");
        return {v, v};
    }
    int lo = parse_int(text.substr(0, dots), "n range");
    int hi = parse_int(text.substr(dots + 2), "n range");
    if (lo < 0 || hi < lo) throw BadConfig("bad n range '" + std::string(text) + "'");
    return {lo, hi};
}

std::vector<std::size_t> parse_dims(std::string_view text) {
    std::vector<std::size_t> dims;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        int d = parse_int(text.substr(start, comma - start), "dim");
        if (d <= 0) throw BadConfig("dims must be positive");
        dims.push_back(static_cast<std::size_t>(d));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return dims;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Exact verification of noncommutative hypergeometric summations"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string dims, nrange, family, format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
    };

    auto* verify = app.add_subcommand("verify", "run seeded trials of catalog identities");
    verify->add_option("--filter", cfg.filter, "glob over identity ids, comma separated (default: exact cases)");
    verify->add_option("--trials", cfg.trials, "trials per (identity, dim, n)")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", cfg.seed, "base seed");
    verify->add_option("--dims", dims, "comma separated dimensions, e.g. 2,3");
    verify->add_option("--n", nrange, "order range a..b (inclusive)");
    verify->add_option("--family", family, "override the parameter family");
    verify->add_option("--tol", cfg.tol, "tolerance for complex comparisons");
    verify->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
    verify->add_flag("--timing", cfg.timing, "record elapsed milliseconds in jsonl");
    add_common(verify);

    auto* eval = app.add_subcommand("eval", "evaluate a series given as JSON");
    eval->add_option("--input", cfg.input, "series spec file")->required();
    eval->add_option("--max-terms", cfg.max_terms, "sum exactly this many terms if nonterminating");
    eval->add_option("--tol", cfg.tol, "stop when three consecutive terms are below this norm");
    add_common(eval);

    auto* list = app.add_subcommand("list", "print the identity catalog");
    add_common(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw BadConfig(e.what());
    }

    cfg.command = verify->parsed() ? Command::Verify : eval->parsed() ? Command::Eval : Command::List;
    if (!dims.empty()) cfg.dims = parse_dims(dims);
    if (!nrange.empty()) std::tie(cfg.n_lo, cfg.n_hi) = parse_range(nrange);
    if (!family.empty()) cfg.family = parse_family_name(family);
    cfg.format = format == "jsonl" ? Format::Jsonl : Format::Text;
    return cfg;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadConfig("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <Field F>
std::vector<Matrix<F>> matrices(const nlohmann::json& j, const char* field) {
    std::vector<Matrix<F>> out;
    if (!j.contains(field)) return out;
    if (!j.at(field).is_array()) throw ParseError(std::string("\"") + field + "\" must be an array");
    for (const auto& m : j.at(field)) out.push_back(matrix_from_json_as<F>(m));
    return out;
}

Truncation truncation_from(const nlohmann::json& j, const RunConfig& cfg) {
    Truncation t;
    if (j.contains("truncation")) {
        const auto& tr = j.at("truncation");
        if (tr.is_string() && tr.get<std::string>() == "auto") {
        } else if (tr.is_object() && tr.contains("max_terms")) {
            t = Truncation::terms(tr.at("max_terms").get<std::size_t>());
        } else if (tr.is_object() && tr.contains("tolerance")) {
            t = Truncation::tolerance(tr.at("tolerance").get<double>());
        } else {
            throw ParseError("truncation must be \"auto\", {\"max_terms\": N} or {\"tolerance\": t}");
        }
    }
    if (cfg.max_terms) t = Truncation::terms(*cfg.max_terms);
    if (cfg.tol) t = Truncation::tolerance(*cfg.tol);
    return t;
}

template <Field F>
SeriesResult<F> eval_as(const nlohmann::json& j, const RunConfig& cfg) {
    SeriesSpec<F> s;
    s.uppers = matrices<F>(j, "uppers");
    s.lowers = matrices<F>(j, "lowers");
    if (s.uppers.empty()) throw ParseError("series needs at least one upper parameter");
    const std::size_t n = s.uppers.front().dim();
    s.argument = j.contains("argument") ? matrix_from_json_as<F>(j.at("argument")) : Matrix<F>::identity(n);
    s.family = parse_family(j.value("family", std::string("OrdinaryI")));
    s.orientation = parse_orientation(j.value("orientation", std::string("normal")));
    if (j.contains("q")) {
        const auto& q = j.at("q");
        s.base = BaseQ<F>{q.is_string() ? FieldTraits<F>::parse(q.get<std::string>())
                                        : FieldTraits<F>::parse(q.dump())};
    }
    s.truncation = truncation_from(j, cfg);
    return evaluate_detailed(s);
}

int do_eval(const RunConfig& cfg, std::ostream& out) {
    const nlohmann::json j = parse_json_text(read_file(cfg.input));
    if (!j.is_object() || !j.contains("uppers") || !j.at("uppers").is_array() || j.at("uppers").empty())
        throw ParseError("series spec needs a nonempty \"uppers\" array");
    const ScalarKind kind = kind_of(matrix_from_json(j.at("uppers").front()));
    auto emit = [&](const auto& r) {
        AnyMatrix m = r.sum;
        if (cfg.format == Format::Jsonl) {
            nlohmann::ordered_json o;
            o["result"] = to_json(m);
            o["terms"] = r.terms;
            o["terminating"] = r.termination.terminating;
            out << o.dump() << '\n';
        } else if (r.sum.dim() == 1) {
            using F = typename std::decay_t<decltype(r.sum)>::field_type;
            out << FieldTraits<F>::format(r.sum(0, 0)) << '\n';
        } else {
            out << to_string(r.sum);
        }
    };
    switch (kind) {
        case ScalarKind::Rational: emit(eval_as<Rational>(j, cfg)); break;
        case ScalarKind::Eisenstein: emit(eval_as<Eisenstein>(j, cfg)); break;
        case ScalarKind::ComplexFloat: emit(eval_as<Complex>(j, cfg)); break;
    }
    return 0;
}

int do_list(const RunConfig& cfg, std::ostream& out) {
    for (const auto& c : catalog()) {
        if (cfg.format == Format::Jsonl) {
            nlohmann::ordered_json o;
            o["id"] = c.id;
            o["mode"] = mode_name(c.mode);
            o["family"] = family_name(c.family);
            o["title"] = c.title;
            o["statement"] = c.statement;
            out << o.dump() << '\n';
        } else {
            out << c.id << "  [" << mode_name(c.mode) << ", " << family_name(c.family) << "]  " << c.title << "\n    "
                << c.statement << '\n';
        }
    }
    return 0;
}

std::string text_line(const VerificationReport& r) {
    std::ostringstream s;
    std::string tag(outcome_name(r.outcome));
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    s << tag << ' ' << r.id << " dim=" << r.dim << " n=" << r.n << " trial=" << r.trial << " seed=" << r.seed
      << " residual=" << r.residual;
    if (!r.detail.empty()) s << "  (" << r.detail << ')';
    return s.str();
}

int do_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SuiteConfig sc;
    sc.filter = cfg.filter;
    sc.trials = cfg.trials;
    sc.seed = cfg.seed;
    sc.dims = cfg.dims;
    sc.n_lo = cfg.n_lo;
    sc.n_hi = cfg.n_hi;
    sc.family = cfg.family;
    sc.tol = cfg.tol;
    sc.threads = cfg.threads;
    const auto reports = verify_suite(sc);

    std::size_t counts[5] = {};
    for (const auto& r : reports) {
        ++counts[static_cast<int>(r.outcome)];
        out << (cfg.format == Format::Jsonl ? to_jsonl(r, cfg.timing) : text_line(r)) << '\n';
    }
    std::ostringstream summary;
    summary << "summary: " << reports.size() << " reports, pass=" << counts[0] << " fail=" << counts[1]
            << " violated=" << counts[2] << " error=" << counts[3] << " evidence=" << counts[4];
    (cfg.format == Format::Jsonl ? err : out) << summary.str() << '\n';
    return counts[static_cast<int>(Outcome::Fail)] == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::Verify: return do_verify(cfg, out, err);
            case Command::Eval: return do_eval(cfg, out);
            case Command::List: return do_list(cfg, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace ncq::cli
