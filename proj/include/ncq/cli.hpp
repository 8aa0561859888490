#pragma once

#include "ncq/generators.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ncq::cli {

enum class Command { Verify, Eval, List };
enum class Format { Text, Jsonl };

struct RunConfig {
    Command command = Command::Verify;
    std::string filter;  // empty: every exact case
    int trials = 10;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{1, 2, 3};
    int n_lo = 0;
    int n_hi = 5;
    std::optional<FamilyName> family;
    std::optional<double> tol;
    Format format = Format::Text;
    std::string input;
    std::optional<std::size_t> max_terms;
    bool timing = false;
    unsigned threads = 0;
};

// Throws BadConfig on malformed arguments. --help is reported by returning
// nullopt after printing usage to out.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

// "a..b" (inclusive) or a single integer.
std::pair<int, int> parse_range(std::string_view text);
std::vector<std::size_t> parse_dims(std::string_view text);

// 0: no Fail outcomes; 1: some identity failed; 2: bad input or configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ncq::cli
