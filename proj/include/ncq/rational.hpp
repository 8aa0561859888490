#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncq {

using Rational = mpq_class;

// Accepts "p", "p/q" with optional sign; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

}  // namespace ncq
