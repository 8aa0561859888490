#pragma once

#include "ncq/matrix.hpp"

#include <json.hpp>

#include <variant>

namespace ncq {

// Runtime-tagged matrix for the CLI and JSON boundaries. Mixing kinds is a
// KindMismatch; inside the library everything is statically typed.
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<Eisenstein>, Matrix<Complex>>;

ScalarKind kind_of(const AnyMatrix& m);
std::size_t dim_of(const AnyMatrix& m);

AnyMatrix add(const AnyMatrix& a, const AnyMatrix& b);
AnyMatrix multiply(const AnyMatrix& a, const AnyMatrix& b);
AnyMatrix inverse(const AnyMatrix& m);

// {"kind": "rational"|"eisenstein"|"complex", "dim": n, "entries": [[...], ...]}
// Entries are scalar strings; JSON numbers are accepted for rational
// (integers only) and complex (real part).
nlohmann::json to_json(const AnyMatrix& m);
AnyMatrix matrix_from_json(const nlohmann::json& j);

template <Field F>
Matrix<F> matrix_from_json_as(const nlohmann::json& j) {
    AnyMatrix m = matrix_from_json(j);
    if (auto* p = std::get_if<Matrix<F>>(&m)) return std::move(*p);
    throw KindMismatch("expected " + std::string(kind_name(FieldTraits<F>::kind)) + " matrix, got " +
                       std::string(kind_name(kind_of(m))));
}

// Parses text as JSON, mapping failures to ParseError with line and column.
nlohmann::json parse_json_text(std::string_view text);

}  // namespace ncq
