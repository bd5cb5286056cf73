#pragma once

// Plain-text matrix files:
//
//   <rows> <cols>
//   <cols scalar literals>      (rows times)
//
// Blank lines and lines whose first non-blank character is '#' are ignored.
// Integers are written in decimal; polynomials as "[c0,c1,...]" ascending by
// degree with rational coefficients n or n/d.

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "matdiv/domains.hpp"
#include "matdiv/matrix.hpp"

namespace matdiv {

/// Throws ParseError carrying the 1-based line and column of the problem.
template <EuclideanDomain T>
Matrix<T> parse_matrix(std::string_view text);

template <EuclideanDomain T>
Matrix<T> read_matrix_file(const std::string& path);

template <EuclideanDomain T>
std::string format_matrix(const Matrix<T>& m);

/// {"rows": r, "cols": c, "entries": [[literal, ...], ...]}
template <EuclideanDomain T>
nlohmann::json matrix_to_json(const Matrix<T>& m);

extern template Matrix<Integer> parse_matrix(std::string_view);
extern template Matrix<PolyQ> parse_matrix(std::string_view);
extern template Matrix<Integer> read_matrix_file(const std::string&);
extern template Matrix<PolyQ> read_matrix_file(const std::string&);
extern template std::string format_matrix(const Matrix<Integer>&);
extern template std::string format_matrix(const Matrix<PolyQ>&);
extern template nlohmann::json matrix_to_json(const Matrix<Integer>&);
extern template nlohmann::json matrix_to_json(const Matrix<PolyQ>&);

} // namespace matdiv
