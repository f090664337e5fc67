#pragma once

// Problem files and reports. Both are JSON documents; polynomials are stored
// as expression strings in the parser grammar, so every report can be read
// back.
//
// Problem file:
//   {"field": "Q" | "Fp:<p>", "variable": "x", "map_variable": "y",
//    "grade": 2, "matrix": [["x^2-20*x", "0"], ...],
//    "map": {"n": "16*y^2-25", "d": "y^2-y"}}
// "variable", "map_variable", "grade" and "map" are optional.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratsub/eigstructure.hpp"

namespace ratsub {

using Json = nlohmann::ordered_json;

struct ProblemFile {
  FieldSpec field;
  std::string var = "x";
  std::string map_var = "y";
  std::optional<int> grade;
  std::vector<std::vector<std::string>> matrix;
  std::optional<std::string> map_n;
  std::optional<std::string> map_d;

  bool operator==(const ProblemFile&) const = default;
};

/// Throws InvalidArgument on a malformed document.
ProblemFile read_problem(const Json& j);
Json write_problem(const ProblemFile& f);

template <class F>
struct Problem {
  PolyMatrix<F> p;
  std::optional<RationalMap<F>> map;
};

/// Parses every expression; throws ParseError / InvalidArgument.
template <class F>
Problem<F> build_problem(const ProblemFile& f);

/// Problem file for a matrix and optional map (inverse of build_problem).
template <class F>
ProblemFile make_problem(const PolyMatrix<F>& p, const RationalMap<F>* map, const std::string& var = "x",
                         const std::string& map_var = "y");

template <class F>
Json to_json(const CharPoint<F>& c, const std::string& var);
template <class F>
CharPoint<F> charpoint_from_json(const Json& j, const FieldSpec& field, const std::string& var);

template <class F>
Json to_json(const PolyMatrix<F>& p, const std::string& var);
template <class F>
PolyMatrix<F> polymatrix_from_json(const Json& j, const FieldSpec& field, const std::string& var, int grade);

template <class F>
Json to_json(const CompleteEigenstructure<F>& e, const std::string& var);
template <class F>
CompleteEigenstructure<F> eigenstructure_from_json(const Json& j, const FieldSpec& field, const std::string& var);

/// x-side data uses var, y-side data uses map_var.
template <class F>
Json to_json(const TheoremReport<F>& r, const std::string& var, const std::string& map_var);
template <class F>
TheoremReport<F> theorem_report_from_json(const Json& j, const FieldSpec& field, const std::string& var,
                                          const std::string& map_var);

template <class F>
Json to_json(const SmithDecomposition<F>& s, const std::string& var);
template <class F>
Json to_json(const PreimageSet<F>& s, const std::string& var, const std::string& map_var);
template <class F>
Json to_json(const MinimalBasis<F>& b, const std::string& var);
template <class F>
Json to_json(const DegreeBoundReport<F>& d);

}  // namespace ratsub
