#pragma once

// Realization description files. YAML, with every scalar written as an
// exact rational string ("p/q" or an integer):
//
//   algebras:
//     M2: {upper_triangular: 2}
//     A:  {truncated_polynomial: 2}
//     B:  {basis: [u, v], unit: {u: "1"}, products: [[v, v, {v: "1"}], ...]}
//   coalgebras:
//     L: {triangular: 2}
//     F: {dual_of: M2}
//     S: {direct_sum: [L, L]}
//     E: {explicit: {basis: [a, b], counit: {a: "1"},
//                    coproduct: {a: [[a, a, "1"]], b: [[a, b, "1"], [b, a, "1"]]}}}
//   realization:
//     L: L
//     F: F
//     x:
//       "l(1,1)": {identity: "1"}
//       "l(2,1)": {form: {"f(2,1)": "1"}}
//     diag_pairs: [["l(1,1)", "l(1,1)"]]
//   parameters: {truncation: 3, max_degree: 3, max_stages: 3, antipode: auto}
//
// Products not listed in an explicit algebra are zero.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfreal/lifting.hpp"

namespace hopfreal {

enum class AntipodeMode { automatic, triangular, general };

std::string to_string(AntipodeMode mode);

struct Parameters {
  std::size_t truncation = 3;
  std::size_t max_degree = 3;
  std::size_t max_stages = 3;
  AntipodeMode antipode = AntipodeMode::automatic;
};

struct InputDocument {
  std::map<std::string, AlgebraPresentation> algebras;
  std::map<std::string, Coalgebra> coalgebras;
  std::string l_name;
  std::string f_name;
  std::vector<RIOp> x_map;
  std::optional<std::vector<std::pair<BasisId, BasisId>>> diag_pairs;
  Parameters params;

  const Coalgebra& l() const { return coalgebras.at(l_name); }
  const Coalgebra& f() const { return coalgebras.at(f_name); }
  /// The realization datum at the current truncation.
  RealizationSpec realization() const;
};

/// Throws ParseError (syntax or shape, with line and column),
/// ResolutionError (unknown algebra or coalgebra name, cycles) or
/// ValidationError (every violated invariant).
InputDocument parse_input(const std::string& text);
/// Reads the file, then parse_input. Throws Error if it cannot be read.
InputDocument load_input(const std::string& path);

/// Parameter update by name ("truncation", "max_degree", "max_stages");
/// throws ValidationError for values < 1 and InvalidArgument for unknown names.
void set_parameter(InputDocument& doc, const std::string& name, long value);

}  // namespace hopfreal
