#pragma once

// Input specs: a JSON document describing a braided vector space.
//
// {
//   "name": "...",
//   "kind": "matrix" | "flip" | "diagonal" | "set_solution" | "rack" | "presentation",
//   "n": 2,
//   "conductor": 4,                       optional; literals must live in Q(zeta_conductor)
//   "scale": "-1",                        optional; multiplies the braiding
//   "entries": [[i, j, k, l, "value"]],   matrix: coefficient of x_k (x) x_l in c(x_i (x) x_j)
//   "q": [["z3", "2"], ["1/2", "z3"]],    diagonal
//   "solution": [[[g, f], ...], ...],     set_solution: s(i,j) = (g_i(j), f_j(i))
//   "rack": [[...], ...],                 rack: i |> j
//   "cocycle": "-1" or a table,           set_solution and rack; defaults to 1
//   "relations": ["x^3", ...],            presentation: a graded algebra given directly
//   "algebra_relations": ["x^2", ...],    optional for braidings: use T(V)/(relations) as the
//                                         graded Frobenius algebra instead of the Nichols algebra
//   "volume": "x1x2x3x2",                 optional
//   "max_degree": 6                       optional
// }
//
// All indices are 1-based.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qfa/braiding.hpp"
#include "qfa/nichols.hpp"
#include "qfa/set_solution.hpp"

namespace qfa {

struct BraidingSpec {
  std::string name;
  std::string kind;
  int n = 0;
  std::optional<int> conductor;
  std::optional<std::string> scale;
  std::vector<std::tuple<int, int, int, int, std::string>> entries;
  std::vector<std::vector<std::string>> q;
  std::vector<std::vector<std::pair<int, int>>> solution;
  std::vector<std::vector<int>> rack;
  std::optional<std::string> cocycle_constant;
  std::vector<std::vector<std::string>> cocycle_table;
  std::vector<std::string> relations;
  std::vector<std::string> algebra_relations;
  std::optional<std::string> volume;
  std::optional<int> max_degree;
};

/// Throws ParseError with a path into the document on schema violations.
BraidingSpec parse_spec(const std::string& json_text);
BraidingSpec load_spec(const std::string& path);
/// Canonical JSON text (two-space indent, keys in schema order).
std::string spec_to_json(const BraidingSpec& spec);

bool is_presentation(const BraidingSpec& spec);

/// The braiding described by the spec (not available for presentations).
BraidingTensor build_braiding(const BraidingSpec& spec);
/// q table of a diagonal spec.
std::optional<std::vector<std::vector<Scalar>>> diagonal_q(const BraidingSpec& spec);
/// Solution and cocycle of set_solution and rack specs.
std::optional<std::pair<SetSolution, Cocycle>> set_data(const BraidingSpec& spec);
std::optional<Rack> rack_data(const BraidingSpec& spec);

/// Homogeneous relation tensors of a presentation spec.
std::vector<std::pair<int, std::vector<Scalar>>> presentation_relations(const BraidingSpec& spec);
std::vector<std::pair<int, std::vector<Scalar>>> algebra_relations(const BraidingSpec& spec);

/// Parses "y^3 - x^2y + (z3)*xyx" into a homogeneous tensor (degree, coordinates).
std::pair<int, std::vector<Scalar>> parse_tensor(const std::string& text, int n);

/// Parses a scalar literal, checking it against the declared conductor.
Scalar parse_scalar(const BraidingSpec& spec, const std::string& literal, const std::string& where);

}  // namespace qfa
