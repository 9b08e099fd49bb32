#pragma once

// Set-theoretic solutions, racks and cocycles. Indices are 0-based here;
// spec files and reports use 1-based indices.

#include <string>
#include <utility>
#include <vector>

#include "qfa/scalar.hpp"

namespace qfa {

/// s(i,j) = (g_i(j), f_j(i)).
struct SetSolution {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> s;

  int g(int i, int j) const { return s[i][j].first; }
  int f(int j, int i) const { return s[i][j].second; }
};

struct Rack {
  int n = 0;
  std::vector<std::vector<int>> op;  // op[i][j] = i |> j

  /// The associated solution s(i,j) = (i |> j, i).
  SetSolution as_solution() const;
};

struct Cocycle {
  std::vector<std::vector<Scalar>> q;

  static Cocycle constant(int n, const Scalar& value);
  const Scalar& operator()(int i, int j) const { return q[i][j]; }
  bool is_constant() const;
};

struct SetValidation {
  bool ok = true;
  bool involutive = false;
  bool nondegenerate = false;
  std::string witness;  // empty when ok
};

SetValidation validate(const SetSolution& sol, const Cocycle* q = nullptr);
SetValidation validate(const Rack& rack, const Cocycle& q);

}  // namespace qfa
