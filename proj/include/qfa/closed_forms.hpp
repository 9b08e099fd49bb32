#pragma once

// Closed formulas for r(D, t) and J when the braiding comes from a set-theoretic
// solution with a cocycle and the volume element is a monomial.

#include <map>
#include <optional>
#include <vector>

#include "qfa/ncpoly.hpp"
#include "qfa/nichols.hpp"
#include "qfa/set_solution.hpp"

namespace qfa {

/// alpha_K for every K with nonzero class, keyed by index word.
std::map<IndexWord, Scalar> alpha_coefficients(const WgfData& wgf);

/// r(D, t_a^b) as an n x n table: with a_0 = a and a_k = f_{j_k}(a_{k-1}),
/// r(D, t_a^b) = delta_{b, a_N} alpha_{g_{a_0}(j_1), ..., g_{a_{N-1}}(j_N)} prod_k q_{a_{k-1}, j_k}.
Matrix closed_form_rD(const SetSolution& sol, const Cocycle& q, const WgfData& wgf);

/// J(t_{a_N}^b) = alpha(orbit of b_0) / alpha(orbit of a) t_a^{b_0}, indexed by generator
/// letter; std::nullopt where the
/// closed form leaves the entry undetermined (vanishing alpha). Requires a constant
/// cocycle and a non-degenerate solution.
std::vector<std::optional<NCPoly>> closed_form_J(const SetSolution& sol, const Cocycle& q, const WgfData& wgf);

}  // namespace qfa
