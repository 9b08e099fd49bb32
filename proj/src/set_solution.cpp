#include "qfa/set_solution.hpp"

#include <sstream>
#include <tuple>

namespace qfa {

namespace {

std::string triple(int i, int j, int k) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
  return os.str();
}

bool is_bijection(const std::vector<int>& m) {
  std::vector<bool> seen(m.size(), false);
  for (int x : m) {
    if (x < 0 || x >= static_cast<int>(m.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

void check_shape(int n, std::size_t rows, const std::vector<std::size_t>& cols, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be positive");
  if (rows != static_cast<std::size_t>(n)) throw DomainError(std::string(what) + ": expected n rows");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] != static_cast<std::size_t>(n)) {
      throw DomainError(std::string(what) + ": row " + std::to_string(i + 1) + " has wrong length");
    }
  }
}

void check_cocycle_shape(int n, const Cocycle& q) {
  std::vector<std::size_t> cols;
  for (const auto& r : q.q) cols.push_back(r.size());
  check_shape(n, q.q.size(), cols, "cocycle");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (q(i, j).is_zero()) {
        throw DomainError("cocycle entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") is zero; cocycle values must be invertible");
      }
    }
  }
}

}  // namespace

SetSolution Rack::as_solution() const {
  SetSolution sol;
  sol.n = n;
  sol.s.assign(n, std::vector<std::pair<int, int>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sol.s[i][j] = {op[i][j], i};
  }
  return sol;
}

Cocycle Cocycle::constant(int n, const Scalar& value) {
  Cocycle c;
  c.q.assign(n, std::vector<Scalar>(n, value));
  return c;
}

bool Cocycle::is_constant() const {
  for (const auto& r : q) {
    for (const auto& x : r) {
      if (x != q[0][0]) return false;
    }
  }
  return true;
}

SetValidation validate(const SetSolution& sol, const Cocycle* q) {
  const int n = sol.n;
  std::vector<std::size_t> cols;
  for (const auto& r : sol.s) cols.push_back(r.size());
  check_shape(n, sol.s.size(), cols, "set solution");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [a, b] = sol.s[i][j];
      if (a < 0 || a >= n || b < 0 || b >= n) {
        throw DomainError("set solution entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") out of range");
      }
    }
  }
  if (q) check_cocycle_shape(n, *q);

  SetValidation v;
  // s1 s2 s1 == s2 s1 s2 on X^3.
  for (int i = 0; i < n && v.ok; ++i) {
    for (int j = 0; j < n && v.ok; ++j) {
      for (int k = 0; k < n && v.ok; ++k) {
        int x = i, y = j, z = k;
        std::tie(x, y) = sol.s[x][y];
        std::tie(y, z) = sol.s[y][z];
        std::tie(x, y) = sol.s[x][y];
        int u = i, w = j, t = k;
        std::tie(w, t) = sol.s[w][t];
        std::tie(u, w) = sol.s[u][w];
        std::tie(w, t) = sol.s[w][t];
        if (x != u || y != w || z != t) {
          v.ok = false;
          v.witness = "braid equation fails at " + triple(i, j, k);
        }
      }
    }
  }
  v.involutive = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [a, b] = sol.s[i][j];
      if (sol.s[a][b] != std::make_pair(i, j)) v.involutive = false;
    }
  }
  v.nondegenerate = true;
  for (int i = 0; i < n; ++i) {
    std::vector<int> gi(n), fi(n);
    for (int j = 0; j < n; ++j) {
      gi[j] = sol.g(i, j);
      fi[j] = sol.f(i, j);
    }
    if (!is_bijection(gi) || !is_bijection(fi)) v.nondegenerate = false;
  }
  return v;
}

SetValidation validate(const Rack& rack, const Cocycle& q) {
  const int n = rack.n;
  std::vector<std::size_t> cols;
  for (const auto& r : rack.op) cols.push_back(r.size());
  check_shape(n, rack.op.size(), cols, "rack");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rack.op[i][j] < 0 || rack.op[i][j] >= n) {
        throw DomainError("rack entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") out of range");
      }
    }
  }
  check_cocycle_shape(n, q);

  SetValidation v;
  for (int i = 0; i < n && v.ok; ++i) {
    if (!is_bijection(rack.op[i])) {
      v.ok = false;
      v.witness = "left translation by " + std::to_string(i + 1) + " is not bijective";
    }
  }
  const auto& op = rack.op;
  for (int i = 0; i < n && v.ok; ++i) {
    for (int j = 0; j < n && v.ok; ++j) {
      for (int k = 0; k < n && v.ok; ++k) {
        if (op[i][op[j][k]] != op[op[i][j]][op[i][k]]) {
          v.ok = false;
          v.witness = "self-distributivity fails at " + triple(i, j, k);
        } else if (q(i, op[j][k]) * q(j, k) != q(op[i][j], op[i][k]) * q(i, k)) {
          v.ok = false;
          v.witness = "cocycle condition fails at " + triple(i, j, k);
        }
      }
    }
  }
  const SetValidation s = validate(rack.as_solution());
  v.involutive = s.involutive;
  v.nondegenerate = s.nondegenerate;
  return v;
}

}  // namespace qfa
