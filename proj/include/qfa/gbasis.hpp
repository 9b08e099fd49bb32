#pragma once

// Degree-truncated Groebner bases of homogeneous two-sided ideals in the free
// algebra, completed one degree at a time.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qfa/ncpoly.hpp"

namespace qfa {

constexpr std::size_t kDefaultBudget = 2000000;

struct NormalForm {
  NCPoly remainder;
  bool decisive = true;
};

class TruncatedGB {
 public:
  /// Monic, homogeneous, interreduced basis elements sorted by degree then lead word.
  const std::vector<NCPoly>& generators() const { return gens_; }
  int complete_through() const { return complete_through_; }
  int requested_degree() const { return requested_; }
  bool budget_exhausted() const { return budget_exhausted_; }
  std::size_t work() const { return work_; }
  std::uint64_t fingerprint() const { return fingerprint_; }

  NormalForm normal_form(const NCPoly& p) const;
  /// Normal form of a single word of degree <= complete_through.
  const NCPoly& word_normal_form(const Word& w) const;
  /// p in the ideal; throws if the verdict would not be decisive.
  bool reduces_to_zero(const NCPoly& p) const;

  /// Reduction with a pseudo-random choice of term and reducer at each step.
  NCPoly reduce_with_schedule(const NCPoly& p, std::uint64_t seed) const;

  /// Words of degree d with no leading-word factor (a basis of the quotient in degree d).
  std::vector<Word> standard_words(int d, int n_letters) const;

  std::string dump(int n) const;

 private:
  friend TruncatedGB complete(const std::vector<NCPoly>&, int, std::size_t);

  struct Reducer {
    std::size_t pos;
    std::size_t gen;
  };
  std::optional<Reducer> find_lower_reducer(const Word& w) const;
  const NCPoly& lower_nf(const Word& w) const;
  NCPoly lower_nf(const NCPoly& p) const;
  NCPoly full_nf_homogeneous(const NCPoly& p) const;
  void count(std::size_t k) const;

  std::vector<NCPoly> gens_;
  std::unordered_map<Word, std::size_t> lead_index_;
  std::vector<std::size_t> lead_lengths_;  // sorted distinct lengths present
  int complete_through_ = 0;
  int requested_ = 0;
  bool budget_exhausted_ = false;
  std::uint64_t fingerprint_ = 0;
  std::size_t budget_ = kDefaultBudget;
  mutable std::size_t work_ = 0;
  mutable bool counting_ = false;
  // Memoized reductions of words by elements of strictly smaller degree.
  mutable std::unordered_map<Word, NCPoly> lower_memo_;
  mutable std::unordered_map<Word, NCPoly> full_memo_;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Completes the ideal generated by homogeneous relations through degree d.
/// If the budget (number of word reductions) runs out in degree d', the basis is
/// returned complete through d'-1 and flagged.
TruncatedGB complete(const std::vector<NCPoly>& relations, int d, std::size_t budget = kDefaultBudget);

/// Reduced echelon form of a list of polynomials: monic, distinct leading words,
/// no leading word occurring in another element. Sorted by leading word.
std::vector<NCPoly> interreduce(std::vector<NCPoly> rows, const std::function<void(std::size_t)>& tick = {});

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL);

}  // namespace qfa
