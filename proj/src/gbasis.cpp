#include "qfa/gbasis.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace qfa {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

void TruncatedGB::count(std::size_t k) const {
  work_ += k;
  if (counting_ && work_ > budget_) throw BudgetExceeded("Groebner basis budget exhausted");
}

std::optional<TruncatedGB::Reducer> TruncatedGB::find_lower_reducer(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t len : lead_lengths_) {
      if (len >= w.size()) break;
      if (pos + len > w.size()) break;
      auto it = lead_index_.find(w.substr(pos, len));
      if (it != lead_index_.end()) return Reducer{pos, it->second};
    }
  }
  return std::nullopt;
}

const NCPoly& TruncatedGB::lower_nf(const Word& w) const {
  if (auto it = lower_memo_.find(w); it != lower_memo_.end()) return it->second;
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    const Word x = stack.back();
    if (lower_memo_.count(x)) {
      stack.pop_back();
      continue;
    }
    const auto r = find_lower_reducer(x);
    if (!r) {
      lower_memo_.emplace(x, NCPoly::monomial(x));
      stack.pop_back();
      continue;
    }
    const NCPoly& g = gens_[r->gen];
    const std::size_t len = g.lead_word().size();
    const Word prefix = x.substr(0, r->pos);
    const Word suffix = x.substr(r->pos + len);
    bool pending = false;
    for (const auto& [t, c] : g.terms()) {
      if (t == g.lead_word()) continue;
      Word child = prefix + t + suffix;
      if (!lower_memo_.count(child)) {
        stack.push_back(std::move(child));
        pending = true;
      }
    }
    if (pending) continue;
    NCPoly result;
    for (const auto& [t, c] : g.terms()) {
      if (t == g.lead_word()) continue;
      const NCPoly& sub = lower_memo_.at(prefix + t + suffix);
      count(sub.size());
      for (const auto& [v, a] : sub.terms()) result.add_term(v, -c * a);
    }
    lower_memo_.emplace(x, std::move(result));
    stack.pop_back();
  }
  return lower_memo_.at(w);
}

NCPoly TruncatedGB::lower_nf(const NCPoly& p) const {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    const NCPoly& nf = lower_nf(w);
    for (const auto& [v, a] : nf.terms()) r.add_term(v, c * a);
  }
  return r;
}

NCPoly TruncatedGB::full_nf_homogeneous(const NCPoly& p) const {
  NCPoly r = lower_nf(p);
  std::vector<std::pair<std::size_t, Scalar>> subs;
  for (const auto& [w, c] : r.terms()) {
    auto it = lead_index_.find(w);
    if (it != lead_index_.end()) subs.emplace_back(it->second, c);
  }
  for (const auto& [g, c] : subs) r -= gens_[g] * c;
  return r;
}

const NCPoly& TruncatedGB::word_normal_form(const Word& w) const {
  if (static_cast<int>(w.size()) > complete_through_) {
    throw DomainError("word_normal_form: degree " + std::to_string(w.size()) + " beyond completed degree " +
                      std::to_string(complete_through_));
  }
  if (auto it = full_memo_.find(w); it != full_memo_.end()) return it->second;
  return full_memo_.emplace(w, full_nf_homogeneous(NCPoly::monomial(w))).first->second;
}

NormalForm TruncatedGB::normal_form(const NCPoly& p) const {
  std::map<std::size_t, NCPoly> parts;
  for (const auto& [w, c] : p.terms()) parts[w.size()].add_term(w, c);
  NormalForm out;
  for (const auto& [deg, part] : parts) {
    if (static_cast<int>(deg) <= complete_through_) {
      for (const auto& [w, c] : part.terms()) {
        for (const auto& [v, a] : word_normal_form(w).terms()) out.remainder.add_term(v, c * a);
      }
    } else {
      out.decisive = false;
      out.remainder += lower_nf(part);
    }
  }
  return out;
}

bool TruncatedGB::reduces_to_zero(const NCPoly& p) const {
  const NormalForm nf = normal_form(p);
  if (!nf.decisive && !nf.remainder.is_zero()) {
    throw DomainError("ideal membership undecided: degree " + std::to_string(p.degree()) +
                      " exceeds completed degree " + std::to_string(complete_through_));
  }
  return nf.remainder.is_zero();
}

NCPoly TruncatedGB::reduce_with_schedule(const NCPoly& p, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  NCPoly r = p;
  while (true) {
    struct Step {
      Word w;
      std::size_t pos;
      std::size_t gen;
    };
    std::vector<Step> steps;
    for (const auto& [w, c] : r.terms()) {
      for (std::size_t len : lead_lengths_) {
        if (len > w.size()) break;
        for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
          auto it = lead_index_.find(w.substr(pos, len));
          if (it != lead_index_.end()) steps.push_back({w, pos, it->second});
        }
      }
    }
    if (steps.empty()) return r;
    const Step& s = steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)];
    const NCPoly& g = gens_[s.gen];
    const Scalar c = r.coeff(s.w);
    const NCPoly left = NCPoly::monomial(s.w.substr(0, s.pos));
    const NCPoly right = NCPoly::monomial(s.w.substr(s.pos + g.lead_word().size()));
    r -= left * g * right * c;
  }
}

std::vector<Word> TruncatedGB::standard_words(int d, int n_letters) const {
  std::vector<Word> out;
  std::vector<Word> layer{Word()};
  for (int k = 0; k < d; ++k) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int a = 0; a < n_letters; ++a) {
        Word x = w + static_cast<char>(a);
        bool ok = true;
        for (std::size_t len : lead_lengths_) {
          if (len > x.size()) break;
          if (lead_index_.count(x.substr(x.size() - len))) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  out = std::move(layer);
  std::sort(out.begin(), out.end(), DeglexLess());
  return out;
}

std::string TruncatedGB::dump(int n) const {
  std::ostringstream os;
  os << "# truncated Groebner basis, complete through degree " << complete_through_;
  if (budget_exhausted_) os << " (budget exhausted before degree " << requested_ << ")";
  os << "\n";
  for (const auto& g : gens_) os << g.degree() << ": " << g.to_string(n) << "\n";
  return os.str();
}

namespace {

std::string poly_key(const NCPoly& p) {
  std::string s;
  for (const auto& [w, c] : p.terms()) {
    for (char g : w) s += std::to_string(static_cast<unsigned char>(g)) + ".";
    s += ":" + c.to_string() + ";";
  }
  return s;
}

void make_monic(NCPoly& p) {
  const Scalar inv = p.lead_coeff().inverse();
  p *= inv;
}

// Largest word of r that is a key of pivots, or nullptr.
const Word* largest_pivot_word(const NCPoly& r, const std::map<Word, NCPoly, DeglexLess>& pivots,
                               const Word* skip) {
  for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
    if (skip && it->first == *skip) continue;
    if (pivots.count(it->first)) return &it->first;
  }
  return nullptr;
}

}  // namespace

std::vector<NCPoly> interreduce(std::vector<NCPoly> rows, const std::function<void(std::size_t)>& tick) {
  std::map<Word, NCPoly, DeglexLess> pivots;
  for (NCPoly& r : rows) {
    while (const Word* w = largest_pivot_word(r, pivots, nullptr)) {
      const Scalar c = r.coeff(*w);
      const NCPoly& p = pivots.at(*w);
      if (tick) tick(p.size());
      r -= p * c;
    }
    if (r.is_zero()) continue;
    make_monic(r);
    const Word lead = r.lead_word();
    pivots.emplace(lead, std::move(r));
  }
  // Back substitution, smallest pivots first.
  for (auto& [lead, row] : pivots) {
    while (const Word* w = largest_pivot_word(row, pivots, &lead)) {
      const Scalar c = row.coeff(*w);
      if (tick) tick(row.size());
      row -= pivots.at(*w) * c;
    }
  }
  std::vector<NCPoly> out;
  out.reserve(pivots.size());
  for (auto& [lead, row] : pivots) out.push_back(std::move(row));
  return out;
}

TruncatedGB complete(const std::vector<NCPoly>& relations, int d, std::size_t budget) {
  TruncatedGB G;
  G.requested_ = d;
  G.budget_ = budget;
  std::map<int, std::vector<NCPoly>> by_degree;
  std::uint64_t fp = fnv1a("qfa-ideal");
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw DomainError("relation is not homogeneous: " + poly_key(r));
    if (r.degree() == 0) throw DomainError("relation of degree 0 generates the whole algebra");
    by_degree[r.degree()].push_back(r);
    fp = fnv1a(poly_key(r), fp);
  }
  G.fingerprint_ = fp;
  G.counting_ = true;

  for (int deg = 1; deg <= d; ++deg) {
    try {
      std::vector<NCPoly> rows;
      if (auto it = by_degree.find(deg); it != by_degree.end()) {
        for (const auto& r : it->second) rows.push_back(G.lower_nf(r));
      }
      // Overlaps F = u v, H = v w with |u v w| = deg.
      std::unordered_map<Word, std::vector<std::size_t>> by_prefix;
      for (std::size_t h = 0; h < G.gens_.size(); ++h) {
        const Word& H = G.gens_[h].lead_word();
        for (std::size_t k = 1; k < H.size(); ++k) by_prefix[H.substr(0, k)].push_back(h);
      }
      for (std::size_t f = 0; f < G.gens_.size(); ++f) {
        const Word& F = G.gens_[f].lead_word();
        const std::size_t a = F.size();
        for (std::size_t k = 1; k < a; ++k) {
          auto it = by_prefix.find(F.substr(a - k));
          if (it == by_prefix.end()) continue;
          for (std::size_t h : it->second) {
            const Word& H = G.gens_[h].lead_word();
            if (a + H.size() - k != static_cast<std::size_t>(deg)) continue;
            const NCPoly s = G.gens_[f] * NCPoly::monomial(H.substr(k)) -
                             NCPoly::monomial(F.substr(0, a - k)) * G.gens_[h];
            G.count(s.size());
            NCPoly r = G.lower_nf(s);
            if (!r.is_zero()) rows.push_back(std::move(r));
          }
        }
      }
      const std::vector<NCPoly> reduced = interreduce(std::move(rows), [&G](std::size_t k) { G.count(k); });
      for (const NCPoly& row : reduced) {
        G.lead_index_.emplace(row.lead_word(), G.gens_.size());
        G.gens_.push_back(row);
      }
      if (!reduced.empty() &&
          std::find(G.lead_lengths_.begin(), G.lead_lengths_.end(), static_cast<std::size_t>(deg)) ==
              G.lead_lengths_.end()) {
        G.lead_lengths_.push_back(static_cast<std::size_t>(deg));
      }
      G.complete_through_ = deg;
    } catch (const BudgetExceeded&) {
      G.budget_exhausted_ = true;
      break;
    }
  }
  G.counting_ = false;
  return G;
}

}  // namespace qfa
