#include "qfa/spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace qfa {

using nlohmann::ordered_json;

namespace {

const char* const kKinds[] = {"matrix", "flip", "diagonal", "set_solution", "rack", "presentation"};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("spec " + where + ": " + what);
}

int get_int(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string get_scalar_text(const ordered_json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  fail(where, "expected a scalar literal (string or integer)");
}

std::vector<std::vector<std::string>> get_scalar_table(const ordered_json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail(where, "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<std::string>> t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) fail(w, "expected " + std::to_string(n) + " entries");
    std::vector<std::string> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(get_scalar_text(j[i][k], w + "[" + std::to_string(k) + "]"));
    t.push_back(std::move(row));
  }
  return t;
}

int get_index(const ordered_json& j, int n, const std::string& where) {
  const int v = get_int(j, where);
  if (v < 1 || v > n) fail(where, "index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return v;
}

ordered_json scalar_table_json(const std::vector<std::vector<std::string>>& t) {
  ordered_json a = ordered_json::array();
  for (const auto& r : t) a.push_back(r);
  return a;
}

}  // namespace

BraidingSpec parse_spec(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("root", "expected an object");
  static const std::vector<std::string> known = {"name",     "kind",   "n",       "conductor", "scale",
                                                 "entries",  "q",      "solution", "rack",     "cocycle",
                                                 "relations", "algebra_relations", "volume", "max_degree"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end()) fail("." + key, "unknown field");
  }
  BraidingSpec s;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(".name", "expected a string");
    s.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("kind") || !doc["kind"].is_string()) fail(".kind", "missing or not a string");
  s.kind = doc["kind"].get<std::string>();
  if (std::find(std::begin(kKinds), std::end(kKinds), s.kind) == std::end(kKinds)) fail(".kind", "unknown kind '" + s.kind + "'");
  if (!doc.contains("n")) fail(".n", "missing");
  s.n = get_int(doc["n"], ".n");
  if (s.n < 1) fail(".n", "must be positive");
  const int n = s.n;
  if (doc.contains("conductor")) {
    s.conductor = get_int(doc["conductor"], ".conductor");
    if (*s.conductor < 1) fail(".conductor", "must be positive");
  }
  if (doc.contains("scale")) s.scale = get_scalar_text(doc["scale"], ".scale");
  if (doc.contains("volume")) {
    if (!doc["volume"].is_string()) fail(".volume", "expected a monomial string");
    s.volume = doc["volume"].get<std::string>();
  }
  if (doc.contains("max_degree")) {
    s.max_degree = get_int(doc["max_degree"], ".max_degree");
    if (*s.max_degree < 1) fail(".max_degree", "must be positive");
  }
  auto require = [&](const char* key) {
    if (!doc.contains(key)) fail(std::string(".") + key, "required for kind '" + s.kind + "'");
    return doc[key];
  };
  if (s.kind == "matrix") {
    const auto& e = require("entries");
    if (!e.is_array()) fail(".entries", "expected an array");
    for (std::size_t t = 0; t < e.size(); ++t) {
      const std::string w = ".entries[" + std::to_string(t) + "]";
      if (!e[t].is_array() || e[t].size() != 5) fail(w, "expected [i, j, k, l, value]");
      s.entries.emplace_back(get_index(e[t][0], n, w + "[0]"), get_index(e[t][1], n, w + "[1]"),
                             get_index(e[t][2], n, w + "[2]"), get_index(e[t][3], n, w + "[3]"),
                             get_scalar_text(e[t][4], w + "[4]"));
    }
  } else if (s.kind == "diagonal") {
    s.q = get_scalar_table(require("q"), n, ".q");
  } else if (s.kind == "set_solution") {
    const auto& t = require("solution");
    if (!t.is_array() || static_cast<int>(t.size()) != n) fail(".solution", "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string w = ".solution[" + std::to_string(i) + "]";
      if (!t[i].is_array() || static_cast<int>(t[i].size()) != n) fail(w, "expected " + std::to_string(n) + " pairs");
      std::vector<std::pair<int, int>> row;
      for (std::size_t j = 0; j < t[i].size(); ++j) {
        const std::string wj = w + "[" + std::to_string(j) + "]";
        if (!t[i][j].is_array() || t[i][j].size() != 2) fail(wj, "expected [g, f]");
        row.emplace_back(get_index(t[i][j][0], n, wj + "[0]"), get_index(t[i][j][1], n, wj + "[1]"));
      }
      s.solution.push_back(std::move(row));
    }
  } else if (s.kind == "rack") {
    const auto& t = require("rack");
    if (!t.is_array() || static_cast<int>(t.size()) != n) fail(".rack", "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string w = ".rack[" + std::to_string(i) + "]";
      if (!t[i].is_array() || static_cast<int>(t[i].size()) != n) fail(w, "expected " + std::to_string(n) + " entries");
      std::vector<int> row;
      for (std::size_t j = 0; j < t[i].size(); ++j) row.push_back(get_index(t[i][j], n, w + "[" + std::to_string(j) + "]"));
      s.rack.push_back(std::move(row));
    }
  } else if (s.kind == "presentation") {
    const auto& r = require("relations");
    if (!r.is_array()) fail(".relations", "expected an array of strings");
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r[i].is_string()) fail(".relations[" + std::to_string(i) + "]", "expected a string");
      s.relations.push_back(r[i].get<std::string>());
    }
  }
  if (doc.contains("algebra_relations")) {
    if (s.kind == "presentation") fail(".algebra_relations", "not allowed for presentations; use relations");
    const auto& r = doc["algebra_relations"];
    if (!r.is_array()) fail(".algebra_relations", "expected an array of strings");
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r[i].is_string()) fail(".algebra_relations[" + std::to_string(i) + "]", "expected a string");
      s.algebra_relations.push_back(r[i].get<std::string>());
    }
  }
  if (doc.contains("cocycle")) {
    if (s.kind != "set_solution" && s.kind != "rack") fail(".cocycle", "only allowed for set_solution and rack");
    if (doc["cocycle"].is_array()) {
      s.cocycle_table = get_scalar_table(doc["cocycle"], n, ".cocycle");
    } else {
      s.cocycle_constant = get_scalar_text(doc["cocycle"], ".cocycle");
    }
  }
  // Validate every literal now so errors point into the document.
  if (s.scale) parse_scalar(s, *s.scale, ".scale");
  for (std::size_t t = 0; t < s.entries.size(); ++t) {
    parse_scalar(s, std::get<4>(s.entries[t]), ".entries[" + std::to_string(t) + "][4]");
  }
  for (std::size_t i = 0; i < s.q.size(); ++i) {
    for (std::size_t j = 0; j < s.q[i].size(); ++j) {
      parse_scalar(s, s.q[i][j], ".q[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  if (s.cocycle_constant) parse_scalar(s, *s.cocycle_constant, ".cocycle");
  for (std::size_t i = 0; i < s.cocycle_table.size(); ++i) {
    for (std::size_t j = 0; j < s.cocycle_table[i].size(); ++j) {
      parse_scalar(s, s.cocycle_table[i][j], ".cocycle[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  for (std::size_t i = 0; i < s.relations.size(); ++i) {
    try {
      parse_tensor(s.relations[i], n);
    } catch (const std::exception& e) {
      fail(".relations[" + std::to_string(i) + "]", e.what());
    }
  }
  for (std::size_t i = 0; i < s.algebra_relations.size(); ++i) {
    try {
      parse_tensor(s.algebra_relations[i], n);
    } catch (const std::exception& e) {
      fail(".algebra_relations[" + std::to_string(i) + "]", e.what());
    }
  }
  if (s.volume) {
    try {
      parse_index_word(*s.volume, n);
    } catch (const std::exception& e) {
      fail(".volume", e.what());
    }
  }
  return s;
}

BraidingSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string spec_to_json(const BraidingSpec& s) {
  ordered_json doc;
  if (!s.name.empty()) doc["name"] = s.name;
  doc["kind"] = s.kind;
  doc["n"] = s.n;
  if (s.conductor) doc["conductor"] = *s.conductor;
  if (s.scale) doc["scale"] = *s.scale;
  if (s.kind == "matrix") {
    ordered_json e = ordered_json::array();
    for (const auto& [i, j, k, l, v] : s.entries) e.push_back(ordered_json::array({i, j, k, l, v}));
    doc["entries"] = e;
  }
  if (s.kind == "diagonal") doc["q"] = scalar_table_json(s.q);
  if (s.kind == "set_solution") {
    ordered_json t = ordered_json::array();
    for (const auto& row : s.solution) {
      ordered_json r = ordered_json::array();
      for (const auto& [g, f] : row) r.push_back(ordered_json::array({g, f}));
      t.push_back(r);
    }
    doc["solution"] = t;
  }
  if (s.kind == "rack") doc["rack"] = s.rack;
  if (s.cocycle_constant) doc["cocycle"] = *s.cocycle_constant;
  if (!s.cocycle_table.empty()) doc["cocycle"] = scalar_table_json(s.cocycle_table);
  if (s.kind == "presentation") doc["relations"] = s.relations;
  if (!s.algebra_relations.empty()) doc["algebra_relations"] = s.algebra_relations;
  if (s.volume) doc["volume"] = *s.volume;
  if (s.max_degree) doc["max_degree"] = *s.max_degree;
  return doc.dump(2) + "\n";
}

bool is_presentation(const BraidingSpec& spec) { return spec.kind == "presentation"; }

Scalar parse_scalar(const BraidingSpec& spec, const std::string& literal, const std::string& where) {
  Scalar v;
  try {
    v = Scalar::parse(literal);
  } catch (const std::exception& e) {
    fail(where, "bad scalar literal '" + literal + "': " + e.what());
  }
  if (spec.conductor && *spec.conductor % v.conductor() != 0) {
    fail(where, "literal '" + literal + "' does not lie in Q(zeta_" + std::to_string(*spec.conductor) + ")");
  }
  return v;
}

namespace {

Cocycle cocycle_of(const BraidingSpec& s) {
  if (!s.cocycle_table.empty()) {
    Cocycle c;
    for (std::size_t i = 0; i < s.cocycle_table.size(); ++i) {
      std::vector<Scalar> row;
      for (std::size_t j = 0; j < s.cocycle_table[i].size(); ++j) {
        row.push_back(parse_scalar(s, s.cocycle_table[i][j], ".cocycle"));
      }
      c.q.push_back(std::move(row));
    }
    return c;
  }
  return Cocycle::constant(s.n, s.cocycle_constant ? parse_scalar(s, *s.cocycle_constant, ".cocycle") : Scalar(1L));
}

}  // namespace

std::optional<std::vector<std::vector<Scalar>>> diagonal_q(const BraidingSpec& spec) {
  if (spec.kind != "diagonal") return std::nullopt;
  std::vector<std::vector<Scalar>> q;
  for (const auto& row : spec.q) {
    std::vector<Scalar> r;
    for (const auto& x : row) r.push_back(parse_scalar(spec, x, ".q"));
    q.push_back(std::move(r));
  }
  return q;
}

std::optional<Rack> rack_data(const BraidingSpec& spec) {
  if (spec.kind != "rack") return std::nullopt;
  Rack r;
  r.n = spec.n;
  for (const auto& row : spec.rack) {
    std::vector<int> z;
    for (int v : row) z.push_back(v - 1);
    r.op.push_back(std::move(z));
  }
  return r;
}

std::optional<std::pair<SetSolution, Cocycle>> set_data(const BraidingSpec& spec) {
  if (spec.kind == "rack") return std::make_pair(rack_data(spec)->as_solution(), cocycle_of(spec));
  if (spec.kind != "set_solution") return std::nullopt;
  SetSolution sol;
  sol.n = spec.n;
  for (const auto& row : spec.solution) {
    std::vector<std::pair<int, int>> z;
    for (const auto& [g, f] : row) z.emplace_back(g - 1, f - 1);
    sol.s.push_back(std::move(z));
  }
  return std::make_pair(sol, cocycle_of(spec));
}

BraidingTensor build_braiding(const BraidingSpec& spec) {
  BraidingTensor c;
  if (spec.kind == "matrix") {
    c = BraidingTensor(spec.n);
    for (const auto& [i, j, k, l, v] : spec.entries) c.set(i - 1, j - 1, k - 1, l - 1, parse_scalar(spec, v, ".entries"));
  } else if (spec.kind == "flip") {
    c = BraidingTensor::flip(spec.n);
  } else if (spec.kind == "diagonal") {
    c = BraidingTensor::diagonal(*diagonal_q(spec));
  } else if (spec.kind == "set_solution" || spec.kind == "rack") {
    const auto [sol, q] = *set_data(spec);
    c = BraidingTensor::from_set_solution(sol, q);
  } else {
    throw DomainError("a presentation spec does not describe a braiding");
  }
  if (spec.scale) c = c.scaled(parse_scalar(spec, *spec.scale, ".scale"));
  return c;
}

std::pair<int, std::vector<Scalar>> parse_tensor(const std::string& text, int n) {
  // Split into signed terms at top-level + and -.
  std::vector<std::pair<bool, std::string>> terms;
  std::string cur;
  bool neg = false;
  int depth = 0;
  auto flush = [&]() {
    std::string t;
    for (char ch : cur) {
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    }
    if (!t.empty()) terms.emplace_back(neg, t);
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (cur.find_first_not_of(" \t") != std::string::npos) {
        flush();
        neg = false;
      }
      cur.clear();
      if (ch == '-') neg = !neg;
      continue;
    }
    cur += ch;
  }
  flush();
  if (terms.empty()) throw ParseError("tensor '" + text + "' is empty");
  int degree = -1;
  std::vector<std::pair<IndexWord, Scalar>> parsed;
  for (const auto& [negative, t] : terms) {
    std::size_t pos = 0;
    Scalar coeff(1L);
    if (t[0] == '(') {
      const std::size_t close = t.find(')');
      if (close == std::string::npos) throw ParseError("tensor '" + text + "': unbalanced parenthesis");
      coeff = Scalar::parse(t.substr(1, close - 1));
      pos = close + 1;
    } else {
      while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/')) ++pos;
      if (pos > 0) coeff = Scalar::parse(t.substr(0, pos));
    }
    if (pos < t.size() && t[pos] == '*') ++pos;
    const IndexWord w = parse_index_word(t.substr(pos), n);
    if (w.empty()) throw ParseError("tensor '" + text + "': term without a word");
    if (degree >= 0 && static_cast<int>(w.size()) != degree) {
      throw ParseError("tensor '" + text + "' is not homogeneous");
    }
    degree = static_cast<int>(w.size());
    parsed.emplace_back(w, negative ? -coeff : coeff);
  }
  std::vector<Scalar> v(tensor_dim(n, degree));
  for (const auto& [w, c] : parsed) v[word_index(w, n)] += c;
  return {degree, v};
}

std::vector<std::pair<int, std::vector<Scalar>>> presentation_relations(const BraidingSpec& spec) {
  std::vector<std::pair<int, std::vector<Scalar>>> out;
  for (const auto& r : spec.relations) out.push_back(parse_tensor(r, spec.n));
  return out;
}

}  // namespace qfa

namespace qfa {

std::vector<std::pair<int, std::vector<Scalar>>> algebra_relations(const BraidingSpec& spec) {
  std::vector<std::pair<int, std::vector<Scalar>>> out;
  for (const auto& r : spec.algebra_relations) out.push_back(parse_tensor(r, spec.n));
  return out;
}

}  // namespace qfa
