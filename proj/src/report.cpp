#include "qfa/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "qfa/closed_forms.hpp"
#include "qfa/frt.hpp"
#include "qfa/nichols.hpp"
#include "qfa/qdet.hpp"

namespace qfa {

using nlohmann::ordered_json;

std::string spec_hash(const BraidingSpec& spec) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(spec_to_json(spec))));
  return buf;
}

namespace {

ordered_json header(const BraidingSpec& spec, const char* command) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["spec_name"] = spec.name;
  j["input_hash"] = spec_hash(spec);
  return j;
}

ordered_json poly_matrix_json(const PolyMatrix& m, int n) {
  ordered_json a = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& p : row) r.push_back(p.to_string(n));
    a.push_back(r);
  }
  return a;
}

ordered_json scalar_matrix_json(const Matrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    a.push_back(r);
  }
  return a;
}

std::string latex_matrix(const PolyMatrix& m, int n) {
  std::string s = "\\begin{pmatrix}\n";
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " & " : "  ") + row[j].to_latex(n);
    s += " \\\\\n";
  }
  return s + "\\end{pmatrix}";
}

struct CheckData {
  BraidCheck braid;
  RigidCheck rigid;
  std::optional<SetValidation> set;
};

CheckData run_check(const BraidingSpec& spec, const BraidingTensor& c) {
  CheckData d;
  d.braid = check_braid_equation(c);
  d.rigid = check_rigid(c);
  if (auto rk = rack_data(spec)) {
    d.set = validate(*rk, set_data(spec)->second);
  } else if (auto sd = set_data(spec)) {
    d.set = validate(sd->first, &sd->second);
  }
  return d;
}

int check_exit(const CheckData& d) {
  if (!d.braid.ok || (d.set && !d.set->ok)) return kExitBraid;
  if (!d.rigid.ok) return kExitRigid;
  return kExitOk;
}

ordered_json check_json(const CheckData& d) {
  ordered_json j;
  j["braid_equation"] = {{"ok", d.braid.ok}, {"witness", d.braid.ok ? ordered_json() : ordered_json(*d.braid.witness)},
                         {"detail", d.braid.detail}};
  j["rigid"] = {{"ok", d.rigid.ok}, {"witness", d.rigid.witness}};
  if (d.set) {
    j["set_theoretic"] = {{"ok", d.set->ok},
                          {"involutive", d.set->involutive},
                          {"nondegenerate", d.set->nondegenerate},
                          {"witness", d.set->witness}};
  }
  return j;
}

std::string check_text(const CheckData& d) {
  std::string s = "braid equation: " + std::string(d.braid.ok ? "pass" : "FAIL, " + d.braid.detail) + "\n";
  s += "rigidity: " + std::string(d.rigid.ok ? "pass" : "FAIL, " + d.rigid.witness) + "\n";
  if (d.set) {
    s += "set-theoretic data: " + std::string(d.set->ok ? "pass" : "FAIL, " + d.set->witness);
    s += d.set->involutive ? ", involutive" : ", not involutive";
    s += d.set->nondegenerate ? ", non-degenerate\n" : ", degenerate\n";
  }
  return s;
}

int max_degree_of(const BraidingSpec& spec, const CommandOptions& opt) {
  return opt.max_degree.value_or(spec.max_degree.value_or(8));
}

std::optional<IndexWord> volume_of(const BraidingSpec& spec, const CommandOptions& opt) {
  if (opt.volume) return parse_index_word(*opt.volume, spec.n);
  if (spec.volume) return parse_index_word(*spec.volume, spec.n);
  return std::nullopt;
}

GradedNichols graded_algebra(const BraidingSpec& spec, const CommandOptions& opt) {
  if (is_presentation(spec)) return GradedNichols::from_relations(spec.n, presentation_relations(spec), max_degree_of(spec, opt));
  if (!spec.algebra_relations.empty()) {
    return GradedNichols::from_relations(spec.n, algebra_relations(spec), max_degree_of(spec, opt));
  }
  return GradedNichols(build_braiding(spec), max_degree_of(spec, opt));
}

const char* status_name(TopResult::Status s) {
  switch (s) {
    case TopResult::Status::Found:
      return "found";
    case TopResult::Status::WgfFailure:
      return "wgf_failure";
    case TopResult::Status::Inconclusive:
      break;
  }
  return "inconclusive";
}

int top_exit(const TopResult& t) {
  if (t.status == TopResult::Status::Inconclusive) return kExitInconclusive;
  if (t.status == TopResult::Status::WgfFailure) return kExitWgf;
  return kExitOk;
}

ordered_json nichols_json(const GradedNichols& b, const TopResult& top) {
  const int n = b.n();
  ordered_json j;
  j["hilbert"] = b.hilbert();
  j["computed_through"] = b.computed_through();
  j["size_cap_reached"] = b.hit_size_cap();
  ordered_json nr = ordered_json::array();
  for (int d = 2; d <= b.computed_through(); ++d) {
    ordered_json rels = ordered_json::array();
    for (const auto& r : b.degree(d).new_relations) rels.push_back(tensor_to_string(r, n, d, true));
    nr.push_back({{"degree", d}, {"count", rels.size()}, {"relations", rels}});
  }
  j["new_relations"] = nr;
  ordered_json t;
  t["status"] = status_name(top.status);
  if (top.wgf) {
    t["degree"] = top.wgf->top;
    t["volume"] = index_word_to_string(top.wgf->volume, n, true);
    ordered_json alpha = ordered_json::object();
    for (const auto& [k, v] : alpha_coefficients(*top.wgf)) alpha[index_word_to_string(k, n)] = v.to_string();
    t["alpha"] = alpha;
    std::size_t total = 0;
    for (auto h : b.hilbert()) total += h;
    t["dimension"] = total;
  }
  if (!top.message.empty()) t["message"] = top.message;
  j["top"] = t;
  return j;
}

std::string nichols_text(const GradedNichols& b, const TopResult& top) {
  const int n = b.n();
  std::ostringstream os;
  os << "hilbert:";
  for (auto h : b.hilbert()) os << " " << h;
  os << "\n";
  for (int d = 2; d <= b.computed_through(); ++d) {
    const auto& rels = b.degree(d).new_relations;
    if (rels.empty()) continue;
    os << "new relations in degree " << d << " (" << rels.size() << "):\n";
    for (const auto& r : rels) os << "  " << tensor_to_string(r, n, d, true) << "\n";
  }
  if (top.wgf) {
    std::size_t total = 0;
    for (auto h : b.hilbert()) total += h;
    os << "top degree " << top.wgf->top << ", dimension " << total << ", volume "
       << index_word_to_string(top.wgf->volume, n, true) << "\n";
  } else {
    os << status_name(top.status) << ": " << top.message << "\n";
  }
  return os.str();
}

std::string render(const ordered_json& j, const std::string& text, const std::string& latex, Format f) {
  switch (f) {
    case Format::Json:
      return j.dump(2) + "\n";
    case Format::Latex:
      return latex;
    case Format::Text:
      break;
  }
  return text;
}

}  // namespace

CommandOutput cmd_check(const BraidingSpec& spec, const CommandOptions& opt) {
  CommandOutput out;
  ordered_json j = header(spec, "check");
  if (is_presentation(spec)) {
    j["note"] = "presentation spec: no braiding to check";
    out.text = render(j, "presentation spec: no braiding to check\n", "", opt.format);
    return out;
  }
  const CheckData d = run_check(spec, build_braiding(spec));
  j.update(check_json(d));
  out.exit_code = check_exit(d);
  out.text = render(j, check_text(d), "", opt.format);
  return out;
}

CommandOutput cmd_frt(const BraidingSpec& spec, const CommandOptions& opt) {
  CommandOutput out;
  if (is_presentation(spec)) {
    out.exit_code = kExitUsage;
    out.text = "frt: a presentation spec has no braiding\n";
    return out;
  }
  const BraidingTensor c = build_braiding(spec);
  const CheckData d = run_check(spec, c);
  ordered_json j = header(spec, "frt");
  j.update(check_json(d));
  out.exit_code = check_exit(d);
  if (out.exit_code != kExitOk) {
    out.text = render(j, check_text(d), "", opt.format);
    return out;
  }
  const FrtPresentation f = frt_relations(c);
  ordered_json rels = ordered_json::array();
  std::string text = "FRT relations (" + std::to_string(f.relations.size()) + "):\n";
  std::string latex = "\\begin{align*}\n";
  for (const auto& r : f.relations) {
    rels.push_back(r.to_string(spec.n));
    text += "  " + r.to_string(spec.n) + " = 0\n";
    latex += "  " + r.to_latex(spec.n) + " &= 0\\\\\n";
  }
  latex += "\\end{align*}\n";
  j["relations"] = rels;
  out.text = render(j, text, latex, opt.format);
  return out;
}

CommandOutput cmd_nichols(const BraidingSpec& spec, const CommandOptions& opt) {
  CommandOutput out;
  ordered_json j = header(spec, "nichols");
  std::string text;
  if (!is_presentation(spec)) {
    const CheckData d = run_check(spec, build_braiding(spec));
    j.update(check_json(d));
    out.exit_code = check_exit(d);
    if (out.exit_code != kExitOk) {
      out.text = render(j, check_text(d), "", opt.format);
      return out;
    }
  }
  const GradedNichols b = graded_algebra(spec, opt);
  TopResult top;
  try {
    top = detect_top(b, volume_of(spec, opt));
  } catch (const DomainError& e) {
    out.exit_code = kExitUsage;
    out.text = std::string("nichols: ") + e.what() + "\n";
    return out;
  }
  j["max_degree"] = max_degree_of(spec, opt);
  j.update(nichols_json(b, top));
  out.exit_code = top_exit(top);
  out.text = render(j, nichols_text(b, top), "", opt.format);
  return out;
}

namespace {

std::string qdet_text(const QDetReport& r) {
  const int n = r.n;
  std::ostringstream os;
  auto letter = [&](char g) { return gen_name(g, n); };
  os << "D = " << r.D.to_string(n) << "\n";
  os << "T =\n";
  for (const auto& row : r.T) {
    os << " ";
    for (const auto& p : row) os << " [" << p.to_string(n) << "]";
    os << "\n";
  }
  if (r.J) {
    os << "J: " << (r.J->identity ? "identity" : "not the identity") << "\n";
    for (int g = 0; g < n * n; ++g) {
      os << "  J(" << letter(static_cast<char>(g)) << ") = " << r.J->images[static_cast<std::size_t>(g)].to_string(n)
         << "\n";
    }
  } else {
    os << "J unavailable: " << r.J_error << "\n";
  }
  os << "cofactor identity t T = D id: " << (r.propfila.zero ? "holds" : "FAILS")
     << (r.propfila.decisive ? "" : " (not decisive)") << "\n";
  os << "main hypothesis J(T) t = D id: " << (r.hypothesis_holds ? "holds" : "does not hold")
     << (r.main.decisive ? "" : " (not decisive)") << "\n";
  if (r.J) {
    if (r.normality.central) {
      os << "D is central\n";
    } else {
      os << "D is normal, not central:\n";
      for (const auto& rule : r.normality.rules) {
        os << "  D " << letter(rule.generator) << " = (" << rule.image.to_string(n) << ") D";
        if (rule.certified) os << (*rule.certified ? "  [certified]" : "  [certificate FAILED]");
        os << "\n";
      }
    }
  }
  for (const auto& z : r.zero_divisors) {
    os << "zero divisor: " << letter(z.generator) << (z.left ? " (g D = 0)" : "") << (z.right ? " (D g = 0)" : "")
       << "\n";
  }
  if (!r.localization.text.empty()) os << r.localization.text << "\n";
  if (!r.zero_divisors.empty() && !r.hypothesis_holds) {
    os << "note: D is a zero divisor, so D t = J(t) D does not determine J; the verdict above uses J from r(t, D)\n";
  }
  if (r.hypothesis_holds) {
    os << "H(c) is a Hopf algebra with antipode:\n";
    for (const auto& a : r.antipode) os << "  S(" << letter(a.generator) << ") = (" << a.numerator.to_string(n) << ") D^-1\n";
    os << "  S(D) = D^-1, S(D^-1) = D\n";
  }
  os << "presentation of H(c):\n";
  for (const auto& rel : r.hopf.relations) os << "  " << rel << "\n";
  if (r.sl) {
    os << "SL = A(c)/(D - 1):\n";
    os << "  " << r.sl->relations.back() << "\n";
  }
  for (const auto& c : r.diagonal) {
    os << "diagonal certificate " << c.statement << ": " << (c.holds ? "holds" : "does not hold")
       << (c.applies ? "" : " (lemma hypothesis not satisfied)") << "\n";
  }
  return os.str();
}

std::string qdet_latex(const QDetReport& r) {
  const int n = r.n;
  std::string s = "\\[\n\\fbox{$D = " + r.D.to_latex(n) + "$}\n\\]\n";
  s += "\\[\nT = " + latex_matrix(r.T, n) + "\n\\]\n";
  if (r.J) s += "\\[\n\\mathfrak{J}(T) = " + latex_matrix(r.JT, n) + "\n\\]\n";
  if (r.hypothesis_holds) {
    s += "\\begin{align*}\n";
    for (const auto& a : r.antipode) {
      s += "  \\mathcal{S}(" + word_to_latex(Word(1, a.generator), n) + ") &= (" + a.numerator.to_latex(n) + ")D^{-1}\\\\\n";
    }
    s += "\\end{align*}\n";
  }
  return s;
}

ordered_json residual_json(const Residuals& res, int n) {
  return {{"zero", res.zero}, {"decisive", res.decisive}, {"residuals", poly_matrix_json(res.entries, n)}};
}

ordered_json qdet_json(const QDetReport& r) {
  const int n = r.n;
  ordered_json j;
  j["frt_relations"] = r.frt.relations.size();
  j["gb"] = {{"degree", r.gb_degree}, {"budget_exhausted", r.gb_budget_exhausted}, {"work", r.gb_work}};
  j["D"] = r.D.to_string(n);
  j["counit_D"] = r.counit_D.to_string();
  j["T"] = poly_matrix_json(r.T, n);
  if (r.J) {
    ordered_json images = ordered_json::object();
    for (int g = 0; g < n * n; ++g) images[gen_name(static_cast<char>(g), n)] = r.J->images[static_cast<std::size_t>(g)].to_string(n);
    j["J"] = {{"identity", r.J->identity},
              {"r_t_D", scalar_matrix_json(r.J->R)},
              {"on_generators", scalar_matrix_json(r.J->on_generators)},
              {"images", images}};
    j["J_of_T"] = poly_matrix_json(r.JT, n);
  } else {
    j["J"] = {{"error", r.J_error}};
  }
  j["cofactor_identity"] = residual_json(r.propfila, n);
  j["main_hypothesis"] = residual_json(r.main, n);
  j["main_hypothesis"]["holds"] = r.hypothesis_holds;
  ordered_json rules = ordered_json::array();
  for (const auto& rule : r.normality.rules) {
    ordered_json x = {{"generator", gen_name(rule.generator, n)}, {"J", rule.image.to_string(n)}};
    x["certified"] = rule.certified ? ordered_json(*rule.certified) : ordered_json();
    rules.push_back(x);
  }
  j["normality"] = {{"central", r.J && r.normality.central}, {"rules", rules}};
  ordered_json zd = ordered_json::array();
  for (const auto& z : r.zero_divisors) zd.push_back({{"generator", gen_name(z.generator, n)}, {"left", z.left}, {"right", z.right}});
  j["zero_divisors"] = zd;
  j["J_determined_by_D"] = r.zero_divisors.empty();
  j["localization"] = {{"group_algebra", r.localization.group_algebra}, {"rank", r.localization.rank}, {"note", r.localization.text}};
  ordered_json anti = ordered_json::array();
  for (const auto& a : r.antipode) {
    anti.push_back({{"generator", gen_name(a.generator, n)}, {"numerator", a.numerator.to_string(n)}, {"right_factor", "D^-1"}});
  }
  j["antipode"] = anti;
  if (r.hypothesis_holds) j["antipode_D"] = {{"S(D)", "D^-1"}, {"S(D^-1)", "D"}};
  j["hopf_presentation"] = {{"generators", r.hopf.generators}, {"relations", r.hopf.relations}};
  j["sl_presentation"] = r.sl ? ordered_json{{"generators", r.sl->generators}, {"relations", r.sl->relations}} : ordered_json();
  ordered_json diag = ordered_json::array();
  for (const auto& c : r.diagonal) diag.push_back({{"statement", c.statement}, {"applies", c.applies}, {"holds", c.holds}});
  if (!r.diagonal.empty()) j["diagonal_certificates"] = diag;
  j["verdict"] = r.hypothesis_holds ? "H(c) is a Hopf algebra with S(t_i^j) = T_i^j D^-1"
                                    : (r.main.decisive ? "main hypothesis fails" : "main hypothesis undecided");
  return j;
}

CommandOutput qdet_presentation(const BraidingSpec& spec, const CommandOptions& opt, ordered_json j) {
  CommandOutput out;
  const GradedNichols b = graded_algebra(spec, opt);
  const TopResult top = detect_top(b, volume_of(spec, opt));
  j.update(nichols_json(b, top));
  if (top.status != TopResult::Status::Found) {
    out.exit_code = top_exit(top);
    out.text = render(j, nichols_text(b, top), "", opt.format);
    return out;
  }
  const NCPoly D = quantum_determinant(*top.wgf);
  const PolyMatrix T = cofactor_matrix(*top.wgf);
  j["D"] = D.to_string(spec.n);
  j["T"] = poly_matrix_json(T, spec.n);
  j["note"] = "algebra given by a presentation: no braiding, so no FRT ideal, J or verdicts";
  j["verdict"] = "undecided";
  out.exit_code = kExitInconclusive;
  std::string text = nichols_text(b, top) + "D = " + D.to_string(spec.n) +
                     "\nno braiding given: FRT ideal, J and the main hypothesis are unavailable\n";
  out.text = render(j, text, "\\[\nD = " + D.to_latex(spec.n) + "\n\\]\n", opt.format);
  return out;
}

}  // namespace

CommandOutput cmd_qdet(const BraidingSpec& spec, const CommandOptions& opt) {
  CommandOutput out;
  ordered_json j = header(spec, "qdet");
  if (is_presentation(spec)) return qdet_presentation(spec, opt, j);
  const BraidingTensor c = build_braiding(spec);
  const CheckData d = run_check(spec, c);
  j.update(check_json(d));
  out.exit_code = check_exit(d);
  if (out.exit_code != kExitOk) {
    out.text = render(j, check_text(d), "", opt.format);
    return out;
  }
  QDetOptions qo;
  qo.volume = volume_of(spec, opt);
  qo.max_degree = max_degree_of(spec, opt);
  qo.budget = opt.budget;
  qo.certify_normality = opt.certify_normality;
  qo.algebra_relations = algebra_relations(spec);
  QDetReport r;
  try {
    r = run_qdet(c, qo, diagonal_q(spec));
  } catch (const DomainError& e) {
    out.exit_code = kExitUsage;
    out.text = std::string("qdet: ") + e.what() + "\n";
    return out;
  }
  ordered_json nj;
  nj["hilbert"] = r.hilbert;
  nj["algebra"] = r.custom_algebra ? "given relations" : "Nichols algebra";
  if (r.algebra_subcomodule) {
    nj["algebra_subcomodule"] = *r.algebra_subcomodule;
    if (!*r.algebra_subcomodule) nj["algebra_subcomodule_witness"] = r.subcomodule_witness;
  }
  nj["top"] = {{"status", status_name(r.top.status)}};
  if (r.top.wgf) {
    nj["top"]["degree"] = r.top.wgf->top;
    nj["top"]["volume"] = index_word_to_string(r.top.wgf->volume, spec.n, true);
  }
  if (!r.top.message.empty()) nj["top"]["message"] = r.top.message;
  j.update(nj);
  if (r.top.status != TopResult::Status::Found) {
    out.exit_code = top_exit(r.top);
    out.text = render(j, std::string(status_name(r.top.status)) + ": " + r.top.message + "\n", "", opt.format);
    return out;
  }
  j.update(qdet_json(r));
  if (r.algebra_subcomodule && !*r.algebra_subcomodule) {
    out.exit_code = kExitWgf;
    out.text = render(j, "the given algebra relations do not span a subcomodule: " + r.subcomodule_witness + "\n", "",
                      opt.format);
    return out;
  }
  if (r.gb_budget_exhausted && !r.main.decisive) {
    out.exit_code = kExitInconclusive;
  } else if (!r.hypothesis_holds) {
    out.exit_code = kExitHypothesis;
  }
  out.text = render(j, qdet_text(r), qdet_latex(r), opt.format);
  return out;
}

}  // namespace qfa
