// One PASS/FAIL line per acceptance criterion. All comparisons are exact and go
// through normal forms modulo the FRT ideal unless noted.
//
// --expect-fail 2,4,5,7 lists criteria documented as unattainable; the exit status is
// nonzero when any other criterion fails or when a listed one unexpectedly passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "qfa/closed_forms.hpp"
#include "qfa/frt.hpp"
#include "qfa/nichols.hpp"
#include "qfa/qdet.hpp"
#include "support.hpp"

using namespace qfa;
using namespace qfa::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok: " : "FAILED: ") + what);
  }
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += "\n    " + x;
  return s;
}

// span of the listed elements equals the degree-2 part of the ideal
bool same_degree2_span(const Run& r, const std::vector<NCPoly>& listed, std::string* why) {
  for (const auto& p : listed) {
    if (!r.zero(p)) {
      *why = p.to_string(r.n) + " is not in the FRT ideal";
      return false;
    }
  }
  const auto basis = interreduce(listed);
  if (basis.size() != r.rep.frt.relations.size()) {
    *why = "listed span has dimension " + std::to_string(basis.size()) + ", FRT relations " +
           std::to_string(r.rep.frt.relations.size());
    return false;
  }
  return true;
}

NCPoly entry(const PolyMatrix& m, int i, int j) { return m[i][j]; }

Outcome criterion1() {
  Outcome o;
  const Run r = run_corpus("nondiag2x2");
  o.require(r.rep.top.status == TopResult::Status::Found, "top degree found");
  o.require(r.same(r.rep.D, r.poly("a^2 - b^2")), "D = a^2 - b^2");
  o.require(r.rep.J && r.rep.J->identity, "J = id");
  o.require(r.rep.hypothesis_holds, "main hypothesis holds");
  const char* expected[] = {"a", "-c", "-b", "d"};
  bool anti = r.rep.antipode.size() == 4;
  for (std::size_t g = 0; anti && g < 4; ++g) anti = r.same(r.rep.antipode[g].numerator, r.poly(expected[g]));
  o.require(anti, "S(a) = aD^-1, S(b) = -cD^-1, S(c) = -bD^-1, S(d) = dD^-1");
  bool sl = false;
  if (r.rep.sl) {
    for (const auto& rel : r.rep.sl->relations) sl |= rel == r.rep.D.to_string(r.n) + " = 1";
  }
  o.require(sl, "SL presentation contains D = 1 with D = a^2 - b^2");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Run r = run_corpus("involutive3");
  o.require(r.same(r.rep.D, r.poly("ae^2 - af^2 + bdf - bed - cde + cfd")), "D = ae^2 - af^2 + bdf - bed - cde + cfd");
  const NCPoly& D = r.rep.D;
  auto g = [&](char c) { return r.gen(c); };
  o.require(!r.rep.normality.central, "D is not central");
  o.require(r.zero(g('b') * D + D * g('c')), "bD = -Dc");
  o.require(r.zero(g('c') * D + D * g('b')), "cD = -Db");
  o.require(r.zero(g('d') * D + D * g('g')), "dD = -Dg");
  o.require(r.zero(D * g('f') - g('h') * D), "Df = hD");
  bool invol = r.rep.J.has_value();
  if (invol) {
    for (int k = 0; k < r.n * r.n; ++k) {
      const NCPoly twice = apply_on_generators(r.rep.J->images, r.rep.J->images[k]);
      invol = invol && twice == NCPoly::monomial(Word(1, static_cast<char>(k)));
    }
  }
  o.require(invol, "J^2 = id");
  const char* S[3][3] = {{"-fh + ei", "-ce + bf", "ch - bi"},
                         {"-fg + dh", "-cd + ae", "cg - ah"},
                         {"eg - di", "bd - af", "-bg + ai"}};
  bool anti = r.rep.antipode.size() == 9;
  std::string bad;
  for (int i = 0; anti && i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!r.same(r.rep.antipode[i * 3 + j].numerator, r.poly(S[i][j]))) {
        anti = false;
        bad = "S(" + gen_name(gen_letter(i, j, 3), 3) + ") numerator " +
              r.G.normal_form(r.rep.antipode[i * 3 + j].numerator).remainder.to_string(3) + " vs " + S[i][j];
        break;
      }
    }
  }
  o.require(anti, "antipode numerator matrix" + (bad.empty() ? "" : " (" + bad + ")"));
  // the displayed D against the displayed antipode: t S(t) D = D
  NCPoly row;
  for (int k = 0; k < 3; ++k) row += NCPoly::gen(0, k, 3) * r.poly(S[k][0]);
  const NCPoly shown = r.poly("ae^2 - af^2 + bdf - bed - cde + cfd");
  o.notes.push_back("info: displayed D reduces to " + r.G.normal_form(shown).remainder.to_string(3) +
                    "; the displayed antipode gives sum_k t_1^k S_k^1 = " + r.G.normal_form(row).remainder.to_string(3));
  const Run alt = run_corpus("involutive3_listed");
  const bool alt_d = alt.same(alt.rep.D, alt.poly("ae^2 - af^2 + bdf - bed - cde + cfd"));
  const bool alt_sign = alt.zero(alt.gen('b') * alt.rep.D + alt.rep.D * alt.gen('c'));
  o.notes.push_back(std::string("info: the variant s(2,2)=(3,3), s(3,3)=(2,2) reproduces the displayed D: ") +
                    (alt_d ? "yes" : "no") + "; it satisfies bD = -Dc: " + (alt_sign ? "yes" : "no"));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Run r = run_corpus("fk3");
  const auto h = r.rep.hilbert;
  std::size_t total = 0;
  for (auto x : h) total += x;
  o.require(total == 12, "dim B = 12");
  o.require(r.rep.top.status == TopResult::Status::Found && r.rep.top.wgf->top == 4, "top degree 4");
  o.require(h.size() > 5 && h[5] == 0, "dim B^5 = 0");
  if (r.rep.top.status != TopResult::Status::Found) return o;
  const WgfData& w = *r.rep.top.wgf;
  const std::vector<std::pair<std::string, int>> table = {
      {"x1x2x1x2", 0},  {"x1x2x1x3", -1}, {"x1x2x3x1", 0},  {"x1x3x1x2", -1}, {"x1x3x1x3", 0},  {"x1x3x2x1", 0},
      {"x1x3x2x3", 1},  {"x2x1x2x1", 0},  {"x2x1x2x3", -1}, {"x2x1x3x1", 1},  {"x2x1x3x2", 0},  {"x2x3x1x2", 0},
      {"x2x3x1x3", 1},  {"x2x3x2x1", -1}, {"x2x3x2x3", 0},  {"x3x1x2x1", 1},  {"x3x1x2x3", 0},  {"x3x1x3x1", 0},
      {"x3x1x3x2", -1}, {"x3x2x1x2", 1},  {"x3x2x1x3", 0},  {"x3x2x3x1", -1}, {"x3x2x3x2", 0},  {"x1x2x3x2", 1}};
  bool tab = true;
  std::string bad;
  for (const auto& [word, val] : table) {
    if (w.alpha_of(parse_index_word(word, 3)) != Scalar(static_cast<long>(val))) {
      tab = false;
      bad = word;
      break;
    }
  }
  o.require(tab, "degree-4 class table (24 words)" + (bad.empty() ? "" : ", first mismatch " + bad));
  o.require(r.same(r.rep.D, r.poly("c^2e^2 + c^2d^2 + b^2f^2 + b^2d^2 - 3abgi - 3abdf + a^2f^2 + a^2e^2")),
            "D matches the 8-term expression");
  bool central = r.rep.normality.central;
  for (int k = 0; central && k < 9; ++k) {
    const NCPoly t = NCPoly::monomial(Word(1, static_cast<char>(k)));
    central = r.zero(r.rep.D * t - t * r.rep.D);
  }
  o.require(central, "D central (certified on all generators)");
  const RForm rf(r.c);
  o.require(rf.against_left(r.rep.D) == Matrix::identity(3), "r(D, t_i^j) = delta_ij");
  o.require(!r.rep.antipode.empty() && r.same(r.rep.antipode[0].numerator, r.poly("-fbi + fah - ech + eai")),
            "S(a) = (-fbi + fah - ech + eai) D^-1");
  const auto t0 = std::chrono::steady_clock::now();
  const TruncatedGB G5 = complete(r.rep.frt.relations, 5);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream ss;
  ss << "degree-5 Groebner basis over 9 letters in " << secs << " s (limit 60 s)";
  o.require(!G5.budget_exhausted() && G5.complete_through() == 5 && secs <= 60.0, ss.str());
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Run r = run_corpus("quantum_plane_r22");
  // k = z4, p = 2, q = 1/2: kp = 2 z4, kq = z4/2, q^2 = 1/4
  const std::vector<NCPoly> listed = {r.poly("ab - (2*z4)*ba"), r.poly("ac - (1/2*z4)*ca"), r.poly("bc - 1/4*cb"),
                                      r.poly("ad - da - (2*z4)*bc"), r.poly("cd - (2*z4)*dc"),
                                      r.poly("bd - (1/2*z4)*db")};
  std::string why;
  const bool spans = same_degree2_span(r, listed, &why);
  o.require(spans, "FRT relations span the six listed" + (why.empty() ? "" : " (" + why + ")"));
  std::vector<NCPoly> corrected = listed;
  corrected[3] = r.poly("ad - da - (4*z4)*bc");
  std::string why2;
  o.notes.push_back(std::string("info: with ad - da = 2kp bc the listed span ") +
                    (same_degree2_span(r, corrected, &why2) ? "matches" : "still differs (" + why2 + ")"));
  o.require(r.same(r.rep.D, r.poly("ad - (2*z4)*bc")), "D = ad - kp bc");
  const char* T[2][2] = {{"d", "(1/2*z4)*b"}, {"(-2*z4)*c", "a"}};
  const char* JT[2][2] = {{"d", "(2*z4)*b"}, {"(-1/2*z4)*c", "a"}};
  bool t_ok = true, jt_ok = !r.rep.JT.empty();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      t_ok = t_ok && r.same(entry(r.rep.T, i, j), r.poly(T[i][j]));
      jt_ok = jt_ok && r.same(entry(r.rep.JT, i, j), r.poly(JT[i][j]));
    }
  }
  o.require(t_ok, "T = [[d, kq b], [-kp c, a]]");
  o.require(jt_ok, "J(T) = [[d, kp b], [-kq c, a]]");
  o.require(r.rep.propfila.zero && r.rep.propfila.decisive, "t T = D id");
  o.require(r.rep.main.zero && r.rep.main.decisive, "J(T) t = D id");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const BraidingSpec spec = corpus_spec("nonquadratic_presented");
  o.require(!is_presentation(spec),
            "relations derived from a braiding (no braiding with this Nichols algebra is available; the algebra "
            "is entered as a presentation)");
  const int n = spec.n;
  const auto rels = presentation_relations(spec);
  const GradedNichols b = GradedNichols::from_relations(n, rels, 7);
  o.require(b.degree(2).new_relations.empty() && b.degree(1).new_relations.empty(), "no relations below degree 3");
  const Scalar w = Scalar::root_of_unity(3, 1);
  const Scalar xi = -w;
  auto tensor = [&](const std::string& text) { return parse_tensor(text, n).second; };
  std::vector<std::vector<Scalar>> listed = {tensor("x^3"), tensor("y^3 - x^2y - yx^2 + xyx"),
                                             tensor("y^2x + xy^2 - yxy")};
  {
    auto v = tensor("xyx");
    const auto a = tensor("x^2y");
    const auto c = tensor("yx^2");
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += xi * a[k] + xi.pow(5) * c[k];
    listed.push_back(v);
  }
  const auto& d3 = b.degree(3);
  std::vector<std::vector<Scalar>> all = d3.inherited.basis;
  for (const auto& v : listed) all.push_back(v);
  const Subspace s = span(tensor_dim(n, 3), all);
  bool match = s.dim() == d3.kernel.dim();
  for (const auto& v : d3.kernel.basis) match = match && s.contains(v);
  o.require(match && d3.new_relations.size() == 4, "degree-3 relations match the four listed modulo the lower ideal");
  const TopResult top = detect_top(b, parse_index_word("x^2yxy^2", n));
  o.require(top.status == TopResult::Status::Found && top.wgf->top == 6, "top degree 6, volume x^2yxy^2");
  if (top.status != TopResult::Status::Found) return o;
  const NCPoly D = quantum_determinant(*top.wgf);
  const std::string displayed =
      "(-w + w2)*b^2dbdc + (-2*w - w2)*b^2dbcd + (-w - 2*w2)*b^2dad^2 + (w - w2)*b^2cbd^2 + (w)*b^2cbc^2 + "
      "(w2)*b^2cadc + (2*w + w2)*badbd^2 + (w)*badbc^2 - badacd + (-w)*bacbdc + (-w)*bacbcd + "
      "(w + 2*w2)*abdbd^2 + (-w2)*abdadc - abdacd + (-w2)*abcbdc + (w2)*abcad^2 + a^2dbcd + a^2dad^2";
  auto with_root = [&](const std::string& z, const std::string& z2) {
    std::string s = displayed;
    for (std::size_t pos; (pos = s.find("w2")) != std::string::npos;) s.replace(pos, 2, z2);
    for (std::size_t pos; (pos = s.find('w')) != std::string::npos;) s.replace(pos, 1, z);
    return parse_ncpoly(s, n);
  };
  // no braiding, so no FRT ideal: the comparison is in the free algebra
  const bool literal = D == with_root("z3", "z3^2");
  const bool conjugate = D == with_root("z3^2", "z3");
  o.require(literal, "D equals the displayed expression with omega = zeta_3 (the root used in the relations)");
  o.notes.push_back(std::string("info: D equals the displayed expression with omega = zeta_3^2: ") +
                    (conjugate ? "yes" : "no"));
  return o;
}

Outcome criterion6() {
  Outcome o;
  const Run r = run_corpus("commutative_zero_divisor");
  const std::vector<NCPoly> listed = {r.poly("ba - ab"), r.poly("b^2"),    r.poly("bd"),      r.poly("ca - ac"),
                                      r.poly("cb - bc"), r.poly("c^2"),    r.poly("cd"),      r.poly("da - ad"),
                                      r.poly("db - 2*bd"), r.poly("dc - 2*cd")};
  std::string why;
  const bool spans = same_degree2_span(r, listed, &why);
  o.require(spans, "FRT ideal equals the commutative presentation" + (why.empty() ? "" : " (" + why + ")"));
  o.require(r.same(r.rep.D, r.poly("ad - bc")), "D = ad - bc");
  bool b = false, c = false;
  for (const auto& z : r.rep.zero_divisors) {
    b |= z.generator == 1 && z.left;
    c |= z.generator == 2 && z.left;
  }
  o.require(b && c && r.zero(r.gen('b') * r.rep.D) && r.zero(r.gen('c') * r.rep.D), "zero divisors b and c (bD = cD = 0)");
  o.require(r.rep.localization.group_algebra && r.rep.localization.rank == 2, "H(c) is the group algebra of Z x Z");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Run r = run_corpus("qls_equal_roots");
  std::size_t total = 0;
  for (auto x : r.rep.hilbert) total += x;
  o.require(total == 9, "dim B = 9");
  o.require(r.same(r.rep.D, r.poly("a^2d^2")), "D = (t_1^1)^2 (t_2^2)^2");
  o.require(r.zero(r.poly("b^2")) && r.zero(r.poly("c^2")), "(t_i^j)^2 = 0 for i != j");
  o.require(r.zero(r.poly("ac")) && r.zero(r.poly("ca")) && r.zero(r.poly("bd")) && r.zero(r.poly("db")),
            "t_i^k t_j^k = 0 for i != j");
  const Run d = run_corpus("qls_distinct_roots");
  const bool distinct = d.same(d.rep.D, d.poly("a^2d^2")) && d.zero(d.poly("b^2")) && d.zero(d.poly("c^2"));
  o.notes.push_back(std::string("info: q11 = q22 violates q_jj^-2 q_ii^2 != 1; with q22 = zeta_3^2 the same checks ") +
                    (distinct ? "pass" : "fail"));
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int n : {2, 3}) {
    const Run r = run_corpus("minus_flip" + std::to_string(n));
    const std::string tag = "-flip, n = " + std::to_string(n) + ": ";
    o.require(r.same(r.rep.D, alternating_determinant(n)), tag + "D is the alternating-sum determinant");
    o.require(r.rep.propfila.zero && r.rep.propfila.decisive, tag + "cofactor identity t T = D id");
    const Run f = run_corpus("flip" + std::to_string(n));
    o.require(f.rep.top.status == TopResult::Status::Inconclusive && f.rep.hilbert.size() >= 7,
              "flip, n = " + std::to_string(n) + ": no top degree through degree 6, inconclusive");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto note = [&](const Verdict& v, const std::string& what) { o.require(v.ok, what + (v.ok ? "" : " (" + v.detail + ")")); };
  bool m = true;
  std::string mbad;
  for (const char* name : {"nondiag2x2", "involutive3", "fk3", "quantum_plane_r22", "qls_distinct_roots", "minus_flip3"}) {
    const Verdict v = matsumoto_well_defined(build_braiding(corpus_spec(name)), 4);
    if (!v.ok && m) mbad = std::string(name) + ": " + v.detail;
    m = m && v.ok;
  }
  o.require(m, "Matsumoto lifts well defined through degree 4" + (mbad.empty() ? "" : " (" + mbad + ")"));
  bool rn = true;
  for (std::uint64_t s = 0; s < 40; ++s) {
    rn = rn && rank_nullity(random_matrix(3 + s % 5, 2 + s % 7, s % 3 == 0 ? 3 : 1, s, 20 + 10 * (s % 5))).ok;
  }
  o.require(rn, "rank-nullity on 40 random matrices");
  note(field_inverses(7, 200), "field inverse round trips");
  note(coproduct_laws(2, 11, 20), "coassociativity and multiplicativity of Delta (n = 2)");
  note(coproduct_laws(3, 13, 10), "coassociativity and multiplicativity of Delta (n = 3)");
  {
    const Run r = run_corpus("fk3", false);
    note(gb_confluence(r.G, 9, 4, 17, 20), "reduction confluence modulo the FK3 FRT ideal");
    const Run q = run_corpus("quantum_plane_r22", false);
    note(gb_confluence(q.G, 4, 3, 19, 20), "reduction confluence modulo the quantum plane FRT ideal");
  }
  for (const char* name : {"involutive3", "minus_flip2", "minus_flip3", "nondiag2x2"}) {
    const BraidingSpec spec = corpus_spec(name);
    const auto data = set_data(spec);
    if (spec.kind != "flip" && (!data || !validate(data->first).involutive)) continue;
    note(exterior_dimension_law(build_braiding(spec), 5), std::string("exterior dimension law: ") + name);
  }
  for (const char* name : {"fk3", "fk4", "fk5"}) {
    const BraidingSpec spec = corpus_spec(name);
    if (name != std::string("fk3")) {
      o.notes.push_back(std::string("info: ") + name +
                        " closed forms need the top degree, which is outside the computable range");
      continue;
    }
    note(closed_forms_agree(spec), std::string("closed-form r(D, t) and J agree with the r-form: ") + name);
  }
  for (const char* name : {"nondiag2x2", "involutive3"}) {
    note(closed_forms_agree(corpus_spec(name)), std::string("closed-form r(D, t) and J agree with the r-form: ") + name);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail") {
      std::stringstream ss(argv[i + 1]);
      for (std::string tok; std::getline(ss, tok, ',');) expect_fail.insert(std::stoi(tok));
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"non-diagonal 2x2 set solution", criterion1},
      {"involutive 3x3 solution, non-central D", criterion2},
      {"Fomin-Kirillov E3", criterion3},
      {"quantum plane R22 at k = i, p = 2, q = 1/2", criterion4},
      {"non-quadratic Nichols algebra over Q(zeta_3)", criterion5},
      {"commutative example with zero divisors", criterion6},
      {"quantum linear space with q11 = q22 = zeta_3", criterion7},
      {"classical oracles -flip and flip", criterion8},
      {"property suites", criterion9},
  };
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const bool expected = expect_fail.count(id) > 0;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[k].first
              << (expected ? " [documented as unattainable]" : "") << join(o.notes) << "\n";
    if (o.pass == expected) ++unexpected;
  }
  std::cout.flush();
  return unexpected == 0 ? 0 : 1;
}
