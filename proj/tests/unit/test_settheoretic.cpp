#include "doctest.h"
#include "properties.hpp"
#include "qfa/closed_forms.hpp"
#include "qfa/set_solution.hpp"
#include "support.hpp"

using namespace qfa;
using namespace qfa::testing;

TEST_CASE("corpus set solutions and racks validate") {
  const auto nd = set_data(corpus_spec("nondiag2x2"));
  REQUIRE(nd);
  const SetValidation v = validate(nd->first, &nd->second);
  CHECK(v.ok);
  CHECK(v.involutive);
  CHECK(v.nondegenerate);
  for (const char* name : {"fk3", "fk4", "fk5"}) {
    const auto spec = corpus_spec(name);
    const auto rk = rack_data(spec);
    REQUIRE(rk);
    const SetValidation rv = validate(*rk, set_data(spec)->second);
    INFO(name << ": " << rv.witness);
    CHECK(rv.ok);
    CHECK_FALSE(rv.involutive);
  }
  const auto deg = set_data(corpus_spec("degenerate_set_map"));
  CHECK_FALSE(validate(deg->first).nondegenerate);
}

TEST_CASE("a table that is not self-distributive is rejected with a witness") {
  Rack r;
  r.n = 3;
  r.op = {{0, 2, 1}, {2, 1, 0}, {0, 1, 2}};
  const SetValidation v = validate(r, Cocycle::constant(3, Scalar(1L)));
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("a non-constant cocycle must satisfy the cocycle condition") {
  Rack r = *rack_data(corpus_spec("fk3"));
  Cocycle q = Cocycle::constant(3, Scalar(-1L));
  q.q[0][1] = Scalar(2L);
  CHECK_FALSE(validate(r, q).ok);
}

TEST_CASE("rigidity coincides with non-degeneracy for all braided maps on two points") {
  int braided = 0;
  for (int code = 0; code < 256; ++code) {
    SetSolution s;
    s.n = 2;
    s.s.assign(2, std::vector<std::pair<int, int>>(2));
    for (int cell = 0; cell < 4; ++cell) {
      const int val = (code >> (2 * cell)) & 3;
      s.s[cell / 2][cell % 2] = {val / 2, val % 2};
    }
    const BraidingTensor c = BraidingTensor::from_set_solution(s, Cocycle::constant(2, Scalar(1L)));
    if (!check_braid_equation(c).ok) continue;
    ++braided;
    INFO("code " << code);
    CHECK(check_rigid(c).ok == validate(s).nondegenerate);
  }
  CHECK(braided > 0);
}

TEST_CASE("closed forms for r(D, t) and J agree with the r-form") {
  for (const char* name : {"fk3", "nondiag2x2", "involutive3"}) {
    const auto v = closed_forms_agree(corpus_spec(name));
    INFO(name << ": " << v.detail);
    CHECK(v.ok);
  }
}

TEST_CASE("constant cocycle on a rack gives r(D, t) = identity for E3") {
  const auto spec = corpus_spec("fk3");
  const auto data = set_data(spec);
  const GradedNichols b(build_braiding(spec), 6);
  const TopResult t = detect_top(b, parse_index_word("x1x2x3x2", 3));
  REQUIRE(t.status == TopResult::Status::Found);
  CHECK(closed_form_rD(data->first, data->second, *t.wgf) == Matrix::identity(3));
  const auto alpha = alpha_coefficients(*t.wgf);
  CHECK(alpha.size() == 12);
}
