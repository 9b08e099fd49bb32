#include "doctest.h"
#include "properties.hpp"
#include "qfa/ncpoly.hpp"

using namespace qfa;

TEST_CASE("deglex order") {
  CHECK(DeglexLess{}(Word("\x03"), Word("\x00\x00", 2)));
  CHECK(DeglexLess{}(Word("\x00\x01", 2), Word("\x01\x00", 2)));
  CHECK(order_compare(Word("\x01"), Word("\x01")) == 0);
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"a^2 - b^2", "ae^2 - af^2 + bdf", "(2*z4)*bc - ad", "1/2*abcd + 3"}) {
    const int n = std::string(text).find('e') != std::string::npos ? 3 : 2;
    const NCPoly p = parse_ncpoly(text, n);
    CHECK(parse_ncpoly(p.to_string(n), n) == p);
  }
  CHECK(parse_ncpoly("t[1,1]t[2,2] - t[1,2]t[2,1]", 2) == parse_ncpoly("ad - bc", 2));
}

TEST_CASE("noncommutative product and cancellation") {
  const NCPoly a = parse_ncpoly("a + b", 2);
  const NCPoly p = a * a;
  CHECK(p == parse_ncpoly("a^2 + ab + ba + b^2", 2));
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + NCPoly(Scalar(1L))).is_homogeneous());
}

TEST_CASE("coproduct of a generator and counit") {
  const TensorPoly t = coproduct(NCPoly::gen(0, 1, 2), 2);
  CHECK(t.terms().size() == 2);
  CHECK(counit(parse_ncpoly("ad - bc + 2*b", 2), 2) == Scalar(1L));
  CHECK(counit_word(Word("\x00\x03", 2), 2) == Scalar(1L));
}

TEST_CASE("substitution is an algebra map") {
  std::vector<NCPoly> images = {parse_ncpoly("d", 2), parse_ncpoly("2*b", 2), parse_ncpoly("c", 2), parse_ncpoly("a", 2)};
  const NCPoly p = parse_ncpoly("ab - ba", 2);
  CHECK(p.substitute(images) == parse_ncpoly("2*db - 2*bd", 2));
}

TEST_CASE("coassociativity and multiplicativity of Delta") {
  for (int n : {2, 3}) {
    const auto v = testing::coproduct_laws(n, 77 + n, 25);
    INFO(v.detail);
    CHECK(v.ok);
  }
}
