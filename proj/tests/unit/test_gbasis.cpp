#include "doctest.h"
#include "properties.hpp"
#include "qfa/gbasis.hpp"

using namespace qfa;

TEST_CASE("commutative polynomial ring in two letters") {
  // letters 0, 1 with ba - ab
  const NCPoly rel = NCPoly::monomial(Word{1, 0}) - NCPoly::monomial(Word{0, 1});
  const TruncatedGB G = complete({rel}, 6);
  CHECK(G.complete_through() == 6);
  for (int d = 0; d <= 6; ++d) CHECK(G.standard_words(d, 2).size() == static_cast<std::size_t>(d + 1));
  CHECK(G.reduces_to_zero(NCPoly::monomial(Word{1, 1, 0}) - NCPoly::monomial(Word{0, 1, 1})));
}

TEST_CASE("overlaps create new basis elements") {
  // ba -> ab/2 and a^2 -> 0: normal words are b^k and ab^k
  const NCPoly r1 = NCPoly::monomial(Word{0, 1}) - NCPoly::monomial(Word{1, 0}) * Scalar(2L);
  const NCPoly r2 = NCPoly::monomial(Word{0, 0});
  const TruncatedGB G = complete({r1, r2}, 4);
  CHECK(G.standard_words(3, 2).size() == 2);
  CHECK(G.normal_form(NCPoly::monomial(Word{1, 1, 0})).remainder == NCPoly::monomial(Word{0, 1, 1}) * Scalar(Rational(1, 4)));
  CHECK(G.reduces_to_zero(NCPoly::monomial(Word{1, 0, 0})));
}

TEST_CASE("reduction beyond the completed degree is flagged") {
  const NCPoly rel = NCPoly::monomial(Word{1, 0}) - NCPoly::monomial(Word{0, 1});
  const TruncatedGB G = complete({rel}, 2);
  const NormalForm nf = G.normal_form(NCPoly::monomial(Word{1, 1, 0}));
  CHECK_FALSE(nf.decisive);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  std::vector<NCPoly> rels;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) {
      rels.push_back(NCPoly::monomial(Word{static_cast<char>(i), static_cast<char>(j)}) -
                     NCPoly::monomial(Word{static_cast<char>(j), static_cast<char>(i)}) * Scalar(static_cast<long>(i + j + 1)));
    }
  }
  const TruncatedGB G = complete(rels, 8, 5);
  CHECK(G.budget_exhausted());
  CHECK(G.complete_through() < 8);
}

TEST_CASE("interreduce gives monic rows with distinct leads") {
  const auto rows = interreduce({NCPoly::monomial(Word{0, 1}) * Scalar(3L) + NCPoly::monomial(Word{1, 0}),
                                 NCPoly::monomial(Word{0, 1}) - NCPoly::monomial(Word{1, 0}),
                                 NCPoly::monomial(Word{0, 1}) * Scalar(2L) - NCPoly::monomial(Word{1, 0}) * Scalar(2L)});
  CHECK(rows.size() == 2);
  for (const auto& r : rows) CHECK(r.lead_coeff().is_one());
}

TEST_CASE("randomized reduction orders agree") {
  const NCPoly r1 = NCPoly::monomial(Word{0, 1}) - NCPoly::monomial(Word{1, 0}) * Scalar(2L);
  const NCPoly r2 = NCPoly::monomial(Word{1, 1}) - NCPoly::monomial(Word{0, 0});
  const TruncatedGB G = complete({r1, r2}, 5);
  const auto v = testing::gb_confluence(G, 2, 5, 5, 30);
  INFO(v.detail);
  CHECK(v.ok);
}
