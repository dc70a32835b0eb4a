#include <string>
#include <vector>

#include "doctest.h"

#include "bsdh/beta_matrix.hpp"
#include "bsdh/errors.hpp"
#include "fixtures.hpp"

using namespace bsdh;

namespace {

Word make_word(const char* type, std::vector<int> letters) {
  return Word(parse_simple_type(type), std::move(letters));
}

}  // namespace

TEST_SUITE("beta_matrix") {

TEST_CASE("word-derived entries are Cartan pairings of the letters") {
  BetaMatrix m = beta_matrix(make_word("A4", {2, 3, 1, 2}));
  CHECK(m.size() == 4);
  CHECK(m.provenance() == BetaMatrix::Provenance::WordDerived);
  REQUIRE(m.source().has_value());
  CHECK(m.source()->letters == std::vector<int>{2, 3, 1, 2});
  CHECK(m.at(1, 2) == -1);
  CHECK(m.at(1, 3) == -1);
  CHECK(m.at(1, 4) == 2);   // letters 2 and 2 repeat
  CHECK(m.at(2, 3) == 0);   // letters 3 and 1 commute
  CHECK(m.at(2, 4) == -1);
  CHECK(m.at(3, 4) == -1);
  // Everything on and below the diagonal is zero.
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= i; ++j) CHECK(m.at(i, j) == 0);
  }
}

TEST_CASE("word-derived fixtures for the asymmetric bonds") {
  CHECK(beta_matrix(make_word("B3", {3, 2})).at(1, 2) == -2);
  CHECK(beta_matrix(make_word("B3", {2, 3})).at(1, 2) == -1);
  CHECK(beta_matrix(make_word("G2", {2, 1})).at(1, 2) == -3);
  CHECK(beta_matrix(make_word("G2", {1, 2})).at(1, 2) == -1);
}

TEST_CASE("distant letters give the zero matrix") {
  BetaMatrix m = beta_matrix(make_word("A4", {1, 3}));
  CHECK(m.at(1, 2) == 0);
  CHECK(render_matrix(m) == "0 0\n0 0");
}

TEST_CASE("reducedness is not required to build the matrix") {
  BetaMatrix m = beta_matrix(make_word("A2", {1, 1}));
  CHECK(m.at(1, 2) == 2);
}

TEST_CASE("word-derived positivity happens exactly at letter repeats") {
  SimpleType b3 = parse_simple_type("B3");
  CartanMatrix c = cartan_matrix(b3);
  for (const Word& w : all_reduced_words(b3, 5)) {
    BetaMatrix m = beta_matrix(w, c);
    for (int i = 1; i <= m.size(); ++i) {
      for (int j = i + 1; j <= m.size(); ++j) {
        bool repeat = w.letters[static_cast<std::size_t>(i - 1)] ==
                      w.letters[static_cast<std::size_t>(j - 1)];
        CHECK((m.at(i, j) > 0) == repeat);
        CHECK((m.at(i, j) == 2) == repeat);
      }
    }
  }
}

TEST_CASE("parsing accepts the documented grammar") {
  BetaMatrix m = parse_matrix("0 -1; 0 0");
  CHECK(m.size() == 2);
  CHECK(m.at(1, 2) == -1);
  CHECK(m.provenance() == BetaMatrix::Provenance::Raw);
  CHECK_FALSE(m.source().has_value());

  CHECK(parse_matrix("0, -1\n0, 0").at(1, 2) == -1);
  CHECK(parse_matrix("0 -1 \n 0 0 ").size() == 2);
  CHECK(parse_matrix(fixtures::kSample1).size() == 5);
  CHECK(parse_matrix(fixtures::kSample3).size() == 6);
  CHECK(parse_matrix(fixtures::kSample5).at(3, 5) == -3);
}

TEST_CASE("parsing rejects invalid matrices with located diagnostics") {
  CHECK_THROWS_WITH_AS(parse_matrix("0 1; 0 0"),
                       doctest::Contains("(1, 2)"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_matrix("0 -1; 1 0"),
                       doctest::Contains("(2, 1)"), InvalidInput);
  CHECK_THROWS_AS(parse_matrix("0 -4; 0 0"), InvalidInput);   // entry too negative
  CHECK_THROWS_AS(parse_matrix("0 3; 0 0"), InvalidInput);    // positive must be 2
  CHECK_THROWS_AS(parse_matrix("2 0; 0 2"), InvalidInput);    // nonzero diagonal
  CHECK_THROWS_AS(parse_matrix("0 -1 0; 0 0 -1"), InvalidInput);  // not square
  CHECK_THROWS_AS(parse_matrix("0 -1; 0"), InvalidInput);         // ragged
  CHECK_THROWS_AS(parse_matrix("0 x; 0 0"), InvalidInput);        // not a number
}

TEST_CASE("rendering round-trips through parsing") {
  for (const char* text :
       {fixtures::kSample1, fixtures::kSample2, fixtures::kSample3,
        fixtures::kSample4, fixtures::kSample5}) {
    BetaMatrix m = parse_matrix(text);
    CHECK(parse_matrix(render_matrix(m)) == m);
  }
  BetaMatrix word_m = beta_matrix(make_word("A4", {2, 3, 1, 2}));
  CHECK(parse_matrix(render_matrix(word_m)) == word_m);
  CHECK(render_matrix(word_m) == "0 -1 -1 2\n0 0 0 -1\n0 0 0 -1\n0 0 0 0");
}

TEST_CASE("pretty rendering aligns columns in a bracketed layout") {
  BetaMatrix m = beta_matrix(make_word("A4", {2, 3, 1, 2}));
  CHECK(render_matrix_pretty(m) ==
        "[  0 -1 -1  2 ]\n"
        "[  0  0  0 -1 ]\n"
        "[  0  0  0 -1 ]\n"
        "[  0  0  0  0 ]");
}

TEST_CASE("eta profiles: fixtures") {
  BetaMatrix m = beta_matrix(make_word("A4", {2, 3, 1, 2}));
  EtaProfile p1 = eta_profile(m, 1);
  CHECK(p1.row == 1);
  CHECK(p1.eta_plus == std::vector<int>{4});
  CHECK(p1.eta_minus == std::vector<int>{2, 3});
  REQUIRE(p1.s.has_value());
  CHECK(*p1.s == 4);
  CHECK(p1.window_minus == std::vector<int>{2, 3});

  EtaProfile p4 = eta_profile(m, 4);
  CHECK(p4.eta_plus.empty());
  CHECK(p4.eta_minus.empty());
  CHECK_FALSE(p4.s.has_value());
  CHECK(p4.window_minus.empty());

  // First positive column caps the window even when later negatives exist.
  BetaMatrix s1 = parse_matrix(fixtures::kSample1);
  EtaProfile q2 = eta_profile(s1, 2);
  CHECK(q2.eta_plus == std::vector<int>{3, 5});
  CHECK(q2.eta_minus == std::vector<int>{4});
  REQUIRE(q2.s.has_value());
  CHECK(*q2.s == 3);
  CHECK(q2.window_minus.empty());

  BetaMatrix s5 = parse_matrix(fixtures::kSample5);
  EtaProfile r2 = eta_profile(s5, 2);
  CHECK(r2.eta_plus.empty());
  CHECK(r2.eta_minus == std::vector<int>{3, 5});
  CHECK_FALSE(r2.s.has_value());
}

TEST_CASE("eta profile invariants on every sample row") {
  for (const char* text :
       {fixtures::kSample1, fixtures::kSample2, fixtures::kSample3,
        fixtures::kSample4, fixtures::kSample5}) {
    BetaMatrix m = parse_matrix(text);
    for (int i = 1; i <= m.size(); ++i) {
      EtaProfile p = eta_profile(m, i);
      CHECK(p.s.has_value() == !p.eta_plus.empty());
      if (p.s) {
        CHECK(*p.s == p.eta_plus.front());
        for (int j : p.window_minus) {
          CHECK(j < *p.s);
          CHECK(m.at(i, j) < 0);
        }
      } else {
        CHECK(p.window_minus.empty());
      }
    }
  }
}

TEST_CASE("window sums of reduced words are strictly negative") {
  // Whenever a row of a reduced word's matrix has a repeat column s, the
  // window before it must sum below zero.
  for (const char* name : {"A3", "B3", "G2"}) {
    SimpleType t = parse_simple_type(name);
    CartanMatrix c = cartan_matrix(t);
    int bound = t.family == Family::G ? 6 : 8;
    for (const Word& w : all_reduced_words(t, bound)) {
      BetaMatrix m = beta_matrix(w, c);
      for (int i = 1; i <= m.size(); ++i) {
        EtaProfile p = eta_profile(m, i);
        if (!p.s) continue;
        int sum = 0;
        for (int j = i + 1; j < *p.s; ++j) sum += m.at(i, j);
        CHECK(sum < 0);
      }
    }
  }
}

TEST_CASE("out-of-range accesses are rejected") {
  BetaMatrix m = parse_matrix("0 -1; 0 0");
  CHECK_THROWS_AS(m.at(0, 1), InvalidInput);
  CHECK_THROWS_AS(m.at(1, 3), InvalidInput);
  CHECK_THROWS_AS(eta_profile(m, 0), InvalidInput);
  CHECK_THROWS_AS(eta_profile(m, 3), InvalidInput);
}

TEST_CASE("empty input parses to the empty matrix") {
  BetaMatrix m = parse_matrix("");
  CHECK(m.size() == 0);
  CHECK(render_matrix(m).empty());
}

}  // TEST_SUITE
