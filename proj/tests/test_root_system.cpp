#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "bsdh/errors.hpp"
#include "bsdh/root_system.hpp"

using namespace bsdh;

namespace {

Root root_of(std::vector<int> coeffs) { return Root{std::move(coeffs)}; }

const std::vector<SimpleType> kSmallTypes = {
    make_simple_type(Family::A, 1), make_simple_type(Family::A, 2),
    make_simple_type(Family::A, 3), make_simple_type(Family::B, 2),
    make_simple_type(Family::B, 3), make_simple_type(Family::C, 3),
    make_simple_type(Family::D, 4), make_simple_type(Family::F, 4),
    make_simple_type(Family::G, 2), make_simple_type(Family::E, 6),
};

}  // namespace

TEST_SUITE("root_system") {

TEST_CASE("simple type parsing accepts the documented grammar") {
  CHECK(parse_simple_type("A4") == make_simple_type(Family::A, 4));
  CHECK(parse_simple_type("b3") == make_simple_type(Family::B, 3));
  CHECK(parse_simple_type("G2") == make_simple_type(Family::G, 2));
  CHECK(parse_simple_type("e8") == make_simple_type(Family::E, 8));
  CHECK(parse_simple_type("D12") == make_simple_type(Family::D, 12));
  CHECK(to_string(parse_simple_type("c5")) == "C5");
}

TEST_CASE("simple type parsing rejects bad families and ranks") {
  CHECK_THROWS_AS(parse_simple_type("H3"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("B1"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("C1"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("D3"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("E9"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("E5"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("F5"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("G3"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("A0"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("A"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("4"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type(""), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("A4x"), InvalidInput);
  CHECK_THROWS_AS(parse_simple_type("A-1"), InvalidInput);
}

TEST_CASE("Cartan matrices match the pinned fixtures") {
  CartanMatrix a2 = cartan_matrix(parse_simple_type("A2"));
  CHECK(a2.at(1, 1) == 2);
  CHECK(a2.at(1, 2) == -1);
  CHECK(a2.at(2, 1) == -1);
  CHECK(a2.at(2, 2) == 2);

  // In B3 the short-root row carries the -2.
  CartanMatrix b3 = cartan_matrix(parse_simple_type("B3"));
  CHECK(b3.at(3, 2) == -2);
  CHECK(b3.at(2, 3) == -1);
  CHECK(b3.at(1, 2) == -1);
  CHECK(b3.at(1, 3) == 0);

  // C3 is the transpose orientation of B3 on the double bond.
  CartanMatrix c3 = cartan_matrix(parse_simple_type("C3"));
  CHECK(c3.at(2, 3) == -2);
  CHECK(c3.at(3, 2) == -1);

  CartanMatrix g2 = cartan_matrix(parse_simple_type("G2"));
  CHECK(g2.at(1, 1) == 2);
  CHECK(g2.at(1, 2) == -1);
  CHECK(g2.at(2, 1) == -3);
  CHECK(g2.at(2, 2) == 2);

  CartanMatrix f4 = cartan_matrix(parse_simple_type("F4"));
  CHECK(f4.at(3, 2) == -2);
  CHECK(f4.at(2, 3) == -1);
  CHECK(f4.at(1, 2) == -1);
  CHECK(f4.at(3, 4) == -1);
}

TEST_CASE("Cartan matrix invariants hold for every supported type") {
  for (const SimpleType& t : kSmallTypes) {
    CAPTURE(to_string(t));
    CartanMatrix c = cartan_matrix(t);
    REQUIRE(c.rank() == t.rank);
    for (int i = 1; i <= c.rank(); ++i) {
      CHECK(c.at(i, i) == 2);
      for (int j = 1; j <= c.rank(); ++j) {
        if (i == j) continue;
        CHECK(c.at(i, j) <= 0);
        CHECK((c.at(i, j) == 0) == (c.at(j, i) == 0));
        int bond = c.at(i, j) * c.at(j, i);
        CHECK(bond >= 0);
        CHECK(bond <= 3);
      }
    }
  }
}

TEST_CASE("reflection fixtures") {
  SimpleType a2 = parse_simple_type("A2");
  CartanMatrix c = cartan_matrix(a2);
  CHECK(reflect(c, 1, simple_root(2, 1)) == root_of({-1, 0}));
  CHECK(reflect(c, 1, simple_root(2, 2)) == root_of({1, 1}));

  CartanMatrix g2 = cartan_matrix(parse_simple_type("G2"));
  CHECK(reflect(g2, 2, simple_root(2, 1)) == root_of({1, 3}));
  CHECK(reflect(g2, 1, simple_root(2, 2)) == root_of({1, 1}));
}

TEST_CASE("reflection is an involution on the root lattice") {
  for (const SimpleType& t : kSmallTypes) {
    CAPTURE(to_string(t));
    CartanMatrix c = cartan_matrix(t);
    std::vector<Root> probes = positive_roots(t);
    // A few mixed-sign lattice vectors too: the involution is linear-algebraic,
    // not specific to roots.
    Root mixed;
    mixed.coeffs.assign(static_cast<std::size_t>(t.rank), 0);
    for (int k = 0; k < t.rank; ++k) mixed.coeffs[static_cast<std::size_t>(k)] = (k % 2 == 0) ? 1 : -2;
    probes.push_back(mixed);
    for (int i = 1; i <= t.rank; ++i) {
      for (const Root& v : probes) {
        CHECK(reflect(c, i, reflect(c, i, v)) == v);
      }
    }
  }
}

TEST_CASE("positive roots: frozen sets for A2, B3, G2") {
  std::vector<Root> a2 = positive_roots(parse_simple_type("A2"));
  std::vector<Root> a2_expected = {root_of({0, 1}), root_of({1, 0}), root_of({1, 1})};
  CHECK(a2 == a2_expected);

  std::vector<Root> b3 = positive_roots(parse_simple_type("B3"));
  std::vector<Root> b3_expected = {
      root_of({0, 0, 1}), root_of({0, 1, 0}), root_of({0, 1, 1}),
      root_of({0, 1, 2}), root_of({1, 0, 0}), root_of({1, 1, 0}),
      root_of({1, 1, 1}), root_of({1, 1, 2}), root_of({1, 2, 2})};
  CHECK(b3 == b3_expected);

  std::vector<Root> g2 = positive_roots(parse_simple_type("G2"));
  std::vector<Root> g2_expected = {root_of({0, 1}), root_of({1, 0}),
                                   root_of({1, 1}), root_of({1, 2}),
                                   root_of({1, 3}), root_of({2, 3})};
  CHECK(g2 == g2_expected);
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots(parse_simple_type("A2")).size() == 3);
  CHECK(positive_roots(parse_simple_type("B3")).size() == 9);
  CHECK(positive_roots(parse_simple_type("C3")).size() == 9);
  CHECK(positive_roots(parse_simple_type("G2")).size() == 6);
  CHECK(positive_roots(parse_simple_type("D4")).size() == 12);
  CHECK(positive_roots(parse_simple_type("F4")).size() == 24);
  CHECK(positive_roots(parse_simple_type("E6")).size() == 36);
  // |R+| = n(n+1)/2 in type A.
  for (int n = 1; n <= 6; ++n) {
    SimpleType t = make_simple_type(Family::A, n);
    CHECK(static_cast<int>(positive_roots(t).size()) == n * (n + 1) / 2);
  }
}

TEST_CASE("sign dichotomy: reflections never produce mixed-sign roots") {
  for (const SimpleType& t : kSmallTypes) {
    CAPTURE(to_string(t));
    CartanMatrix c = cartan_matrix(t);
    for (const Root& v : positive_roots(t)) {
      for (int i = 1; i <= t.rank; ++i) {
        Root image = reflect(c, i, v);
        CHECK((image.is_positive() || image.is_negative()));
        CHECK_FALSE(image.is_zero());
      }
    }
  }
}

TEST_CASE("roots are distinct and genuinely positive") {
  for (const SimpleType& t : kSmallTypes) {
    std::vector<Root> roots = positive_roots(t);
    std::set<Root> dedup(roots.begin(), roots.end());
    CHECK(dedup.size() == roots.size());
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    for (const Root& r : roots) CHECK(r.is_positive());
    for (int i = 1; i <= t.rank; ++i) {
      CHECK(dedup.count(simple_root(t.rank, i)) == 1);
    }
  }
}

TEST_CASE("enumeration refuses ranks beyond the cap") {
  SimpleType big = make_simple_type(Family::A, kMaxEnumerationRank + 1);
  CHECK_THROWS_AS(positive_roots(big), CapacityError);
  // At the cap itself the type still works.
  SimpleType at_cap = make_simple_type(Family::A, kMaxEnumerationRank);
  CHECK(cartan_matrix(at_cap).rank() == kMaxEnumerationRank);
}

TEST_CASE("coroot pairing agrees with the Cartan matrix on simple roots") {
  for (const SimpleType& t : kSmallTypes) {
    CartanMatrix c = cartan_matrix(t);
    for (int i = 1; i <= t.rank; ++i) {
      for (int j = 1; j <= t.rank; ++j) {
        CHECK(coroot_pairing(c, i, simple_root(t.rank, j)) == c.at(i, j));
      }
    }
  }
}

TEST_CASE("malformed Cartan matrices are rejected") {
  CHECK_THROWS_AS(CartanMatrix(2, {1, -1, -1, 2}), InvalidInput);   // bad diagonal
  CHECK_THROWS_AS(CartanMatrix(2, {2, 1, -1, 2}), InvalidInput);    // positive off-diagonal
  CHECK_THROWS_AS(CartanMatrix(2, {2, 0, -1, 2}), InvalidInput);    // asymmetric zero
  CHECK_THROWS_AS(CartanMatrix(2, {2, -2, -2, 2}), InvalidInput);   // bond product 4
  CHECK_THROWS_AS(CartanMatrix(2, {2, -1, -1}), InvalidInput);      // wrong size
}

}  // TEST_SUITE
