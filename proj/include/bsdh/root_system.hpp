#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bsdh/errors.hpp"

namespace bsdh {

// Families of the finite irreducible root systems.
enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

// Enumeration-based operations (positive roots, word enumeration, lengths)
// refuse ranks above this bound.
inline constexpr int kMaxEnumerationRank = 16;

// A simple type such as A4, B3 or G2: family letter plus rank.
//
// Admissible ranks: A >= 1, B >= 2, C >= 2, D >= 4, E in {6,7,8}, F = 4,
// G = 2.
struct SimpleType {
  Family family;
  int rank;

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator<(const SimpleType& a, const SimpleType& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

// Validates the (family, rank) combination.
SimpleType make_simple_type(Family family, int rank);

// Parses strings like "A4", "b3", "G2" (case-insensitive family letter,
// decimal rank).
SimpleType parse_simple_type(std::string_view text);

std::string to_string(const SimpleType& t);

// Integer Cartan matrix with the convention
//
//   at(i, j) = <alpha_j, coroot(alpha_i)>
//
// so the row index carries the coroot. Indices are 1-based.
class CartanMatrix {
 public:
  CartanMatrix(int rank, std::vector<int> entries);

  int rank() const { return n_; }
  int at(int i, int j) const { return a_[index(i, j)]; }
  const std::vector<int>& entries() const { return a_; }

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<int> a_;  // row-major n x n
};

// A root written in coordinates over the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  // Nonzero with all coordinates >= 0.
  bool is_positive() const;
  // Nonzero with all coordinates <= 0.
  bool is_negative() const;
  bool is_zero() const;

  friend bool operator==(const Root& a, const Root& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator<(const Root& a, const Root& b) {
    return a.coeffs < b.coeffs;
  }
};

// The i-th simple root as a coordinate vector of the given rank.
Root simple_root(int rank, int i);

// Cartan matrix of the type under the standard numbering. The orientation
// of the asymmetric bonds is fixed by the B and G fixtures: in B_n the row
// of the short root alpha_n carries the -2 (at(n, n-1) = -2), and in G2
// at(2, 1) = -3.
CartanMatrix cartan_matrix(const SimpleType& t);

// <v, coroot(alpha_i)>, extended linearly from the simple-root pairing.
int coroot_pairing(const CartanMatrix& c, int i, const Root& v);

// Simple reflection s_i acting on the root lattice:
// s_i(v) = v - <v, coroot(alpha_i)> alpha_i.
Root reflect(const CartanMatrix& c, int i, const Root& v);

// All positive roots, sorted lexicographically by coordinates. Computed by
// closing the simple roots under the reflection action.
std::vector<Root> positive_roots(const SimpleType& t);

}  // namespace bsdh
