#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsdh/weyl.hpp"

namespace bsdh {

// Strictly upper-triangular integer matrix of pairings
//   b[i][j] = <alpha_{w_j}, alpha_{w_i}^vee>   for j > i,
// attached to a word w, or supplied directly ("raw") without a word.
// Entries are restricted to the values a Cartan pairing can take:
// 2, 0, -1, -2, -3.
class BetaMatrix {
 public:
  enum class Provenance { WordDerived, Raw };

  // `entries` is the full size x size row-major matrix; everything on or
  // below the diagonal must be zero.
  BetaMatrix(int size, std::vector<int> entries, Provenance prov,
             std::optional<Word> source = std::nullopt);

  int size() const { return size_; }

  // 1-based. Zero on and below the diagonal.
  int at(int i, int j) const;

  Provenance provenance() const { return prov_; }
  const std::optional<Word>& source() const { return source_; }

  friend bool operator==(const BetaMatrix& a, const BetaMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  int size_;
  std::vector<int> entries_;
  Provenance prov_;
  std::optional<Word> source_;
};

// Pairing matrix of a word: entry (i, j) is a(w_i, w_j) for j > i.
BetaMatrix beta_matrix(const Word& w);
BetaMatrix beta_matrix(const Word& w, const CartanMatrix& c);

// Parses a raw matrix: rows separated by ';' or newlines, entries by
// whitespace and/or commas. The matrix must be square with zeros on and
// below the diagonal and admissible values above it.
BetaMatrix parse_matrix(std::string_view text);

// Plain machine format: one row per line, entries space-separated.
// parse_matrix(render_matrix(m)) reproduces m.
std::string render_matrix(const BetaMatrix& m);

// Human-oriented format: bracketed rows with right-aligned columns.
std::string render_matrix_pretty(const BetaMatrix& m);

// The sign data of one row that the Fano conditions are phrased in:
// positions of positive and negative entries to the right of the
// diagonal, the first positive position s (if any), and the negative
// positions strictly between the diagonal and s.
struct EtaProfile {
  int row = 0;
  std::vector<int> eta_plus;
  std::vector<int> eta_minus;
  std::optional<int> s;
  std::vector<int> window_minus;
};

EtaProfile eta_profile(const BetaMatrix& m, int row);

}  // namespace bsdh
