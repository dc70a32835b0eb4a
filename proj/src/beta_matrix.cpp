#include "bsdh/beta_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bsdh/errors.hpp"

namespace bsdh {

namespace {

bool admissible_entry(int v) {
  return v == 2 || v == 0 || v == -1 || v == -2 || v == -3;
}

}  // namespace

BetaMatrix::BetaMatrix(int size, std::vector<int> entries, Provenance prov,
                       std::optional<Word> source)
    : size_(size), entries_(std::move(entries)), prov_(prov),
      source_(std::move(source)) {
  if (size_ < 0) {
    throw InvalidInput("matrix size must be non-negative");
  }
  if (entries_.size() != static_cast<std::size_t>(size_) * size_) {
    throw InvalidInput("matrix has " + std::to_string(entries_.size()) +
                       " entries, expected " + std::to_string(size_) + "x" +
                       std::to_string(size_));
  }
  for (int i = 1; i <= size_; ++i) {
    for (int j = 1; j <= size_; ++j) {
      int v = entries_[static_cast<std::size_t>(i - 1) * size_ + (j - 1)];
      if (j <= i) {
        if (v != 0) {
          throw InvalidInput("entry (" + std::to_string(i) + ", " +
                             std::to_string(j) +
                             ") must be zero on and below the diagonal, got " +
                             std::to_string(v));
        }
      } else if (!admissible_entry(v)) {
        throw InvalidInput("entry (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") has inadmissible value " +
                           std::to_string(v) + "; allowed: 2, 0, -1, -2, -3");
      }
    }
  }
  if (source_ && source_->size() != size_) {
    throw InvalidInput("source word length does not match matrix size");
  }
}

int BetaMatrix::at(int i, int j) const {
  if (i < 1 || i > size_ || j < 1 || j > size_) {
    throw InvalidInput("matrix index (" + std::to_string(i) + ", " +
                       std::to_string(j) + ") out of range for size " +
                       std::to_string(size_));
  }
  return entries_[static_cast<std::size_t>(i - 1) * size_ + (j - 1)];
}

BetaMatrix beta_matrix(const Word& w) {
  return beta_matrix(w, cartan_matrix(w.type));
}

BetaMatrix beta_matrix(const Word& w, const CartanMatrix& c) {
  int r = w.size();
  std::vector<int> entries(static_cast<std::size_t>(r) * r, 0);
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      entries[static_cast<std::size_t>(i - 1) * r + (j - 1)] =
          c.at(w.letters[static_cast<std::size_t>(i - 1)],
               w.letters[static_cast<std::size_t>(j - 1)]);
    }
  }
  return BetaMatrix(r, std::move(entries), BetaMatrix::Provenance::WordDerived, w);
}

BetaMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  auto row_end = [](char ch) { return ch == ';' || ch == '\n'; };
  while (pos <= text.size()) {
    std::size_t stop = pos;
    while (stop < text.size() && !row_end(text[stop])) ++stop;
    std::string_view line = text.substr(pos, stop - pos);

    std::vector<int> row;
    std::size_t k = 0;
    auto is_sep = [](char ch) {
      return ch == ',' || std::isspace(static_cast<unsigned char>(ch)) != 0;
    };
    while (k < line.size()) {
      while (k < line.size() && is_sep(line[k])) ++k;
      std::size_t start = k;
      while (k < line.size() && !is_sep(line[k])) ++k;
      if (k == start) break;
      std::string_view token = line.substr(start, k - start);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidInput("bad matrix entry '" + std::string(token) + "'");
      }
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
    if (stop >= text.size()) break;
    pos = stop + 1;
  }

  int n = static_cast<int>(rows.size());
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw InvalidInput("row " + std::to_string(i + 1) + " has " +
                         std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                         " entries, expected " + std::to_string(n) +
                         " (matrix must be square)");
    }
    entries.insert(entries.end(), rows[static_cast<std::size_t>(i)].begin(),
                   rows[static_cast<std::size_t>(i)].end());
  }
  return BetaMatrix(n, std::move(entries), BetaMatrix::Provenance::Raw);
}

std::string render_matrix(const BetaMatrix& m) {
  std::string out;
  for (int i = 1; i <= m.size(); ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(m.at(i, j));
    }
  }
  return out;
}

std::string render_matrix_pretty(const BetaMatrix& m) {
  int n = m.size();
  std::size_t width = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      width = std::max(width, std::to_string(m.at(i, j)).size());
    }
  }
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += '\n';
    out += '[';
    for (int j = 1; j <= n; ++j) {
      std::string cell = std::to_string(m.at(i, j));
      out += ' ';
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out += " ]";
  }
  return out;
}

EtaProfile eta_profile(const BetaMatrix& m, int row) {
  if (row < 1 || row > m.size()) {
    throw InvalidInput("row " + std::to_string(row) +
                       " out of range for size " + std::to_string(m.size()));
  }
  EtaProfile p;
  p.row = row;
  for (int j = row + 1; j <= m.size(); ++j) {
    int v = m.at(row, j);
    if (v > 0) p.eta_plus.push_back(j);
    if (v < 0) p.eta_minus.push_back(j);
  }
  if (!p.eta_plus.empty()) {
    p.s = p.eta_plus.front();
    for (int j : p.eta_minus) {
      if (j < *p.s) p.window_minus.push_back(j);
    }
  }
  return p;
}

}  // namespace bsdh
