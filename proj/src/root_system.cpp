#include "bsdh/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace bsdh {

namespace {

bool valid_rank(Family f, int rank) {
  switch (f) {
    case Family::A:
      return rank >= 1;
    case Family::B:
    case Family::C:
      return rank >= 2;
    case Family::D:
      return rank >= 4;
    case Family::E:
      return rank == 6 || rank == 7 || rank == 8;
    case Family::F:
      return rank == 4;
    case Family::G:
      return rank == 2;
  }
  return false;
}

std::string rank_constraint(Family f) {
  switch (f) {
    case Family::A:
      return "rank >= 1";
    case Family::B:
    case Family::C:
      return "rank >= 2";
    case Family::D:
      return "rank >= 4";
    case Family::E:
      return "rank in {6, 7, 8}";
    case Family::F:
      return "rank = 4";
    case Family::G:
      return "rank = 2";
  }
  return "";
}

void require_enumeration_rank(const SimpleType& t) {
  if (t.rank > kMaxEnumerationRank) {
    throw CapacityError("rank " + std::to_string(t.rank) +
                        " exceeds the enumeration cap of " +
                        std::to_string(kMaxEnumerationRank));
  }
}

}  // namespace

SimpleType make_simple_type(Family family, int rank) {
  if (!valid_rank(family, rank)) {
    throw InvalidInput("invalid type " + std::string(1, static_cast<char>(family)) +
                       std::to_string(rank) + " (" + rank_constraint(family) + ")");
  }
  return SimpleType{family, rank};
}

SimpleType parse_simple_type(std::string_view text) {
  if (text.size() < 2) {
    throw InvalidInput("cannot parse type '" + std::string(text) +
                       "': expected a family letter followed by a rank");
  }
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G') {
    throw InvalidInput("unknown family letter '" + std::string(1, text[0]) +
                       "' in type '" + std::string(text) + "'");
  }
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || rank <= 0) {
    throw InvalidInput("cannot parse rank in type '" + std::string(text) + "'");
  }
  return make_simple_type(static_cast<Family>(f), rank);
}

std::string to_string(const SimpleType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

std::size_t CartanMatrix::index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw InvalidInput("Cartan matrix index (" + std::to_string(i) + ", " +
                       std::to_string(j) + ") out of range for rank " +
                       std::to_string(n_));
  }
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(j - 1);
}

CartanMatrix::CartanMatrix(int rank, std::vector<int> entries)
    : n_(rank), a_(std::move(entries)) {
  if (n_ < 1 || a_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    throw InvalidInput("Cartan matrix must be square of positive rank");
  }
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      int v = at(i, j);
      if (i == j && v != 2) {
        throw InvalidInput("Cartan matrix diagonal entry at (" + std::to_string(i) +
                           ", " + std::to_string(i) + ") must be 2");
      }
      if (i != j) {
        if (v > 0) {
          throw InvalidInput("Cartan matrix off-diagonal entry at (" +
                             std::to_string(i) + ", " + std::to_string(j) +
                             ") must be nonpositive");
        }
        if ((v == 0) != (at(j, i) == 0)) {
          throw InvalidInput("Cartan matrix zero pattern must be symmetric at (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        int prod = v * at(j, i);
        if (prod > 3) {
          throw InvalidInput("Cartan matrix bond at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") has product " +
                             std::to_string(prod) + " > 3");
        }
      }
    }
  }
}

bool Root::is_positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

bool Root::is_negative() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c > 0) return false;
    if (c < 0) nonzero = true;
  }
  return nonzero;
}

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

Root simple_root(int rank, int i) {
  if (i < 1 || i > rank) {
    throw InvalidInput("simple root index " + std::to_string(i) +
                       " out of range [1, " + std::to_string(rank) + "]");
  }
  Root r{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  r.coeffs[static_cast<std::size_t>(i - 1)] = 1;
  return r;
}

CartanMatrix cartan_matrix(const SimpleType& t) {
  make_simple_type(t.family, t.rank);
  int n = t.rank;
  std::vector<int> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto set = [&](int i, int j, int v) {
    a[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
      static_cast<std::size_t>(j - 1)] = v;
  };
  auto edge = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  for (int i = 1; i <= n; ++i) set(i, i, 2);

  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      // alpha_n is short; its coroot row carries the -2.
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      set(n, n - 1, -2);
      break;
    case Family::C:
      // alpha_n is long; the short neighbour's coroot row carries the -2.
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      set(n - 1, n, -2);
      break;
    case Family::D:
      for (int i = 1; i + 1 <= n - 2; ++i) edge(i, i + 1);
      edge(n - 2, n - 1);
      edge(n - 2, n);
      break;
    case Family::E:
      edge(1, 3);
      edge(3, 4);
      edge(4, 5);
      edge(5, 6);
      edge(2, 4);
      if (n >= 7) edge(6, 7);
      if (n == 8) edge(7, 8);
      break;
    case Family::F:
      edge(1, 2);
      edge(2, 3);
      edge(3, 4);
      set(3, 2, -2);
      break;
    case Family::G:
      set(1, 2, -1);
      set(2, 1, -3);
      break;
  }
  return CartanMatrix(n, std::move(a));
}

int coroot_pairing(const CartanMatrix& c, int i, const Root& v) {
  if (v.coeffs.size() != static_cast<std::size_t>(c.rank())) {
    throw InvalidInput("root has " + std::to_string(v.coeffs.size()) +
                       " coordinates, expected " + std::to_string(c.rank()));
  }
  int sum = 0;
  for (int j = 1; j <= c.rank(); ++j) {
    sum += v.coeffs[static_cast<std::size_t>(j - 1)] * c.at(i, j);
  }
  return sum;
}

Root reflect(const CartanMatrix& c, int i, const Root& v) {
  if (i < 1 || i > c.rank()) {
    throw InvalidInput("reflection index " + std::to_string(i) +
                       " out of range [1, " + std::to_string(c.rank()) + "]");
  }
  int pairing = coroot_pairing(c, i, v);
  Root out = v;
  out.coeffs[static_cast<std::size_t>(i - 1)] -= pairing;
  return out;
}

std::vector<Root> positive_roots(const SimpleType& t) {
  make_simple_type(t.family, t.rank);
  require_enumeration_rank(t);
  CartanMatrix c = cartan_matrix(t);
  std::set<Root> seen;
  std::vector<Root> worklist;
  for (int i = 1; i <= t.rank; ++i) {
    Root r = simple_root(t.rank, i);
    seen.insert(r);
    worklist.push_back(std::move(r));
  }
  while (!worklist.empty()) {
    Root v = std::move(worklist.back());
    worklist.pop_back();
    for (int i = 1; i <= t.rank; ++i) {
      Root w = reflect(c, i, v);
      if (seen.insert(w).second) worklist.push_back(std::move(w));
    }
  }
  std::vector<Root> positives;
  for (const Root& r : seen) {
    if (r.is_positive()) positives.push_back(r);
  }
  return positives;
}

}  // namespace bsdh
