#include "bsdh/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

#include "bsdh/errors.hpp"

namespace bsdh {

namespace {

void require_enumeration_rank(const SimpleType& t) {
  if (t.rank > kMaxEnumerationRank) {
    throw CapacityError("rank " + std::to_string(t.rank) +
                        " exceeds enumeration cap " +
                        std::to_string(kMaxEnumerationRank));
  }
}

int parse_letter(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InvalidInput("bad word letter '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Word::Word(SimpleType t, std::vector<int> ls) : type(t), letters(std::move(ls)) {
  for (int letter : letters) {
    if (letter < 1 || letter > type.rank) {
      throw InvalidInput("word letter " + std::to_string(letter) +
                         " out of range 1.." + std::to_string(type.rank));
    }
  }
}

Word parse_word(const SimpleType& t, std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  auto is_sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos])) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  if (tokens.empty()) return Word(t, {});

  // The "s" prefix is all-or-nothing across the word.
  bool prefixed = tokens.front().size() > 1 &&
                  (tokens.front().front() == 's' || tokens.front().front() == 'S');
  std::vector<int> letters;
  letters.reserve(tokens.size());
  for (std::string_view token : tokens) {
    bool has_prefix = token.size() > 1 && (token.front() == 's' || token.front() == 'S');
    if (has_prefix != prefixed) {
      throw InvalidInput("mixed word notation in '" + std::string(text) +
                         "': use either \"2,3,1\" or \"s2 s3 s1\" throughout");
    }
    letters.push_back(parse_letter(has_prefix ? token.substr(1) : token));
  }
  return Word(t, std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(w.letters[k]);
  }
  return out;
}

WeylElement::WeylElement(SimpleType t, std::vector<int> m)
    : type_(t), m_(std::move(m)) {}

WeylElement WeylElement::identity(const SimpleType& t) {
  int n = t.rank;
  std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return WeylElement(t, std::move(m));
}

int WeylElement::at(int i, int j) const {
  int n = rank();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw InvalidInput("action index (" + std::to_string(i) + ", " +
                       std::to_string(j) + ") out of range for rank " +
                       std::to_string(n));
  }
  return m_[static_cast<std::size_t>(i - 1) * n + (j - 1)];
}

Root WeylElement::apply(const Root& v) const {
  int n = rank();
  if (static_cast<int>(v.coeffs.size()) != n) {
    throw InvalidInput("root has " + std::to_string(v.coeffs.size()) +
                       " coefficients, expected " + std::to_string(n));
  }
  Root out;
  out.coeffs.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    long long acc = 0;
    for (int j = 0; j < n; ++j) {
      acc += static_cast<long long>(m_[static_cast<std::size_t>(i) * n + j]) *
             v.coeffs[static_cast<std::size_t>(j)];
    }
    out.coeffs[static_cast<std::size_t>(i)] = static_cast<int>(acc);
  }
  return out;
}

Root WeylElement::image_of_simple(int j) const {
  int n = rank();
  if (j < 1 || j > n) {
    throw InvalidInput("simple-root index " + std::to_string(j) +
                       " out of range 1.." + std::to_string(n));
  }
  Root out;
  out.coeffs.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    out.coeffs[static_cast<std::size_t>(i)] =
        m_[static_cast<std::size_t>(i) * n + (j - 1)];
  }
  return out;
}

WeylElement WeylElement::times_simple(int i, const CartanMatrix& c) const {
  int n = rank();
  if (c.rank() != n) {
    throw InvalidInput("Cartan matrix rank mismatch");
  }
  if (i < 1 || i > n) {
    throw InvalidInput("simple-root index " + std::to_string(i) +
                       " out of range 1.." + std::to_string(n));
  }
  // (w s_i)(alpha_j) = w(alpha_j) - <alpha_j, alpha_i^vee> w(alpha_i):
  // column j picks up -a(i, j) times the original column i.
  std::vector<int> m = m_;
  for (int row = 0; row < n; ++row) {
    int wi = m_[static_cast<std::size_t>(row) * n + (i - 1)];
    if (wi == 0) continue;
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(row) * n + j] -= c.at(i, j + 1) * wi;
    }
  }
  return WeylElement(type_, std::move(m));
}

bool WeylElement::is_identity() const {
  int n = rank();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m_[static_cast<std::size_t>(i) * n + j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

WeylElement element_of(const Word& w) {
  CartanMatrix c = cartan_matrix(w.type);
  WeylElement e = WeylElement::identity(w.type);
  for (int letter : w.letters) e = e.times_simple(letter, c);
  return e;
}

int length(const WeylElement& w) {
  int count = 0;
  for (const Root& r : positive_roots(w.type())) {
    if (w.apply(r).is_negative()) ++count;
  }
  return count;
}

bool is_reduced(const Word& w) {
  return length(element_of(w)) == w.size();
}

std::vector<int> right_descents(const WeylElement& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.rank(); ++i) {
    // l(w s_i) < l(w) exactly when w(alpha_i) is negative.
    if (w.image_of_simple(i).is_negative()) out.push_back(i);
  }
  return out;
}

namespace {

using LetterLists = std::vector<std::vector<int>>;

// Reduced words of `w`, via descent peeling: every reduced expression ends
// in a right descent, and stripping it leaves a reduced expression of w s_i.
const LetterLists& peel_words(const WeylElement& w, const CartanMatrix& c,
                              std::size_t max_words,
                              std::map<std::vector<int>, LetterLists>& memo) {
  auto found = memo.find(w.action());
  if (found != memo.end()) return found->second;

  LetterLists words;
  if (w.is_identity()) {
    words.push_back({});
  } else {
    for (int i : right_descents(w)) {
      const LetterLists& shorter = peel_words(w.times_simple(i, c), c, max_words, memo);
      for (const std::vector<int>& prefix : shorter) {
        std::vector<int> full = prefix;
        full.push_back(i);
        words.push_back(std::move(full));
        if (words.size() > max_words) {
          throw CapacityError("more than " + std::to_string(max_words) +
                              " reduced words; raise the cap to enumerate them");
        }
      }
    }
  }
  return memo.emplace(w.action(), std::move(words)).first->second;
}

}  // namespace

std::vector<Word> reduced_words(const WeylElement& w, std::size_t max_words) {
  require_enumeration_rank(w.type());
  CartanMatrix c = cartan_matrix(w.type());
  std::map<std::vector<int>, LetterLists> memo;
  LetterLists letter_lists = peel_words(w, c, max_words, memo);
  std::sort(letter_lists.begin(), letter_lists.end());
  std::vector<Word> out;
  out.reserve(letter_lists.size());
  for (std::vector<int>& letters : letter_lists) {
    out.emplace_back(w.type(), std::move(letters));
  }
  return out;
}

namespace {

void extend_reduced(const SimpleType& t, const CartanMatrix& c,
                    const WeylElement& w, std::vector<int>& letters, int max_len,
                    const std::function<void(const Word&)>& visit,
                    std::size_t max_words, std::size_t& seen) {
  if (++seen > max_words) {
    throw CapacityError("more than " + std::to_string(max_words) +
                        " reduced words; raise the cap to enumerate them");
  }
  visit(Word(t, letters));
  if (static_cast<int>(letters.size()) >= max_len) return;
  for (int i = 1; i <= t.rank; ++i) {
    // Appending s_i keeps the word reduced exactly when i is not a descent.
    if (w.image_of_simple(i).is_negative()) continue;
    letters.push_back(i);
    extend_reduced(t, c, w.times_simple(i, c), letters, max_len, visit, max_words, seen);
    letters.pop_back();
  }
}

}  // namespace

void for_each_reduced_word(const SimpleType& t, int max_len,
                           const std::function<void(const Word&)>& visit,
                           std::size_t max_words) {
  if (max_len < 0) {
    throw InvalidInput("maximum length must be non-negative, got " +
                       std::to_string(max_len));
  }
  require_enumeration_rank(t);
  CartanMatrix c = cartan_matrix(t);
  std::vector<int> letters;
  std::size_t seen = 0;
  extend_reduced(t, c, WeylElement::identity(t), letters, max_len, visit,
                 max_words, seen);
}

std::vector<Word> all_reduced_words(const SimpleType& t, int max_len,
                                    std::size_t max_words) {
  std::vector<Word> out;
  for_each_reduced_word(
      t, max_len, [&out](const Word& w) { out.push_back(w); }, max_words);
  return out;
}

bool is_coxeter_type(const Word& w) {
  if (w.size() > w.type.rank) return false;
  std::vector<int> sorted = w.letters;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace bsdh
