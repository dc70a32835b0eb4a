#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bsdh/root_system.hpp"

namespace bsdh {

// Default bound on how many words an enumeration may produce before it
// refuses with a capacity error.
inline constexpr std::size_t kDefaultWordCapacity = 1'000'000;

// A word in simple reflections. Letters are 1-based simple-root indices;
// the empty word denotes the identity. Reducedness is a property checked
// by is_reduced, not an invariant of the type.
struct Word {
  SimpleType type;
  std::vector<int> letters;

  Word(SimpleType t, std::vector<int> ls);

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.type == b.type && a.letters == b.letters;
  }
  friend bool operator<(const Word& a, const Word& b) {
    if (!(a.type == b.type)) return a.type < b.type;
    return a.letters < b.letters;
  }
};

// Parses "2,3,1,2" or "s2 s3 s1 s2". Separators are commas and/or
// whitespace; the "s" prefix is optional but must be used consistently.
// Empty input yields the empty word.
Word parse_word(const SimpleType& t, std::string_view text);

// Space-separated letters; empty string for the empty word.
std::string format_word(const Word& w);

// A Weyl group element stored by its integer action on the simple-root
// basis. Equality of elements is equality of these matrices.
class WeylElement {
 public:
  static WeylElement identity(const SimpleType& t);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // Coefficient of alpha_i in the image of alpha_j.
  int at(int i, int j) const;

  Root apply(const Root& v) const;
  Root image_of_simple(int j) const;

  // Right multiplication by the simple reflection s_i.
  WeylElement times_simple(int i, const CartanMatrix& c) const;

  bool is_identity() const;

  // Row-major action matrix; canonical key for equality and hashing.
  const std::vector<int>& action() const { return m_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.type_ == b.type_ && a.m_ == b.m_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (!(a.type_ == b.type_)) return a.type_ < b.type_;
    return a.m_ < b.m_;
  }

 private:
  WeylElement(SimpleType t, std::vector<int> m);

  SimpleType type_;
  std::vector<int> m_;
};

// Product s_{w_1} ... s_{w_r} of the word's reflections; the empty word
// gives the identity.
WeylElement element_of(const Word& w);

// Coxeter length: the number of positive roots sent to negative roots.
int length(const WeylElement& w);

// True iff the word is a reduced expression of its element.
bool is_reduced(const Word& w);

// Indices i with l(w s_i) < l(w), in increasing order.
std::vector<int> right_descents(const WeylElement& w);

// Every reduced expression of w, sorted lexicographically.
std::vector<Word> reduced_words(const WeylElement& w,
                                std::size_t max_words = kDefaultWordCapacity);

// Visits every reduced word of length <= max_len exactly once, in
// lexicographic order of letter sequences (the empty word first).
void for_each_reduced_word(const SimpleType& t, int max_len,
                           const std::function<void(const Word&)>& visit,
                           std::size_t max_words = kDefaultWordCapacity);

// Collecting variant of for_each_reduced_word.
std::vector<Word> all_reduced_words(const SimpleType& t, int max_len,
                                    std::size_t max_words = kDefaultWordCapacity);

// True iff the letters are pairwise distinct and the word is no longer
// than the rank.
bool is_coxeter_type(const Word& w);

}  // namespace bsdh
