#pragma once

#include <stdexcept>
#include <string>

namespace bsdh {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: bad type strings, letters out of
// range, matrices violating the entry constraints, unparseable text.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed a configured bound (rank cap, word cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Classification was requested for a word that is not a reduced
// expression of its element.
class NotReducedError : public Error {
 public:
  NotReducedError(int element_length, int word_length)
      : Error("word is not reduced (length " + std::to_string(element_length) +
              " != " + std::to_string(word_length) + ")"),
        element_length_(element_length),
        word_length_(word_length) {}

  int element_length() const { return element_length_; }
  int word_length() const { return word_length_; }

 private:
  int element_length_;
  int word_length_;
};

}  // namespace bsdh
