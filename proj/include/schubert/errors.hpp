#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Caller passed something outside an operation's domain (bad type/rank pair,
/// index out of range, malformed class syntax, foreign node id).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Golden data disagrees with what the library computes, or cannot be read.
class DataIntegrityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A search the library guarantees to succeed for a known configuration
/// came back empty.  Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

namespace detail {

inline int checked_add(int a, int b) {
  int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

inline int checked_sub(int a, int b) {
  int r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

inline int checked_mul(int a, int b) {
  int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

} // namespace detail

} // namespace schubert
