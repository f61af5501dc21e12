#ifndef PETERSON_ERRORS_HPP
#define PETERSON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace peterson {

// A precondition on mathematical input was violated (j not in A, index out
// of range, rank mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact polynomial division was requested but no exact quotient exists.
class InexactDivision : public std::runtime_error {
 public:
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

// A localized class fed to the triangular solve does not lie in the span of
// the localized basis classes.  Products of genuine classes always do, so
// this signals an upstream bug rather than a mathematical phenomenon.
class NotInSpan : public std::runtime_error {
 public:
  explicit NotInSpan(const std::string& what) : std::runtime_error(what) {}
};

// A basis expansion claimed to be stable (keys avoiding the top index) has a
// key containing it, so it cannot be restricted to the smaller rank.
class NotStable : public std::runtime_error {
 public:
  explicit NotStable(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap (enumeration rank, Buchberger pair count or
// degree bound) was exceeded.  Callers report this as "undetermined" rather
// than as a negative result.
class ResourceCapExceeded : public std::runtime_error {
 public:
  explicit ResourceCapExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// Text input (subset, permutation, polynomial, monomial expression) failed
// to parse.  `position` is a 0-based offset into the input string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace peterson

#endif  // PETERSON_ERRORS_HPP
