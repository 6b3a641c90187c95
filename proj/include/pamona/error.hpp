#ifndef PAMONA_ERROR_HPP_
#define PAMONA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pamona {

// Base class of everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// validate(): the first failing triple in row-major scan order.
struct NotAssociative : Error {
  NotAssociative(int i, int j, int k)
      : Error("not associative: (x" + std::to_string(i) + " x"
              + std::to_string(j) + ") x" + std::to_string(k) + " != x"
              + std::to_string(i) + " (x" + std::to_string(j) + " x"
              + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  int i, j, k;
};

struct OutOfRange : Error {
  OutOfRange(int i, int j)
      : Error("table entry at (" + std::to_string(i) + ", "
              + std::to_string(j) + ") is not a valid element index"),
        i(i),
        j(j) {}
  int i, j;
};

struct NotInverse : Error {
  NotInverse() : Error("operation requires an inverse semigroup") {}
  explicit NotInverse(std::string const& what) : Error(what) {}
};

struct NotAGroup : Error {
  NotAGroup() : Error("operation requires a group") {}
  explicit NotAGroup(std::string const& what) : Error(what) {}
};

// Interchange-format syntax problems; line/col are 1-based.
struct ParseError : Error {
  ParseError(int line, int col, std::string const& what)
      : Error("parse error at " + std::to_string(line) + ":"
              + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line, col;
};

// Enumerations that would exceed a configured size cap fail loudly.
struct CapExceeded : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// A handed-in map (lattice iso, PA-iso, projectivity, ...) violates a
// structural guarantee it was supposed to carry.  Never silently patched.
struct ContractViolation : Error {
  using Error::Error;
};

}  // namespace pamona

#endif  // PAMONA_ERROR_HPP_
