#ifndef JONESRT_ERRORS_H_
#define JONESRT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace jonesrt {

// Malformed documents, invalid diagrams, precondition violations on
// user-supplied parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap (frontier width, crossing count, coloring count)
// would be exceeded. `estimate` carries the offending quantity.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// Mathematically degenerate situations, e.g. a normalization constant that
// vanishes at the requested level.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jonesrt

#endif  // JONESRT_ERRORS_H_
