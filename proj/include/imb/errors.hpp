#ifndef IMB_ERRORS_HPP
#define IMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace imb {

/// Failure modes of the boundary map and its geometric primitives.
enum class ErrorKind {
  NotOnBoundary,  ///< point is farther than the boundary tolerance from the square
  CornerState,    ///< arc-length coordinate lies within the corner tolerance of a vertex
  NotInward,      ///< direction does not point into the interior
  CornerHit,      ///< a flight or arc ends within the corner tolerance of a vertex
  TangentGraze,   ///< the first arc-boundary contact is tangential
  OutOfRange,     ///< a same-side bounce formula left its local chart
  InvalidSlope,   ///< p, q are not coprime positive integers
};

const char* to_string(ErrorKind kind);

class MapError : public std::runtime_error {
 public:
  MapError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace imb

#endif  // IMB_ERRORS_HPP
