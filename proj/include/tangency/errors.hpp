#ifndef TANGENCY_ERRORS_HPP
#define TANGENCY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tangency {

// Base of every error raised by the library. Verification failures are not
// errors: they are reported through certificates with passed == false.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument to an interval operation: NaN bounds, lo > hi, division by
// an interval containing zero, sqrt of an interval reaching below zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A rounded bound became non-finite.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// An angle enclosure left the chart (0, pi).
class ChartError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tangency

#endif  // TANGENCY_ERRORS_HPP
