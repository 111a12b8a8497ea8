#pragma once

#include <stdexcept>
#include <string>

namespace combclt {

// Base for all library errors so callers can catch the whole family.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested untruncated moment does not exist (diverging integral).
class NonintegrableMoment : public Error {
 public:
  explicit NonintegrableMoment(const std::string& msg) : Error(msg) {}
};

// Truncation level t must be > 0.
class InvalidTruncation : public Error {
 public:
  explicit InvalidTruncation(const std::string& msg) : Error(msg) {}
};

// A bound component divides by sqrt(B_bar) or sqrt(B) which is zero.
class DegenerateVariance : public Error {
 public:
  explicit DegenerateVariance(const std::string& msg) : Error(msg) {}
};

// Row/column means of the mean matrix are not zero within tolerance.
class CenteringViolated : public Error {
 public:
  explicit CenteringViolated(const std::string& msg) : Error(msg) {}
};

// The weight function handed to the g-function bound fails its
// monotonicity audit.
class InvalidG : public Error {
 public:
  explicit InvalidG(const std::string& msg) : Error(msg) {}
};

// The fixed-point solver could not bracket a sign change.
class NoBracket : public Error {
 public:
  explicit NoBracket(const std::string& msg) : Error(msg) {}
};

// Exact enumeration requested for a matrix too large to enumerate.
class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& msg) : Error(msg) {}
};

}  // namespace combclt
