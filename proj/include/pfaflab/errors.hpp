#pragma once

#include <stdexcept>
#include <string>

namespace pfaflab {

// Requested size exceeds a supported range. Carries the offending value and
// the limit so callers can report both.
class BoundExceeded : public std::out_of_range {
 public:
  BoundExceeded(const std::string& what, long value, long limit)
      : std::out_of_range(what + " (" + std::to_string(value) + " > " + std::to_string(limit) + ")"),
        value_(value), limit_(limit) {}
  long value() const { return value_; }
  long limit() const { return limit_; }

 private:
  long value_, limit_;
};

class OddSubset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotStandard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidNetwork : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientVariables : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmbeddingFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_bound(const char* what, long value, long limit) {
  if (value > limit) throw BoundExceeded(what, value, limit);
}

}  // namespace pfaflab
