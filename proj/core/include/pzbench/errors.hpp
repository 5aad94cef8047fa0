#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pzbench {

/// Raised when an operation's input violates its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A grid axis is too coarse for the polynomial degree it must carry.
class GridTooSmall : public PreconditionError {
 public:
  GridTooSmall(std::size_t axis, std::size_t given, std::size_t required)
      : PreconditionError("grid axis " + std::to_string(axis) + " has " +
                          std::to_string(given) + " samples; at least " +
                          std::to_string(required) + " required"),
        axis_(axis),
        given_(given),
        required_(required) {}

  std::size_t axis() const noexcept { return axis_; }
  std::size_t given() const noexcept { return given_; }
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t axis_;
  std::size_t given_;
  std::size_t required_;
};

/// A generated set would exceed its size cap.
class CapExceeded : public PreconditionError {
 public:
  CapExceeded(std::size_t cap, std::size_t required)
      : PreconditionError("size cap " + std::to_string(cap) +
                          " exceeded; cap of at least " +
                          std::to_string(required) + " required"),
        cap_(cap),
        required_(required) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t cap_;
  std::size_t required_;
};

/// A sequence is not strictly increasing, not positive, or has ratio <= 1.
class NotLacunary : public PreconditionError {
 public:
  NotLacunary(std::size_t index, const std::string& why)
      : PreconditionError("not lacunary at index " + std::to_string(index) +
                          ": " + why),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A mathematical identity or inequality that must hold failed to hold.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pzbench
