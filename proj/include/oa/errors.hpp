#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace oa {

/// Malformed graph input. Carries the offending edge/line index when known.
class GraphInputError : public std::runtime_error {
 public:
  GraphInputError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), index_(index) {}

  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::optional<std::size_t> index_;
};

/// An operation was called on an input that violates its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds the size an exhaustive oracle or materializing construction accepts.
class DeskScaleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace oa
