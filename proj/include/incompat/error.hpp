#pragma once

#include <stdexcept>
#include <string>

namespace incompat {

/** Input violates a documented precondition. */
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/** A configured size limit would be exceeded. */
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

/** A numerical solver failed to reach its tolerance. */
class SolverFailure : public std::runtime_error {
 public:
  explicit SolverFailure(const std::string& what) : std::runtime_error(what) {}
};

/** An internal self-check failed; indicates a bug rather than bad input. */
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace incompat
