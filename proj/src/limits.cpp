#include "incompat/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "incompat/error.hpp"

namespace incompat {

namespace {

const char* env(const char* name) {
  const char* value = std::getenv(name);
  return (value != nullptr && *value != '\0') ? value : nullptr;
}

template <typename T>
T parse_positive(const char* name, const char* text) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != std::string(text).size() || !(value > 0)) throw std::invalid_argument(text);
    return static_cast<T>(value);
  } catch (const std::exception&) {
    throw InvalidParameter(std::string(name) + " must be a positive number");
  }
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  if (const char* v = env("INCOMPAT_MAX_SDP_DIM"))
    limits.sdp_max_variable_dim = parse_positive<double>("INCOMPAT_MAX_SDP_DIM", v);
  if (const char* v = env("INCOMPAT_MAX_CLASSES"))
    limits.max_switching_classes = parse_positive<std::uint64_t>("INCOMPAT_MAX_CLASSES", v);
  if (const char* v = env("INCOMPAT_THREADS")) {
    limits.threads = parse_positive<unsigned>("INCOMPAT_THREADS", v);
  } else {
    limits.threads = std::max(1u, std::thread::hardware_concurrency());
  }
  return limits;
}

}  // namespace incompat
