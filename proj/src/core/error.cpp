#include "swm/error.hpp"

#include <cstdio>

namespace swm {

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string singular_message(std::size_t n, double condition) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "singular system: sign matrix of order %zu, condition estimate %.3g",
                n, condition);
  return buf;
}

}  // namespace

SingularSystem::SingularSystem(std::size_t n, double condition_estimate)
    : Error(ErrorCode::kSingularSystem, singular_message(n, condition_estimate)),
      n_(n),
      condition_(condition_estimate) {}

}  // namespace swm
