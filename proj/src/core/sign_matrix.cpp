#include "swm/sign_matrix.hpp"

#include "swm/error.hpp"

namespace swm {

SignMatrix::SignMatrix(std::size_t n) : n_(n) {
  if (n == 0) throw InvalidArgument("sign matrix order must be at least 1");
  entries_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t block = n - i;
    for (std::size_t k = 0; k < n; ++k) {
      entries_[k * n + i] = ((k / block) % 2 == 0) ? 1 : -1;
    }
  }
}

std::vector<double> SignMatrix::to_dense() const {
  return std::vector<double>(entries_.begin(), entries_.end());
}

}  // namespace swm
