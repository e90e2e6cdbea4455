#include "swm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "swm/error.hpp"

namespace swm {

namespace {

constexpr std::size_t kPanelWidth = 64;
constexpr std::size_t kColumnChunk = 512;
constexpr double kPivotTolerance = 1e-12;

}  // namespace

LuFactorization::LuFactorization(std::size_t n, std::vector<double> matrix)
    : n_(n), lu_(std::move(matrix)) {
  if (n_ == 0) throw InvalidArgument("matrix order must be at least 1");
  if (lu_.size() != n_ * n_) {
    throw InvalidArgument("matrix buffer does not hold n*n entries");
  }
  factorize();
  condition_ = norm1_ * estimate_inverse_norm1();
}

LuFactorization::LuFactorization(const SignMatrix& signs)
    : LuFactorization(signs.size(), signs.to_dense()) {}

void LuFactorization::factorize() {
  const std::size_t n = n_;
  double* a = lu_.data();
  pivots_.resize(n);

  double max_abs = 0.0;
  norm1_ = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double column_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = std::abs(a[i * n + j]);
      column_sum += v;
      max_abs = std::max(max_abs, v);
    }
    norm1_ = std::max(norm1_, column_sum);
  }
  const double threshold = kPivotTolerance * static_cast<double>(n) * max_abs;
  smallest_pivot_ = std::numeric_limits<double>::infinity();

  for (std::size_t kb = 0; kb < n; kb += kPanelWidth) {
    const std::size_t ke = std::min(n, kb + kPanelWidth);

    // Panel: unblocked elimination restricted to columns [kb, ke).
    for (std::size_t k = kb; k < ke; ++k) {
      std::size_t p = k;
      double best = std::abs(a[k * n + k]);
      for (std::size_t i = k + 1; i < n; ++i) {
        const double v = std::abs(a[i * n + k]);
        if (v > best) {
          best = v;
          p = i;
        }
      }
      if (!(best > threshold)) {
        const double cond = best > 0.0 ? max_abs / best
                                       : std::numeric_limits<double>::infinity();
        throw SingularSystem(n, cond);
      }
      smallest_pivot_ = std::min(smallest_pivot_, best);
      pivots_[k] = p;
      if (p != k) std::swap_ranges(a + k * n, a + (k + 1) * n, a + p * n);

      const double inv = 1.0 / a[k * n + k];
      const double* row_k = a + k * n;
      for (std::size_t i = k + 1; i < n; ++i) {
        double* row_i = a + i * n;
        const double l = row_i[k] * inv;
        row_i[k] = l;
        if (l == 0.0) continue;
        for (std::size_t j = k + 1; j < ke; ++j) row_i[j] -= l * row_k[j];
      }
    }
    if (ke == n) break;

    // U12 = L11^-1 A12.
    for (std::size_t k = kb; k < ke; ++k) {
      const double* row_k = a + k * n;
      for (std::size_t i = k + 1; i < ke; ++i) {
        double* row_i = a + i * n;
        const double l = row_i[k];
        if (l == 0.0) continue;
        for (std::size_t j = ke; j < n; ++j) row_i[j] -= l * row_k[j];
      }
    }

    // A22 -= L21 U12, chunked over columns so the U12 slab stays in cache.
    for (std::size_t jb = ke; jb < n; jb += kColumnChunk) {
      const std::size_t je = std::min(n, jb + kColumnChunk);
      for (std::size_t i = ke; i < n; ++i) {
        double* row_i = a + i * n;
        for (std::size_t k = kb; k < ke; ++k) {
          const double l = row_i[k];
          if (l == 0.0) continue;
          const double* row_k = a + k * n;
          for (std::size_t j = jb; j < je; ++j) row_i[j] -= l * row_k[j];
        }
      }
    }
  }
}

void LuFactorization::solve_in_place(std::span<double> b) const {
  if (b.size() != n_) throw InvalidArgument("right-hand side has wrong length");
  const std::size_t n = n_;
  const double* a = lu_.data();
  for (std::size_t k = 0; k < n; ++k) {
    if (pivots_[k] != k) std::swap(b[k], b[pivots_[k]]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double* row = a + i * n;
    double sum = b[i];
    for (std::size_t j = 0; j < i; ++j) sum -= row[j] * b[j];
    b[i] = sum;
  }
  for (std::size_t i = n; i-- > 0;) {
    const double* row = a + i * n;
    double sum = b[i];
    for (std::size_t j = i + 1; j < n; ++j) sum -= row[j] * b[j];
    b[i] = sum / row[i];
  }
}

void LuFactorization::solve_transposed_in_place(std::span<double> b) const {
  if (b.size() != n_) throw InvalidArgument("right-hand side has wrong length");
  const std::size_t n = n_;
  const double* a = lu_.data();
  // A^T = U^T L^T P, so solve U^T y = b, L^T z = y, then undo the row swaps.
  for (std::size_t i = 0; i < n; ++i) {
    b[i] /= a[i * n + i];
    const double v = b[i];
    const double* row = a + i * n;
    for (std::size_t j = i + 1; j < n; ++j) b[j] -= row[j] * v;
  }
  for (std::size_t i = n; i-- > 0;) {
    const double v = b[i];
    const double* row = a + i * n;
    for (std::size_t j = 0; j < i; ++j) b[j] -= row[j] * v;
  }
  for (std::size_t k = n; k-- > 0;) {
    if (pivots_[k] != k) std::swap(b[k], b[pivots_[k]]);
  }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
  std::vector<double> x(b.begin(), b.end());
  solve_in_place(x);
  return x;
}

// Hager's estimator of ||A^-1||_1 as refined by Higham (LAPACK xLACON).
double LuFactorization::estimate_inverse_norm1() const {
  const std::size_t n = n_;
  if (n == 1) return 1.0 / std::abs(lu_[0]);
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> z(n);
  double estimate = 0.0;
  std::size_t last_j = n;
  for (int iteration = 0; iteration < 5; ++iteration) {
    solve_in_place(x);
    double norm = 0.0;
    for (double v : x) norm += std::abs(v);
    if (iteration > 0 && norm <= estimate) break;
    estimate = norm;
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] >= 0.0 ? 1.0 : -1.0;
    solve_transposed_in_place(z);
    std::size_t j = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(z[i]) > std::abs(z[j])) j = i;
    }
    if (j == last_j) break;
    last_j = j;
    std::fill(x.begin(), x.end(), 0.0);
    x[j] = 1.0;
  }
  // Alternative lower bound from an alternating-sign test vector.
  for (std::size_t i = 0; i < n; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    x[i] = sign * (1.0 + static_cast<double>(i) / static_cast<double>(n - 1));
  }
  solve_in_place(x);
  double alt = 0.0;
  for (double v : x) alt += std::abs(v);
  alt = 2.0 * alt / (3.0 * static_cast<double>(n));
  return std::max(estimate, alt);
}

std::shared_ptr<const LuFactorization> SolverCache::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(n);
    if (it != entries_.end()) return it->second;
  }
  auto fresh = std::make_shared<const LuFactorization>(SignMatrix(n));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(n, std::move(fresh));
  return it->second;
}

double SolverCache::condition_estimate(std::size_t n) {
  return get(n)->condition_estimate();
}

std::size_t SolverCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void SolverCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

SolverCache& default_solver_cache() {
  static SolverCache cache;
  return cache;
}

}  // namespace swm
