#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "swm/sign_matrix.hpp"

namespace swm {

/// Dense LU factorization with partial pivoting, PA = LU.
///
/// L (unit diagonal) and U are packed row-major in one n x n buffer. The
/// factorization is blocked for cache reuse; pivot choice takes the first
/// row of maximal magnitude, so results are fully deterministic.
class LuFactorization {
 public:
  /// Factorizes a row-major n x n matrix. Throws SingularSystem when a pivot
  /// magnitude drops below 1e-12 * n * max|a_ij|.
  LuFactorization(std::size_t n, std::vector<double> matrix);
  explicit LuFactorization(const SignMatrix& signs);

  std::size_t size() const noexcept { return n_; }

  /// Overwrites b with the solution of A x = b.
  void solve_in_place(std::span<double> b) const;
  /// Overwrites b with the solution of A^T x = b.
  void solve_transposed_in_place(std::span<double> b) const;

  std::vector<double> solve(std::span<const double> b) const;

  /// 1-norm condition number estimate (Hager/Higham), computed once after
  /// factorization from a handful of extra solves.
  double condition_estimate() const noexcept { return condition_; }

  double smallest_pivot() const noexcept { return smallest_pivot_; }

 private:
  void factorize();
  double estimate_inverse_norm1() const;

  std::size_t n_;
  std::vector<double> lu_;
  std::vector<std::size_t> pivots_;
  double norm1_ = 0.0;
  double smallest_pivot_ = 0.0;
  double condition_ = 0.0;
};

/// Shares one factorization of SignMatrix(n) per order n.
///
/// Lookups take a shared lock; insertion takes the exclusive lock. Two
/// threads racing on a missing n may both factorize; the first insert wins
/// and both results are identical anyway.
class SolverCache {
 public:
  std::shared_ptr<const LuFactorization> get(std::size_t n);
  double condition_estimate(std::size_t n);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::size_t, std::shared_ptr<const LuFactorization>> entries_;
};

/// Process-wide cache used when callers don't supply one.
SolverCache& default_solver_cache();

}  // namespace swm
