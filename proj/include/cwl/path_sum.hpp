#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cwl/link.hpp"
#include "cwl/linalg.hpp"

namespace cwl {

// Chain sums over a symmetric matrix A, with rows/columns addressed by
// 1-based labels:
//
//   P(i, j, S) = sum over orderings g of S of A(i,g1) A(g1,g2) ... A(gm,j)
//   P(i, j, {}) = A(i, j)            (diagonal included: P(i, i, {}) = A(i, i))
//
// evaluated by the subset recursion P(i,j,S) = sum_{k in S} A(i,k) P(k,j,S\{k}).

/// Lazily memoized evaluator. Confined to one thread; values never change
/// once written.
class PathSumCache {
 public:
  explicit PathSumCache(const SymRatMatrix& A) : A_(&A) {}

  /// Throws DomainError when i or j is out of range or lies in S.
  Rational get(int i, int j, SubsetIndex S);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  Rational compute(int i, int j, std::uint32_t S);

  const SymRatMatrix* A_;
  std::unordered_map<std::uint64_t, Rational> memo_;
};

/// Dense table of P(i, j, S) for every S and every i, j outside S, filled
/// layer by layer in |S|. Within a layer the subsets are independent, so the
/// layer is split across OpenMP threads when `parallel` is set.
class PathSumTable {
 public:
  /// Largest matrix the dense table accepts (n^2 2^n entries).
  static constexpr int kMaxSize = 12;

  explicit PathSumTable(const SymRatMatrix& A, bool parallel = true);

  int size() const { return n_; }
  /// i, j must lie outside S; not range checked.
  const Rational& operator()(int i, int j, SubsetIndex S) const {
    return table_[(static_cast<std::size_t>(S.mask()) * n_ + (i - 1)) * n_ + (j - 1)];
  }

 private:
  int n_;
  std::vector<Rational> table_;
};

/// One-off P(i, j, S) through a fresh PathSumCache.
Rational path_sum(const SymRatMatrix& A, int i, int j, SubsetIndex S);

/// Cyclic linking sum, anchored at m = min J: Lk_c(A_J) = P(m, m, J \ {m}).
/// Each cyclic ordering of J contributes once; a singleton gives A(m, m).
/// Throws DomainError for empty J.
Rational lk_c(const SymRatMatrix& A, SubsetIndex J);

/// Theta_b(A_I) = sum_{{} != J subset I} Lk_c(A_J) sum_{(i,j) in J^2} P(i, j, I \ J).
/// Throws DomainError for empty I.
Rational theta_b(const SymRatMatrix& A, SubsetIndex I);
Rational theta_b(PathSumCache& cache, SubsetIndex I);
Rational theta_b(const PathSumTable& table, SubsetIndex I);

}  // namespace cwl
