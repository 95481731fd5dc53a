#include "cwl/path_sum.hpp"

#include <bit>

namespace cwl {

namespace {

std::uint64_t memo_key(int i, int j, std::uint32_t S) {
  return static_cast<std::uint64_t>(S) | (static_cast<std::uint64_t>(i) << 32) |
         (static_cast<std::uint64_t>(j) << 40);
}

void check_path_args(const SymRatMatrix& A, int i, int j, SubsetIndex S) {
  const int n = static_cast<int>(A.size());
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("path endpoint out of range");
  if (!S.subset_of(SubsetIndex::full(n))) throw DomainError("path subset out of range");
  if (S.contains(i) || S.contains(j)) throw DomainError("path endpoint lies in the subset");
}

// Sums P(i, j, I \ J) over (i, j) in J^2, weighted by Lk_c(A_J), for every J.
template <typename PathFn>
Rational theta_b_with(SubsetIndex I, PathFn&& path) {
  if (I.empty()) throw DomainError("Theta_b of the empty index set");
  const std::uint32_t full = I.mask();
  Rational total;
  // Enumerate nonempty J subset I.
  for (std::uint32_t J = full;; J = (J - 1) & full) {
    if (J == 0) break;
    const SubsetIndex Js = SubsetIndex::from_mask(J);
    const int m = Js.min();
    const Rational lk = path(m, m, Js.without(m));
    if (!lk.is_zero()) {
      const SubsetIndex rest = SubsetIndex::from_mask(full & ~J);
      Rational pairs;
      for (int i : Js.members())
        for (int j : Js.members()) pairs += path(i, j, rest);
      total += lk * pairs;
    }
  }
  return total;
}

}  // namespace

Rational PathSumCache::get(int i, int j, SubsetIndex S) {
  check_path_args(*A_, i, j, S);
  return compute(i, j, S.mask());
}

Rational PathSumCache::compute(int i, int j, std::uint32_t S) {
  if (S == 0) return (*A_)(i - 1, j - 1);
  const std::uint64_t key = memo_key(i, j, S);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Rational total;
  for (std::uint32_t rest = S; rest != 0; rest &= rest - 1) {
    const int k = std::countr_zero(rest) + 1;
    const Rational& a = (*A_)(i - 1, k - 1);
    if (a.is_zero()) continue;
    total += a * compute(k, j, S & ~(1U << (k - 1)));
  }
  memo_.emplace(key, total);
  return total;
}

PathSumTable::PathSumTable(const SymRatMatrix& A, bool parallel)
    : n_(static_cast<int>(A.size())) {
  if (n_ > kMaxSize) {
    throw DomainError("path-sum table supports at most " + std::to_string(kMaxSize) +
                      " components");
  }
  const std::size_t n = static_cast<std::size_t>(n_);
  const std::uint32_t subsets = 1U << n_;
  table_.resize(static_cast<std::size_t>(subsets) * n * n);

  std::vector<std::vector<std::uint32_t>> layers(n + 1);
  for (std::uint32_t S = 0; S < subsets; ++S) layers[std::popcount(S)].push_back(S);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = A(i, j);

  for (std::size_t k = 1; k <= n; ++k) {
    const auto& layer = layers[k];
    const long count = static_cast<long>(layer.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel && count > 8)
    for (long idx = 0; idx < count; ++idx) {
      const std::uint32_t S = layer[idx];
      for (std::size_t i = 0; i < n; ++i) {
        if ((S >> i) & 1U) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if ((S >> j) & 1U) continue;
          Rational total;
          for (std::uint32_t rest = S; rest != 0; rest &= rest - 1) {
            const std::size_t m = static_cast<std::size_t>(std::countr_zero(rest));
            const Rational& a = A(i, m);
            if (a.is_zero()) continue;
            const std::uint32_t smaller = S & ~(1U << m);
            total += a * table_[(static_cast<std::size_t>(smaller) * n + m) * n + j];
          }
          table_[(static_cast<std::size_t>(S) * n + i) * n + j] = std::move(total);
        }
      }
    }
  }
}

Rational path_sum(const SymRatMatrix& A, int i, int j, SubsetIndex S) {
  PathSumCache cache(A);
  return cache.get(i, j, S);
}

Rational lk_c(const SymRatMatrix& A, SubsetIndex J) {
  if (J.empty()) throw DomainError("Lk_c of the empty index set");
  const int m = J.min();
  return path_sum(A, m, m, J.without(m));
}

Rational theta_b(const SymRatMatrix& A, SubsetIndex I) {
  PathSumCache cache(A);
  return theta_b(cache, I);
}

Rational theta_b(PathSumCache& cache, SubsetIndex I) {
  return theta_b_with(I, [&cache](int i, int j, SubsetIndex S) { return cache.get(i, j, S); });
}

Rational theta_b(const PathSumTable& table, SubsetIndex I) {
  if (!I.subset_of(SubsetIndex::full(table.size()))) throw DomainError("index set out of range");
  return theta_b_with(I, [&table](int i, int j, SubsetIndex S) -> const Rational& {
    return table(i, j, S);
  });
}

}  // namespace cwl
