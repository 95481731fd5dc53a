#include "cwl/linalg.hpp"

#include <utility>

namespace cwl {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()), entries_() {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DomainError("matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SymRatMatrix::SymRatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : m_(rows) {
  *this = from_matrix(m_);
}

SymRatMatrix SymRatMatrix::from_matrix(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) != m(j, i)) throw DomainError("matrix is not symmetric");
  SymRatMatrix s;
  s.m_ = m;
  return s;
}

void SymRatMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  m_(i, j) = v;
  m_(j, i) = v;
}

SymRatMatrix SymRatMatrix::principal(const std::vector<std::size_t>& indices) const {
  SymRatMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a; b < indices.size(); ++b) sub.set(a, b, m_(indices[a], indices[b]));
  return sub;
}

Rational det_exact(const RatMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);

  // Scale each row to integers; det(m) = det(scaled) / prod(row scales).
  std::vector<BigInt> a(n * n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt d = m(i, j).den();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j).num() * (row_lcm / m(i, j).den());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    const BigInt& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(v);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  BigInt det = a[(n - 1) * n + (n - 1)];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

Rational det_exact(const SymRatMatrix& m) { return det_exact(m.matrix()); }

Inertia inertia(const SymRatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix work = m.matrix();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia result;
  auto drop = [&active](std::size_t idx) { std::erase(active, idx); };

  while (!active.empty()) {
    std::size_t pivot = n;
    for (std::size_t i : active) {
      if (!work(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }

    if (pivot != n) {
      const Rational d = work(pivot, pivot);
      (d.sign() > 0 ? result.n_plus : result.n_minus) += 1;
      drop(pivot);
      for (std::size_t i : active) {
        if (work(i, pivot).is_zero()) continue;
        const Rational f = work(i, pivot) / d;
        for (std::size_t j : active) work(i, j) -= f * work(pivot, j);
      }
      continue;
    }

    // Every active diagonal entry is zero: find a nonzero off-diagonal entry.
    std::size_t r = n, c = n;
    for (std::size_t i : active) {
      for (std::size_t j : active) {
        if (i != j && !work(i, j).is_zero()) {
          r = i;
          c = j;
          break;
        }
      }
      if (r != n) break;
    }
    if (r == n) break;

    // Block [[0, b], [b, 0]] has determinant -b^2 < 0.
    result.n_plus += 1;
    result.n_minus += 1;
    const Rational b = work(r, c);
    drop(r);
    drop(c);
    // Schur complement: M - C B^{-1} C^T with B^{-1} = [[0, 1/b], [1/b, 0]].
    std::vector<std::pair<Rational, Rational>> col(n);
    for (std::size_t i : active) col[i] = {work(i, r), work(i, c)};
    for (std::size_t i : active) {
      for (std::size_t j : active) {
        const Rational t = (col[i].first * col[j].second + col[i].second * col[j].first) / b;
        if (!t.is_zero()) work(i, j) -= t;
      }
    }
  }
  result.n_zero = n - result.n_plus - result.n_minus;
  return result;
}

int matrix_sign(const SymRatMatrix& m) { return inertia(m).n_minus % 2 == 0 ? 1 : -1; }

int signature(const SymRatMatrix& m) {
  const Inertia in = inertia(m);
  return static_cast<int>(in.n_plus) - static_cast<int>(in.n_minus);
}

}  // namespace cwl
