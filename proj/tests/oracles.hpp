#pragma once

// Test-only reference implementations. None of these share code paths with
// the library routines they check: determinants by Laplace expansion, inertia
// from the characteristic polynomial, Theta_b by enumerating every ordering.

#include <cstdint>
#include <random>

#include "cwl/link.hpp"
#include "cwl/linalg.hpp"
#include "cwl/rational.hpp"

namespace cwl::oracle {

/// Laplace expansion along the first row. det of 0x0 is 1.
Rational cofactor_det(const RatMatrix& m);

/// Characteristic polynomial det(xI - A), coefficients c[0..n] of x^0..x^n,
/// from sums of principal minors.
std::vector<Rational> charpoly(const SymRatMatrix& A);

/// Inertia from Descartes' rule of signs on det(xI - A), which is exact for
/// the real-rooted characteristic polynomial of a symmetric matrix.
Inertia charpoly_inertia(const SymRatMatrix& A);

/// Lk_c(A_J): permutations of J starting at min J, cyclic entry products.
Rational brute_lk_c(const SymRatMatrix& A, SubsetIndex J);

/// Theta_b(A_I) by enumerating every (J, i, j, g) with g an ordering of I \ J.
Rational brute_theta_b(const SymRatMatrix& A, SubsetIndex I);

/// The whole surgery formula assembled from the oracles above and
/// dedekind_direct. Factorial cost; meant for n <= 5.
Rational reference_lambda(const FramedLink& link);

/// Sum over i of ((i/q))((p i/q)) in plain 64-bit fraction arithmetic.
Rational dedekind_by_hand(std::int64_t p, std::int64_t q);

// Random instances ----------------------------------------------------------

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

SymRatMatrix random_int_sym(Rng& rng, int n, std::int64_t lo, std::int64_t hi);

/// Random rational symmetric matrix with small numerators and denominators.
SymRatMatrix random_rat_sym(Rng& rng, int n);

/// Product of `ops` random elementary integer row operations (det 1).
RatMatrix random_unimodular(Rng& rng, int n, int ops);

/// U^T A U.
SymRatMatrix congruent(const SymRatMatrix& A, const RatMatrix& U);

struct LinkShape {
  std::int64_t framing_lo = -5, framing_hi = 5;
  std::int64_t max_q = 1;  ///< framing denominators drawn from 1..max_q
  std::int64_t lk_lo = -3, lk_hi = 3;
  std::int64_t a1_lo = 0, a1_hi = 0;
};

FramedLink random_link(Rng& rng, int n, const LinkShape& shape = {});

/// Relabel components by a permutation: new component perm[i-1] is old i.
FramedLink permute_link(const FramedLink& link, const std::vector<int>& perm);

}  // namespace cwl::oracle
