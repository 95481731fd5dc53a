#pragma once

#include "cwl/link.hpp"
#include "cwl/linalg.hpp"
#include "cwl/rational.hpp"

namespace cwl {

/// Largest component count the surgery formula evaluates; above
/// kLambdaWarnComponents the CLI warns about the exponential cost.
inline constexpr int kMaxLambdaComponents = 12;
inline constexpr int kLambdaWarnComponents = 10;

/// A((L,s)_{N\I}; I): the surgery matrix on N \ I with diagonal
/// s_i + sum_{k in I} n_{ki}. I may be empty (plain surgery matrix) or all of
/// N (0x0 matrix).
SymRatMatrix reduced_matrix(const FramedLink& link, SubsetIndex I);

/// Surgery matrix restricted to N \ I, diagonal s_i unchanged.
SymRatMatrix complement_matrix(const FramedLink& link, SubsetIndex I);

/// Theta(A_I) on the surgery matrix:
///   #I = 1: Theta_b + (q_i^2 + 1) / q_i^2
///   #I = 2: Theta_b - 2 n_ij
///   #I > 2: Theta_b
Rational theta(const FramedLink& link, SubsetIndex I);

/// |H_1| of the surgered manifold: prod(q_i) sign(A) det(A), 0 when infinite.
BigInt h1_order(const FramedLink& link);

/// The three sums of the S^3 surgery formula, before adding.
struct LambdaTerms {
  Rational conway;     ///< sign(A) prod(q) sum_I det(A(N\I; I)) a1(L_I)
  Rational theta;      ///< sign(A) prod(q) sum_I det(A_{N\I}) (-1)^#I Theta(A_I) / 24
  Rational homology;   ///< |H_1| (signature(A)/8 + sum_i s(p_i, q_i)/2)

  Rational total() const { return conway + theta + homology; }
};

/// Casson-Walker-Lescop invariant of the surgered manifold. Subsets are
/// spread over OpenMP threads; path sums come from one shared PathSumTable.
/// Throws DomainError above kMaxLambdaComponents.
Rational lescop_lambda(const FramedLink& link);
LambdaTerms lescop_lambda_terms(const FramedLink& link);

/// Single-threaded evaluation through a lazily memoized PathSumCache. Kept
/// as the reference the parallel path is tested against.
LambdaTerms lescop_lambda_terms_serial(const FramedLink& link);
Rational lescop_lambda_serial(const FramedLink& link);

/// Casson-Walker invariant 2 lambda / |H_1|. Throws DomainError when H_1 is
/// infinite.
Rational walker_lambda(const FramedLink& link);

}  // namespace cwl
