#pragma once

#include "cwl/rational.hpp"

namespace cwl {

/// Sawtooth ((x)): 0 on integers, otherwise x - floor(x) - 1/2.
Rational sawtooth(const Rational& x);

/// Dedekind sum s(p, q) = sum_{i=1}^{q} ((i/q)) ((p i / q)) evaluated term by
/// term. O(q); this is the reference evaluator. Throws DomainError for q < 1.
Rational dedekind_direct(const BigInt& p, const BigInt& q);

/// Same value in O(log q) steps by Euclidean descent on the reciprocity law
///   s(p,q) + s(q,p) = -1/4 + (p/q + q/p + 1/(pq)) / 12
/// with s(p + q, q) = s(p, q) and s(-p, q) = -s(p, q).
/// When gcd(p, q) != 1 the reciprocity law does not apply and the call
/// defers to dedekind_direct.
Rational dedekind_fast(const BigInt& p, const BigInt& q);

}  // namespace cwl
