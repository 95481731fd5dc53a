#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwl/link.hpp"
#include "cwl/rational.hpp"

namespace cwl {

/// Lens space L(p, q), p >= 1, 1 <= q, gcd(p, q) = 1.
class LensSpace {
 public:
  /// Validates and normalizes: q > p is reduced mod p; L(1, q) becomes L(1, 1).
  /// Throws DomainError for p < 1, q < 1, gcd(p, q) != 1 or q = 0 mod p (p > 1).
  LensSpace(BigInt p, BigInt q);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

using DedekindFn = std::function<Rational(const BigInt&, const BigInt&)>;

/// lambda(L(p,q)) = q(-1/24 - (p^2+1)/(24 q^2)) + p/8 + p s(p,q)/2.
Rational lens_lambda(const LensSpace& L);
Rational lens_lambda(const LensSpace& L, const DedekindFn& dedekind);

/// -p s(q, p) / 2; equal to lens_lambda by Dedekind reciprocity.
Rational lens_lambda_alt(const LensSpace& L);

/// Chain of unknots, consecutive ones linked once, with integer framings
/// a_1..a_k. An optional tail t contributes a last component of framing 1/t,
/// i.e. the continued fraction ends in ... a_k - t.
struct ChainPresentation {
  std::vector<BigInt> coeffs;
  std::optional<Rational> tail;
};

/// Exact value of a_1 - 1/(a_2 - 1/(... - 1/(a_k - tail))), reduced with q > 0.
/// Throws DomainError("degenerate chain") on a zero denominator and when the
/// result has p <= 0.
std::pair<BigInt, BigInt> chain_to_lens(const ChainPresentation& chain);

/// The framed link of a chain presentation. Throws DomainError for an empty
/// chain or a zero tail.
FramedLink chain_link(const ChainPresentation& chain);

/// L(2n^2b^2 + 2nb + 1, 2nb^2) when s = a/b satisfies a = nb + 1; otherwise
/// empty.
std::optional<LensSpace> tn_lens_condition(std::int64_t n, const Rational& s);

/// One family of the sweep report.
struct SweepResult {
  std::string name;
  std::size_t checked = 0;
  bool passed = true;
  std::string first_failure;  ///< instance and expected/actual values
};

struct VerifyReport {
  std::vector<SweepResult> sweeps;
  bool passed() const;
  std::string to_string() const;
};

/// Runs the closed-form lens and Dedekind families plus the surgery-formula
/// agreement suites. Failures are recorded in the report, never thrown.
/// `dedekind` replaces the Dedekind evaluator inside the closed-form sweeps.
VerifyReport verify_sweeps(int max_r, int max_nb, const DedekindFn& dedekind = nullptr);

}  // namespace cwl
