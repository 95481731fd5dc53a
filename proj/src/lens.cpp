#include "cwl/lens.hpp"

#include "cwl/dedekind.hpp"

namespace cwl {

LensSpace::LensSpace(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 1) throw DomainError("lens space needs p >= 1");
  if (q_ < 1) throw DomainError("lens space needs q >= 1");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  if (g != 1) throw DomainError("lens space needs gcd(p, q) = 1");
  if (p_ == 1) {
    q_ = 1;
  } else if (q_ > p_) {
    q_ %= p_;  // nonzero since gcd(p, q) = 1 and p > 1
  }
}

Rational lens_lambda(const LensSpace& L) { return lens_lambda(L, dedekind_fast); }

Rational lens_lambda(const LensSpace& L, const DedekindFn& dedekind) {
  const Rational p(L.p());
  const Rational q(L.q());
  const Rational one(1);
  return q * (Rational(-1, 24) - (p * p + one) / (Rational(24) * q * q)) + p / Rational(8) +
         p * dedekind(L.p(), L.q()) / Rational(2);
}

Rational lens_lambda_alt(const LensSpace& L) {
  return -Rational(L.p()) * dedekind_fast(L.q(), L.p()) / Rational(2);
}

std::pair<BigInt, BigInt> chain_to_lens(const ChainPresentation& chain) {
  if (chain.coeffs.empty()) throw DomainError("degenerate chain: no coefficients");
  Rational x = Rational(chain.coeffs.back());
  if (chain.tail) x -= *chain.tail;
  for (auto it = chain.coeffs.rbegin() + 1; it != chain.coeffs.rend(); ++it) {
    if (x.is_zero()) throw DomainError("degenerate chain: zero denominator");
    x = Rational(*it) - Rational(1) / x;
  }
  if (x.sign() <= 0) {
    throw DomainError("degenerate chain: continued fraction " + x.to_string() +
                      " is not positive");
  }
  return {x.num(), x.den()};
}

FramedLink chain_link(const ChainPresentation& chain) {
  if (chain.coeffs.empty()) throw DomainError("empty chain");
  std::vector<Rational> framings;
  for (const BigInt& a : chain.coeffs) framings.emplace_back(a);
  if (chain.tail) {
    if (chain.tail->is_zero()) throw DomainError("zero tail has no surgery component");
    framings.push_back(Rational(1) / *chain.tail);
  }
  FramedLink link(std::move(framings));
  for (int i = 1; i < link.size(); ++i) link.set_linking(i, i + 1, 1);
  return link;
}

std::optional<LensSpace> tn_lens_condition(std::int64_t n, const Rational& s) {
  if (n < 1) return std::nullopt;
  const BigInt a = s.num();
  const BigInt b = s.den();
  const BigInt nb = BigInt(static_cast<long>(n)) * b;
  if (a != nb + 1) return std::nullopt;
  return LensSpace(2 * nb * nb + 2 * nb + 1, 2 * nb * b);
}

}  // namespace cwl
