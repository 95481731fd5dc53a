#include "cwl/dedekind.hpp"

namespace cwl {

namespace {

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_direct(const BigInt& p, const BigInt& q) {
  if (q < 1) throw DomainError("Dedekind sum requires q >= 1");
  if (!q.fits_ulong_p()) throw DomainError("q too large for direct summation");
  // For 0 < i < q, ((i/q)) = (2i - q) / 2q; a zero residue contributes 0.
  // Summing the numerators in integers and dividing once by 4q^2 keeps the
  // loop free of fraction canonicalization.
  const BigInt step = floor_mod(p, q);
  BigInt total, r, a, b;
  for (BigInt i = 1; i < q; ++i) {
    r += step;
    if (r >= q) r -= q;
    if (r == 0) continue;
    a = 2 * i - q;
    b = 2 * r - q;
    mpz_addmul(total.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  return Rational(total, 4 * q * q);
}

Rational dedekind_fast(const BigInt& p_in, const BigInt& q_in) {
  if (q_in < 1) throw DomainError("Dedekind sum requires q >= 1");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p_in.get_mpz_t(), q_in.get_mpz_t());
  if (g != 1) return dedekind_direct(p_in, q_in);

  // Invariant: s(p_in, q_in) = acc + sign * s(p, q), 0 <= p < q, gcd(p, q) = 1.
  Rational acc;
  int sign = 1;
  BigInt q = q_in;
  BigInt p = floor_mod(p_in, q);
  while (q > 1) {
    // s(p,q) = -s(q,p) - 1/4 + (p^2 + q^2 + 1) / (12 p q)
    const Rational term = Rational(-1, 4) + Rational(p * p + q * q + 1, 12 * p * q);
    acc += sign > 0 ? term : -term;
    sign = -sign;
    BigInt next_q = p;
    p = floor_mod(q, p);
    q = std::move(next_q);
  }
  // s(0, 1) = 0.
  return acc;
}

}  // namespace cwl
