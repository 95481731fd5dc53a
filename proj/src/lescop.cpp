#include "cwl/lescop.hpp"

#include <cstdint>
#include <vector>

#include "cwl/dedekind.hpp"
#include "cwl/path_sum.hpp"

namespace cwl {

namespace {

std::vector<int> complement_labels(int n, SubsetIndex I) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!I.contains(i)) out.push_back(i);
  return out;
}

void check_lambda_size(const FramedLink& link) {
  if (link.size() > kMaxLambdaComponents) {
    throw DomainError("surgery formula supports at most " +
                      std::to_string(kMaxLambdaComponents) + " components");
  }
}

Rational theta_correction(const FramedLink& link, SubsetIndex I) {
  const std::vector<int> m = I.members();
  if (m.size() == 1) {
    const Rational q = Rational(link.framing(m[0]).den());
    return (q * q + Rational(1)) / (q * q);
  }
  if (m.size() == 2) return Rational(-2 * link.linking(m[0], m[1]));
  return Rational(0);
}

// Contributions of one index set I to the first two sums (without the
// common sign(A) prod(q) factor and the 1/24).
struct SubsetTerms {
  Rational conway;
  Rational theta;
};

template <typename ThetaB>
SubsetTerms subset_terms(const FramedLink& link, SubsetIndex I, ThetaB&& theta_b_of) {
  SubsetTerms t;
  if (const std::int64_t a1 = link.a1(I); a1 != 0) {
    t.conway = det_exact(reduced_matrix(link, I)) * Rational(a1);
  }
  const Rational d = det_exact(complement_matrix(link, I));
  if (!d.is_zero()) {
    const Rational th = theta_b_of(I) + theta_correction(link, I);
    t.theta = I.size() % 2 == 0 ? d * th : -(d * th);
  }
  return t;
}

LambdaTerms assemble(const FramedLink& link, const Rational& conway_sum,
                     const Rational& theta_sum) {
  const SymRatMatrix A = surgery_matrix(link);
  const Inertia in = inertia(A);
  const int sign = in.n_minus % 2 == 0 ? 1 : -1;
  const Rational scale = Rational(link.framing_denominator_product() * sign);

  LambdaTerms out;
  out.conway = scale * conway_sum;
  out.theta = scale * theta_sum / Rational(24);

  const Rational h1 = scale * det_exact(A);
  if (!h1.is_zero()) {
    Rational dedekind_total;
    for (const Rational& s : link.framings()) dedekind_total += dedekind_fast(s.num(), s.den());
    const int sig = static_cast<int>(in.n_plus) - static_cast<int>(in.n_minus);
    out.homology = h1 * (Rational(sig, 8) + dedekind_total / Rational(2));
  }
  return out;
}

}  // namespace

SymRatMatrix reduced_matrix(const FramedLink& link, SubsetIndex I) {
  const int n = link.size();
  if (!I.subset_of(SubsetIndex::full(n))) throw DomainError("index set out of range");
  const std::vector<int> rest = complement_labels(n, I);
  SymRatMatrix out(rest.size());
  for (std::size_t a = 0; a < rest.size(); ++a) {
    Rational diag = link.framing(rest[a]);
    for (int k : I.members()) diag += Rational(link.linking(k, rest[a]));
    out.set(a, a, diag);
    for (std::size_t b = a + 1; b < rest.size(); ++b)
      out.set(a, b, Rational(link.linking(rest[a], rest[b])));
  }
  return out;
}

SymRatMatrix complement_matrix(const FramedLink& link, SubsetIndex I) {
  const int n = link.size();
  if (!I.subset_of(SubsetIndex::full(n))) throw DomainError("index set out of range");
  std::vector<std::size_t> rows;
  for (int i : complement_labels(n, I)) rows.push_back(static_cast<std::size_t>(i - 1));
  return surgery_matrix(link).principal(rows);
}

Rational theta(const FramedLink& link, SubsetIndex I) {
  if (I.empty()) throw DomainError("Theta of the empty index set");
  if (!I.subset_of(SubsetIndex::full(link.size()))) throw DomainError("index set out of range");
  return theta_b(surgery_matrix(link), I) + theta_correction(link, I);
}

BigInt h1_order(const FramedLink& link) {
  const SymRatMatrix A = surgery_matrix(link);
  const Rational h = Rational(link.framing_denominator_product() * matrix_sign(A)) * det_exact(A);
  if (!h.is_integer() || h.sign() < 0) throw std::logic_error("|H_1| is not a nonnegative integer");
  return h.num();
}

LambdaTerms lescop_lambda_terms(const FramedLink& link) {
  check_lambda_size(link);
  const int n = link.size();
  const PathSumTable table(surgery_matrix(link));
  const std::uint32_t full = SubsetIndex::full(n).mask();

  std::vector<SubsetTerms> per_subset(static_cast<std::size_t>(full) + 1);
  const long count = static_cast<long>(full);
#pragma omp parallel for schedule(dynamic)
  for (long m = 1; m <= count; ++m) {
    const SubsetIndex I = SubsetIndex::from_mask(static_cast<std::uint32_t>(m));
    per_subset[m] = subset_terms(link, I, [&table](SubsetIndex J) { return theta_b(table, J); });
  }

  Rational conway_sum, theta_sum;
  for (std::size_t m = 1; m < per_subset.size(); ++m) {
    conway_sum += per_subset[m].conway;
    theta_sum += per_subset[m].theta;
  }
  return assemble(link, conway_sum, theta_sum);
}

Rational lescop_lambda(const FramedLink& link) { return lescop_lambda_terms(link).total(); }

LambdaTerms lescop_lambda_terms_serial(const FramedLink& link) {
  check_lambda_size(link);
  const SymRatMatrix A = surgery_matrix(link);
  PathSumCache cache(A);
  Rational conway_sum, theta_sum;
  for (SubsetIndex I : nonempty_subsets(link.size())) {
    const SubsetTerms t =
        subset_terms(link, I, [&cache](SubsetIndex J) { return theta_b(cache, J); });
    conway_sum += t.conway;
    theta_sum += t.theta;
  }
  return assemble(link, conway_sum, theta_sum);
}

Rational lescop_lambda_serial(const FramedLink& link) {
  return lescop_lambda_terms_serial(link).total();
}

Rational walker_lambda(const FramedLink& link) {
  const BigInt h1 = h1_order(link);
  if (h1 == 0) throw DomainError("not a rational homology sphere (H_1 is infinite)");
  return Rational(2) * lescop_lambda(link) / Rational(h1);
}

}  // namespace cwl
