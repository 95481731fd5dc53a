#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "cwl/dedekind.hpp"
#include "cwl/lens.hpp"
#include "cwl/lescop.hpp"
#include "cwl/moves.hpp"

namespace cwl {

namespace {

using Check = std::function<std::optional<std::string>()>;

struct Instance {
  std::string label;
  Check check;
};

std::string mismatch(const Rational& expected, const Rational& actual) {
  return "expected " + expected.to_string() + ", got " + actual.to_string();
}

// Runs independent instances in parallel and keeps the first failure in
// instance order, so the report does not depend on scheduling.
SweepResult run_sweep(std::string name, const std::vector<Instance>& instances) {
  std::vector<std::optional<std::string>> outcome(instances.size());
  const long count = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      outcome[k] = instances[k].check();
    } catch (const std::exception& e) {
      outcome[k] = std::string("threw: ") + e.what();
    }
  }
  SweepResult result{std::move(name), instances.size(), true, {}};
  for (std::size_t k = 0; k < outcome.size(); ++k) {
    if (outcome[k]) {
      result.passed = false;
      result.first_failure = instances[k].label + ": " + *outcome[k];
      break;
    }
  }
  return result;
}

std::optional<std::string> expect_equal(const Rational& expected, const Rational& actual) {
  if (expected == actual) return std::nullopt;
  return mismatch(expected, actual);
}

}  // namespace

bool VerifyReport::passed() const {
  for (const SweepResult& s : sweeps)
    if (!s.passed) return false;
  return true;
}

std::string VerifyReport::to_string() const {
  std::ostringstream out;
  for (const SweepResult& s : sweeps) {
    out << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.checked << " instances)";
    if (!s.passed) out << ": first failure at " << s.first_failure;
    out << '\n';
  }
  out << (passed() ? "all sweeps passed" : "verification FAILED") << '\n';
  return out.str();
}

VerifyReport verify_sweeps(int max_r, int max_nb, const DedekindFn& dedekind_in) {
  if (max_r < 1 || max_nb < 1) throw DomainError("sweep bounds must be >= 1");
  const DedekindFn dedekind = dedekind_in ? dedekind_in : DedekindFn(dedekind_fast);
  VerifyReport report;

  {
    std::vector<Instance> lens_zero, dedekind_r;
    for (long r = 1; r <= max_r; ++r) {
      const BigInt p = BigInt(r) * r + 1;
      lens_zero.push_back({"r=" + std::to_string(r), [=] {
                             return expect_equal(Rational(0),
                                                 lens_lambda(LensSpace(p, r), dedekind));
                           }});
      dedekind_r.push_back({"r=" + std::to_string(r), [=] {
                              return expect_equal(Rational(BigInt(r * r - 3 * r + 2), 12 * r),
                                                  dedekind(p, BigInt(r)));
                            }});
    }
    report.sweeps.push_back(run_sweep("lambda(L(r^2+1, r)) = 0", lens_zero));
    report.sweeps.push_back(run_sweep("s(r^2+1, r) = (r^2-3r+2)/(12r)", dedekind_r));
  }

  {
    std::vector<Instance> three_routes, dedekind_nb;
    for (long n = 1; n <= max_nb; ++n) {
      for (long b = 1; b <= max_nb; ++b) {
        const std::string label = "(n,b)=(" + std::to_string(n) + "," + std::to_string(b) + ")";
        const BigInt p = 2 * BigInt(n * n * b * b) + 2 * n * b + 1;
        const BigInt q = 2 * BigInt(n * b * b);
        three_routes.push_back({label, [=]() -> std::optional<std::string> {
                                  const Rational closed = Rational(BigInt(b * b * (n * n * n - n)), 12);
                                  const Rational lens = lens_lambda(LensSpace(p, q), dedekind);
                                  if (lens != closed) return "lens formula " + mismatch(closed, lens);
                                  const Rational mirror =
                                      mirror_lambda(tn_path(n, Rational(n * b + 1, b)));
                                  if (mirror != closed) {
                                    return "crossing-change route " + mismatch(closed, mirror);
                                  }
                                  const auto cond = tn_lens_condition(n, Rational(n * b + 1, b));
                                  if (!cond || *cond != LensSpace(p, q)) {
                                    return std::string("homology condition names another lens space");
                                  }
                                  return std::nullopt;
                                }});
        dedekind_nb.push_back({label, [=] {
                                 return expect_equal(
                                     Rational(BigInt(2 * n * n * b * b - 3 * n * b * b + 1),
                                              BigInt(12 * n * b * b)),
                                     dedekind(p, q));
                               }});
      }
    }
    report.sweeps.push_back(
        run_sweep("lambda(L(2n^2b^2+2nb+1, 2nb^2)) = b^2(n^3-n)/12, three routes", three_routes));
    report.sweeps.push_back(
        run_sweep("s(2n^2b^2+2nb+1, 2nb^2) = (2n^2b^2-3nb^2+1)/(12nb^2)", dedekind_nb));
  }

  const long surgery_bound = std::min<long>(max_r, 30);
  {
    std::vector<Instance> hopf;
    for (long r = 1; r <= surgery_bound; ++r) {
      hopf.push_back({"r=" + std::to_string(r), [=] {
                        FramedLink link({Rational(r), Rational(-r)});
                        link.set_linking(1, 2, 1);
                        return expect_equal(Rational(0), lescop_lambda_serial(link));
                      }});
    }
    report.sweeps.push_back(run_sweep("surgery formula on Hopf(r, -r) = 0", hopf));
  }

  {
    std::vector<Instance> calibration;
    for (long p = 2; p <= surgery_bound; ++p) {
      for (long q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        calibration.push_back(
            {"p/q=" + std::to_string(p) + "/" + std::to_string(q), [=] {
               return expect_equal(lens_lambda(LensSpace(p, q), dedekind),
                                   lescop_lambda_serial(FramedLink({Rational(p, q)})));
             }});
      }
    }
    report.sweeps.push_back(run_sweep("surgery formula on p/q unknot = lens formula", calibration));
  }

  {
    std::vector<Instance> chains;
    auto add_chain = [&](std::vector<long> coeffs) {
      std::string label = "chain(";
      ChainPresentation chain;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        label += (k ? "," : "") + std::to_string(coeffs[k]);
        chain.coeffs.emplace_back(coeffs[k]);
      }
      label += ")";
      chains.push_back({label, [=] {
                          const auto [p, q] = chain_to_lens(chain);
                          return expect_equal(lens_lambda(LensSpace(p, q), dedekind),
                                              lescop_lambda_serial(chain_link(chain)));
                        }});
    };
    for (long a = 2; a <= 6; ++a)
      for (long b = 2; b <= 6; ++b) {
        add_chain({a, b});
        for (long c = 2; c <= 6; ++c) add_chain({a, b, c});
      }
    report.sweeps.push_back(run_sweep("surgery formula on chains = lens formula", chains));
  }

  return report;
}

}  // namespace cwl
