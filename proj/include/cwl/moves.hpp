#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cwl/link.hpp"
#include "cwl/linalg.hpp"
#include "cwl/rational.hpp"

namespace cwl {

/// Lobe data of one self-crossing change on component `component`.
/// `ka[j]` is the linking number of lobe a with component j (absent = 0);
/// lobe b is derived as n_{cj} - ka[j] and never stored.
struct CrossingStep {
  int component = 1;
  std::int64_t l = 0;  ///< linking number of the two smoothed lobes
  std::map<int, std::int64_t> ka;

  std::int64_t lobe_a(int j) const;
  std::int64_t lobe_b(const FramedLink& link, int j) const;

  /// The same crossing with the roles of the two lobes exchanged.
  CrossingStep swapped_lobes(const FramedLink& link) const;

  friend bool operator==(const CrossingStep&, const CrossingStep&) = default;
};

/// A link-homotopy: crossing changes applied in order. Self-crossing changes
/// never alter framings or linking numbers, so `link` describes every stage.
struct HomotopyPath {
  FramedLink link;
  std::vector<CrossingStep> steps;
};

/// n x n matrix with (1,1) = l, first row lobe-a linkings, first column
/// lobe-b linkings, and the surgery matrix of the other components below
/// right. Component c is moved to the first row/column; the others keep
/// their relative order. Not symmetric in general.
RatMatrix crossing_matrix(const FramedLink& link, const CrossingStep& step);

/// lambda(L^-) - lambda(L^+) = sign(A) prod(q_i) det(crossing_matrix).
/// Valid whether or not det(A) vanishes.
Rational lambda_delta(const FramedLink& link, const CrossingStep& step);

/// lambda_w(L^-) - lambda_w(L^+) = 2 det(crossing_matrix) / det(A).
/// Throws DomainError when det(A) = 0.
Rational cw_delta(const FramedLink& link, const CrossingStep& step);

/// The link with every framing replaced by s_i = -sum_{k != i} n_{ik}; each
/// row of its reduced matrices then sums to zero.
FramedLink a1_substitution(const FramedLink& link);

/// a1(L^-) - a1(L^+) = det of the crossing matrix under a1_substitution.
/// Only the linking numbers of `link` are used.
std::int64_t a1_delta(const FramedLink& link, const CrossingStep& step);

/// Sum of lambda_delta over the steps: lambda(start) - lambda(end) when every
/// step is written with the earlier link as the negative resolution.
Rational path_delta(const HomotopyPath& path);

/// T(n) with framings (s, -s): two components with linking number n and the
/// n - 1 crossing changes (l = 0, ka = {2: n - i}, i = 1..n-1) carrying it to
/// its interchanged mirror image. Throws DomainError for n < 1.
HomotopyPath tn_path(std::int64_t n, const Rational& s);

/// lambda(L_(s,-s)) = path_delta / 2 for a path ending at the interchanged
/// mirror image. Throws DomainError unless the link has two components with
/// framings (s, -s).
Rational mirror_lambda(const HomotopyPath& path);

/// Parses a `.lnk` link block followed by
///   path component <c>
///   step <l> [j:ka_j ...]
/// lines. A later `path component` line switches the component for the
/// steps that follow. Throws ParseError.
HomotopyPath parse_path(std::string_view text);

std::string serialize_path(const HomotopyPath& path);

}  // namespace cwl
