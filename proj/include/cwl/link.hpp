#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cwl/linalg.hpp"
#include "cwl/rational.hpp"

namespace cwl {

/// Hard limit imposed by the bitmask subset representation.
inline constexpr int kMaxComponents = 30;

/// A set of 1-based component labels, stored as a bitmask (bit i-1 <-> i).
/// Ordered by cardinality, then lexicographically on the sorted members.
class SubsetIndex {
 public:
  constexpr SubsetIndex() = default;
  static constexpr SubsetIndex from_mask(std::uint32_t mask) {
    SubsetIndex s;
    s.mask_ = mask;
    return s;
  }
  /// Throws DomainError on labels outside 1..kMaxComponents.
  static SubsetIndex of(std::initializer_list<int> members);
  static SubsetIndex of(const std::vector<int>& members);
  /// {1, ..., n}
  static SubsetIndex full(int n);

  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool contains(int label) const { return label >= 1 && label <= 32 && ((mask_ >> (label - 1)) & 1U); }
  int min() const;
  std::vector<int> members() const;

  SubsetIndex operator|(SubsetIndex o) const { return from_mask(mask_ | o.mask_); }
  SubsetIndex operator&(SubsetIndex o) const { return from_mask(mask_ & o.mask_); }
  SubsetIndex without(SubsetIndex o) const { return from_mask(mask_ & ~o.mask_); }
  SubsetIndex without(int label) const { return from_mask(mask_ & ~(1U << (label - 1))); }
  bool subset_of(SubsetIndex o) const { return (mask_ & ~o.mask_) == 0; }

  /// "1,2,4" (the `.lnk` spelling); "" for the empty set.
  std::string to_string() const;

  friend bool operator==(SubsetIndex a, SubsetIndex b) { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(SubsetIndex a, SubsetIndex b);

 private:
  std::uint32_t mask_ = 0;
};

/// Every nonempty subset of {1..n}, by increasing cardinality then lexicographic.
std::vector<SubsetIndex> nonempty_subsets(int n);

/// Framed link in S^3 encoded by its linking data. Components are 1-based.
class FramedLink {
 public:
  /// One component per framing. Throws DomainError for 0 or too many components.
  explicit FramedLink(std::vector<Rational> framings);

  int size() const { return static_cast<int>(framings_.size()); }
  const Rational& framing(int i) const { return framings_.at(i - 1); }
  const std::vector<Rational>& framings() const { return framings_; }
  void set_framing(int i, const Rational& s);

  /// n_{ij}; i != j.
  std::int64_t linking(int i, int j) const;
  void set_linking(int i, int j, std::int64_t v);

  /// a1(L_I), reading unspecified entries as 0.
  std::int64_t a1(SubsetIndex I) const;
  bool a1_specified(SubsetIndex I) const { return a1_.contains(I); }
  void set_a1(SubsetIndex I, std::int64_t v);
  const std::map<SubsetIndex, std::int64_t>& a1_entries() const { return a1_; }
  /// Nonempty subsets with no explicit a1 entry (each read as 0).
  std::vector<SubsetIndex> defaulted_a1_keys() const;

  /// Product of the framing denominators q_i.
  BigInt framing_denominator_product() const;

  friend bool operator==(const FramedLink&, const FramedLink&) = default;

 private:
  void check_label(int i) const;

  std::vector<Rational> framings_;
  std::vector<std::int64_t> lk_;  // n*n, symmetric, zero diagonal
  std::map<SubsetIndex, std::int64_t> a1_;
};

/// `.lnk` syntax or validation error, tagged with the 1-based line number
/// (0 when the problem is not tied to a line, e.g. a missing directive).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the `.lnk` text format.
FramedLink parse_link(std::string_view text);

/// Deterministic `.lnk` text: components, framings, nonzero lk pairs (i < j),
/// then explicit a1 entries in subset order.
std::string serialize_link(const FramedLink& link);

/// n x n matrix with diagonal s_i and off-diagonal n_{ij}.
SymRatMatrix surgery_matrix(const FramedLink& link);

/// Restriction to the components in I, relabelled 1..#I in increasing order.
/// Throws DomainError for empty I.
FramedLink sublink(const FramedLink& link, SubsetIndex I);

namespace detail {

/// Handler for directives the link grammar does not know. Receives the line
/// number and the whitespace-split tokens; returns false to reject the line.
using ExtraDirective =
    std::function<bool(std::size_t line, const std::vector<std::string_view>& tokens)>;

FramedLink parse_link_with(std::string_view text, const ExtraDirective& extra);

std::vector<std::string_view> split_tokens(std::string_view line);

}  // namespace detail

}  // namespace cwl
