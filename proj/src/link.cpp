#include "cwl/link.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

namespace cwl {

// ---------------------------------------------------------------------------
// SubsetIndex

SubsetIndex SubsetIndex::of(std::initializer_list<int> members) {
  return of(std::vector<int>(members));
}

SubsetIndex SubsetIndex::of(const std::vector<int>& members) {
  std::uint32_t mask = 0;
  for (int m : members) {
    if (m < 1 || m > kMaxComponents) throw DomainError("component label out of range");
    mask |= 1U << (m - 1);
  }
  return from_mask(mask);
}

SubsetIndex SubsetIndex::full(int n) {
  if (n < 0 || n > kMaxComponents) throw DomainError("component count out of range");
  return from_mask(n == 0 ? 0U : (n == 32 ? ~0U : ((1U << n) - 1)));
}

int SubsetIndex::size() const { return std::popcount(mask_); }

int SubsetIndex::min() const {
  if (mask_ == 0) throw DomainError("min of empty subset");
  return std::countr_zero(mask_) + 1;
}

std::vector<int> SubsetIndex::members() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string SubsetIndex::to_string() const {
  std::string out;
  for (int m : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(m);
  }
  return out;
}

std::strong_ordering operator<=>(SubsetIndex a, SubsetIndex b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.members() <=> b.members();
}

std::vector<SubsetIndex> nonempty_subsets(int n) {
  std::vector<SubsetIndex> out;
  const std::uint32_t full = SubsetIndex::full(n).mask();
  out.reserve(full);
  for (std::uint32_t m = 1; m <= full && m != 0; ++m) out.push_back(SubsetIndex::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// FramedLink

FramedLink::FramedLink(std::vector<Rational> framings) : framings_(std::move(framings)) {
  const std::size_t n = framings_.size();
  if (n == 0) throw DomainError("a framed link needs at least one component");
  if (n > static_cast<std::size_t>(kMaxComponents)) throw DomainError("too many components");
  lk_.assign(n * n, 0);
}

void FramedLink::check_label(int i) const {
  if (i < 1 || i > size()) {
    throw DomainError("component " + std::to_string(i) + " out of range 1.." +
                      std::to_string(size()));
  }
}

void FramedLink::set_framing(int i, const Rational& s) {
  check_label(i);
  framings_[i - 1] = s;
}

std::int64_t FramedLink::linking(int i, int j) const {
  check_label(i);
  check_label(j);
  if (i == j) throw DomainError("linking number needs two distinct components");
  return lk_[(i - 1) * framings_.size() + (j - 1)];
}

void FramedLink::set_linking(int i, int j, std::int64_t v) {
  check_label(i);
  check_label(j);
  if (i == j) throw DomainError("linking number needs two distinct components");
  const std::size_t n = framings_.size();
  lk_[(i - 1) * n + (j - 1)] = v;
  lk_[(j - 1) * n + (i - 1)] = v;
}

std::int64_t FramedLink::a1(SubsetIndex I) const {
  auto it = a1_.find(I);
  return it == a1_.end() ? 0 : it->second;
}

void FramedLink::set_a1(SubsetIndex I, std::int64_t v) {
  if (I.empty() || !I.subset_of(SubsetIndex::full(size()))) {
    throw DomainError("a1 key must be a nonempty subset of the components");
  }
  a1_[I] = v;
}

std::vector<SubsetIndex> FramedLink::defaulted_a1_keys() const {
  std::vector<SubsetIndex> out;
  for (SubsetIndex I : nonempty_subsets(size()))
    if (!a1_.contains(I)) out.push_back(I);
  return out;
}

BigInt FramedLink::framing_denominator_product() const {
  BigInt prod = 1;
  for (const Rational& s : framings_) prod *= s.den();
  return prod;
}

// ---------------------------------------------------------------------------
// Text format

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace detail {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

namespace {

int parse_label(std::size_t line, std::string_view tok, int n) {
  BigInt v;
  try {
    v = parse_integer(tok);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "malformed component index '" + std::string(tok) + "'");
  }
  if (v < 1 || v > n) {
    throw ParseError(line, "component index " + std::string(tok) + " out of range 1.." +
                               std::to_string(n));
  }
  return static_cast<int>(v.get_si());
}

std::int64_t parse_int64(std::size_t line, std::string_view tok) {
  BigInt v;
  try {
    v = parse_integer(tok);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "malformed integer '" + std::string(tok) + "'");
  }
  if (!v.fits_slong_p()) throw ParseError(line, "integer out of range '" + std::string(tok) + "'");
  return v.get_si();
}

Rational parse_framing(std::size_t line, std::string_view tok) {
  try {
    return Rational::parse(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, std::string("bad framing: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(line, std::string("bad framing: ") + e.what());
  }
}

SubsetIndex parse_subset(std::size_t line, std::string_view tok, int n) {
  std::vector<int> members;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = tok.find(',', start);
    const std::string_view part =
        tok.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (part.empty()) throw ParseError(line, "malformed subset '" + std::string(tok) + "'");
    const int label = parse_label(line, part, n);
    if (!members.empty() && label <= members.back()) {
      throw ParseError(line, "subset indices must be strictly increasing in '" +
                                 std::string(tok) + "'");
    }
    members.push_back(label);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SubsetIndex::of(members);
}

void expect_arity(std::size_t line, const std::vector<std::string_view>& tokens,
                  std::size_t count) {
  if (tokens.size() != count) {
    throw ParseError(line, "'" + std::string(tokens[0]) + "' expects " +
                               std::to_string(count - 1) + " argument(s)");
  }
}

}  // namespace

FramedLink parse_link_with(std::string_view text, const ExtraDirective& extra) {
  std::optional<FramedLink> link;
  std::vector<bool> framed;
  std::vector<std::vector<bool>> lk_seen;
  bool in_extra = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const std::string_view verb = tokens[0];

    const bool link_directive =
        verb == "components" || verb == "framing" || verb == "lk" || verb == "a1";
    if (link_directive && in_extra) {
      throw ParseError(line_no, "'" + std::string(verb) + "' must precede the path block");
    }

    if (verb == "components") {
      expect_arity(line_no, tokens, 2);
      if (link) throw ParseError(line_no, "duplicate 'components' directive");
      const std::int64_t n = parse_int64(line_no, tokens[1]);
      if (n < 1 || n > kMaxComponents) {
        throw ParseError(line_no, "component count must be in 1.." +
                                      std::to_string(kMaxComponents));
      }
      link.emplace(std::vector<Rational>(static_cast<std::size_t>(n)));
      framed.assign(n, false);
      lk_seen.assign(n, std::vector<bool>(n, false));
      continue;
    }
    if (!link) throw ParseError(line_no, "'components' must be the first directive");
    const int n = link->size();

    if (verb == "framing") {
      expect_arity(line_no, tokens, 3);
      const int i = parse_label(line_no, tokens[1], n);
      const Rational s = parse_framing(line_no, tokens[2]);
      if (framed[i - 1] && link->framing(i) != s) {
        throw ParseError(line_no, "conflicting framing for component " + std::to_string(i));
      }
      link->set_framing(i, s);
      framed[i - 1] = true;
    } else if (verb == "lk") {
      expect_arity(line_no, tokens, 4);
      const int i = parse_label(line_no, tokens[1], n);
      const int j = parse_label(line_no, tokens[2], n);
      if (i == j) throw ParseError(line_no, "lk needs two distinct components");
      const std::int64_t v = parse_int64(line_no, tokens[3]);
      if (lk_seen[i - 1][j - 1] && link->linking(i, j) != v) {
        throw ParseError(line_no, "conflicting lk for components " + std::to_string(i) + " " +
                                      std::to_string(j));
      }
      link->set_linking(i, j, v);
      lk_seen[i - 1][j - 1] = lk_seen[j - 1][i - 1] = true;
    } else if (verb == "a1") {
      expect_arity(line_no, tokens, 3);
      const SubsetIndex I = parse_subset(line_no, tokens[1], n);
      const std::int64_t v = parse_int64(line_no, tokens[2]);
      if (link->a1_specified(I) && link->a1(I) != v) {
        throw ParseError(line_no, "conflicting a1 for sublink " + I.to_string());
      }
      link->set_a1(I, v);
    } else if (extra && extra(line_no, tokens)) {
      in_extra = true;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(verb) + "'");
    }
  }

  if (!link) throw ParseError(0, "missing 'components' directive");
  for (int i = 1; i <= link->size(); ++i) {
    if (!framed[i - 1]) throw ParseError(0, "missing framing for component " + std::to_string(i));
  }
  return *std::move(link);
}

}  // namespace detail

FramedLink parse_link(std::string_view text) { return detail::parse_link_with(text, nullptr); }

std::string serialize_link(const FramedLink& link) {
  std::ostringstream out;
  const int n = link.size();
  out << "components " << n << '\n';
  for (int i = 1; i <= n; ++i) {
    const Rational& s = link.framing(i);
    out << "framing " << i << ' ' << s.num().get_str() << '/' << s.den().get_str() << '\n';
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (link.linking(i, j) != 0) out << "lk " << i << ' ' << j << ' ' << link.linking(i, j) << '\n';
  for (const auto& [I, v] : link.a1_entries()) out << "a1 " << I.to_string() << ' ' << v << '\n';
  return out.str();
}

SymRatMatrix surgery_matrix(const FramedLink& link) {
  const int n = link.size();
  SymRatMatrix A(n);
  for (int i = 1; i <= n; ++i) {
    A.set(i - 1, i - 1, link.framing(i));
    for (int j = i + 1; j <= n; ++j) A.set(i - 1, j - 1, Rational(link.linking(i, j)));
  }
  return A;
}

FramedLink sublink(const FramedLink& link, SubsetIndex I) {
  if (I.empty()) throw DomainError("sublink of the empty index set");
  if (!I.subset_of(SubsetIndex::full(link.size()))) throw DomainError("sublink index out of range");
  const std::vector<int> members = I.members();
  std::vector<Rational> framings;
  for (int m : members) framings.push_back(link.framing(m));
  FramedLink out(std::move(framings));

  std::vector<int> relabel(link.size() + 1, 0);
  for (std::size_t a = 0; a < members.size(); ++a) relabel[members[a]] = static_cast<int>(a) + 1;

  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      out.set_linking(static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                      link.linking(members[a], members[b]));

  for (const auto& [K, v] : link.a1_entries()) {
    if (!K.subset_of(I)) continue;
    std::vector<int> renamed;
    for (int m : K.members()) renamed.push_back(relabel[m]);
    out.set_a1(SubsetIndex::of(renamed), v);
  }
  return out;
}

}  // namespace cwl
