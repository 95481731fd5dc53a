#include <gtest/gtest.h>

#include "cwl/link.hpp"
#include "oracles.hpp"

using cwl::FramedLink;
using cwl::ParseError;
using cwl::Rational;
using cwl::SubsetIndex;
using cwl::SymRatMatrix;

namespace {

FramedLink chain3(long a, long b, long c) {
  FramedLink link({Rational(a), Rational(b), Rational(c)});
  link.set_linking(1, 2, 1);
  link.set_linking(2, 3, 1);
  return link;
}

std::size_t error_line(const std::string& text) {
  try {
    cwl::parse_link(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ~std::size_t{0};
}

}  // namespace

TEST(SubsetIndex, OrderingAndMembers) {
  const auto subsets = cwl::nonempty_subsets(3);
  std::vector<std::string> spelled;
  for (SubsetIndex s : subsets) spelled.push_back(s.to_string());
  EXPECT_EQ(spelled, (std::vector<std::string>{"1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"}));
  EXPECT_EQ(SubsetIndex::of({3, 1}).members(), (std::vector<int>{1, 3}));
  EXPECT_EQ(SubsetIndex::of({2, 5}).min(), 2);
  EXPECT_THROW(SubsetIndex{}.min(), cwl::DomainError);
  EXPECT_THROW(SubsetIndex::of({0}), cwl::DomainError);
}

TEST(ParseLink, HopfPattern) {
  const FramedLink link = cwl::parse_link(
      "components 2\n"
      "framing 1 3/1\n"
      "framing 2 -3/1\n"
      "lk 1 2 2\n");
  EXPECT_EQ(link.size(), 2);
  EXPECT_EQ(link.framing(1), Rational(3));
  EXPECT_EQ(link.framing(2), Rational(-3));
  EXPECT_EQ(link.linking(1, 2), 2);
  EXPECT_EQ(link.linking(2, 1), 2);
  EXPECT_EQ(link.defaulted_a1_keys().size(), 3U);
}

TEST(ParseLink, UnknotAndCanonicalization) {
  const FramedLink u = cwl::parse_link("components 1\nframing 1 5/3\n");
  EXPECT_EQ(u.framing(1), Rational(5, 3));
  const FramedLink v = cwl::parse_link("components 1\nframing 1 4/2\n");
  EXPECT_EQ(v.framing(1), Rational(2));
  EXPECT_EQ(cwl::serialize_link(v), "components 1\nframing 1 2/1\n");
}

TEST(ParseLink, CommentsBlankLinesAndA1) {
  const FramedLink link = cwl::parse_link(
      "# a comment\n"
      "components 3   # trailing\n"
      "\n"
      "framing 3 1/2\n"
      "framing 1 -1\n"
      "framing 2 2/1\n"
      "lk 2 1 -1\n"
      "lk 1 2 -1\n"
      "a1 1,3 4\n"
      "a1 1,2,3 -2\n");
  EXPECT_EQ(link.linking(1, 2), -1);
  EXPECT_EQ(link.linking(1, 3), 0);
  EXPECT_EQ(link.a1(SubsetIndex::of({1, 3})), 4);
  EXPECT_EQ(link.a1(SubsetIndex::of({1, 2, 3})), -2);
  EXPECT_EQ(link.a1(SubsetIndex::of({2})), 0);
  EXPECT_FALSE(link.a1_specified(SubsetIndex::of({2})));
  EXPECT_EQ(link.defaulted_a1_keys().size(), 5U);
}

TEST(ParseLink, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("framing 1 1/1\n"), 1U);                                 // components first
  EXPECT_EQ(error_line("components 2\nframing 1 1/1\n"), 0U);                   // missing framing
  EXPECT_EQ(error_line("components 1\nframing 1 1/0\n"), 2U);                   // q = 0
  EXPECT_EQ(error_line("components 1\nframing 1 1/-2\n"), 2U);                  // negative q
  EXPECT_EQ(error_line("components 1\nframing 2 1/1\n"), 2U);                   // out of range
  EXPECT_EQ(error_line("components 2\nframing 1 1\nframing 2 1\nlk 1 1 3\n"), 4U);  // i = j
  EXPECT_EQ(error_line("components 2\nframing 1 1\nframing 2 1\nlk 1 2 3\nlk 2 1 4\n"), 5U);
  EXPECT_EQ(error_line("components 2\nframing 1 1\nframing 2 1\na1 2,1 3\n"), 4U);
  EXPECT_EQ(error_line("components 2\nframing 1 1\nframing 2 1\na1 1,,2 3\n"), 4U);
  EXPECT_EQ(error_line("components 2\nframing 1 1\nframing 2 1\na1 1,3 3\n"), 4U);
  EXPECT_EQ(error_line("components 1\nframing 1 1\nframing 1 2\n"), 3U);       // conflict
  EXPECT_EQ(error_line("components 1\nframing 1 1\nfoo 1\n"), 3U);             // unknown
  EXPECT_EQ(error_line("components 0\n"), 1U);
  EXPECT_EQ(error_line("components 1\ncomponents 1\n"), 2U);
  EXPECT_EQ(error_line("components 1\nframing 1 1 2\n"), 2U);                  // arity
  EXPECT_EQ(error_line(""), 0U);
}

TEST(ParseLink, DuplicateConsistentLinesAreAccepted) {
  EXPECT_NO_THROW(cwl::parse_link("components 2\nframing 1 1\nframing 1 2/2\nframing 2 1\n"
                                  "lk 1 2 3\nlk 2 1 3\n"));
}

TEST(SurgeryMatrix, Examples) {
  for (long r = 1; r <= 4; ++r) {
    FramedLink hopf({Rational(r), Rational(-r)});
    hopf.set_linking(1, 2, 1);
    EXPECT_EQ(cwl::surgery_matrix(hopf), (SymRatMatrix{{r, 1}, {1, -r}}));
  }
  EXPECT_EQ(cwl::surgery_matrix(chain3(2, 2, 2)), (SymRatMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}));
  EXPECT_EQ(cwl::surgery_matrix(FramedLink({Rational(5, 3)})), (SymRatMatrix{{Rational(5, 3)}}));
}

TEST(Sublink, Examples) {
  const FramedLink chain = chain3(2, 3, 4);
  const FramedLink ends = cwl::sublink(chain, SubsetIndex::of({1, 3}));
  EXPECT_EQ(ends.size(), 2);
  EXPECT_EQ(ends.linking(1, 2), 0);
  EXPECT_EQ(ends.framing(2), Rational(4));
  const FramedLink middle = cwl::sublink(chain, SubsetIndex::of({2}));
  EXPECT_EQ(middle.size(), 1);
  EXPECT_EQ(middle.framing(1), Rational(3));
  EXPECT_EQ(cwl::sublink(chain, SubsetIndex::full(3)), chain);
  EXPECT_THROW(cwl::sublink(chain, SubsetIndex{}), cwl::DomainError);
}

TEST(Sublink, ReindexesA1Keys) {
  FramedLink link = chain3(2, 2, 2);
  link.set_a1(SubsetIndex::of({2, 3}), 7);
  link.set_a1(SubsetIndex::of({1, 2}), 5);
  const FramedLink sub = cwl::sublink(link, SubsetIndex::of({2, 3}));
  EXPECT_EQ(sub.a1(SubsetIndex::of({1, 2})), 7);
  EXPECT_EQ(sub.a1_entries().size(), 1U);
}

TEST(Sublink, MatrixIsPrincipalSubmatrix) {
  cwl::oracle::Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    const int n = static_cast<int>(cwl::oracle::uniform(rng, 1, 5));
    const FramedLink link = cwl::oracle::random_link(rng, n, {.max_q = 4});
    const SymRatMatrix A = cwl::surgery_matrix(link);
    for (SubsetIndex I : cwl::nonempty_subsets(n)) {
      std::vector<std::size_t> rows;
      for (int m : I.members()) rows.push_back(static_cast<std::size_t>(m - 1));
      EXPECT_EQ(cwl::surgery_matrix(cwl::sublink(link, I)), A.principal(rows));
    }
  }
}

TEST(SerializeLink, RoundTripsRandomLinks) {
  cwl::oracle::Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const int n = static_cast<int>(cwl::oracle::uniform(rng, 1, 6));
    FramedLink link = cwl::oracle::random_link(rng, n, {.max_q = 5});
    // A sparse, partly explicit a1 table exercises the defaulted-key tracking.
    for (SubsetIndex I : cwl::nonempty_subsets(n))
      if (cwl::oracle::uniform(rng, 0, 2) == 0) link.set_a1(I, cwl::oracle::uniform(rng, -3, 3));
    const std::string text = cwl::serialize_link(link);
    const FramedLink back = cwl::parse_link(text);
    EXPECT_EQ(back, link);
    EXPECT_EQ(back.defaulted_a1_keys(), link.defaulted_a1_keys());
    EXPECT_EQ(cwl::serialize_link(back), text);
  }
}

TEST(SerializeLink, DeterministicLayout) {
  FramedLink link({Rational(-1, 2), Rational(3)});
  link.set_linking(2, 1, 2);
  link.set_a1(SubsetIndex::of({1, 2}), -1);
  link.set_a1(SubsetIndex::of({2}), 0);
  EXPECT_EQ(cwl::serialize_link(link),
            "components 2\n"
            "framing 1 -1/2\n"
            "framing 2 3/1\n"
            "lk 1 2 2\n"
            "a1 2 0\n"
            "a1 1,2 -1\n");
}
