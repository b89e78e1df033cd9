#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "test_support.hpp"

namespace lieomega {
namespace {

using testing::sign;
using testing::W;

const Alphabet& example_alphabet() {
  static const Alphabet a({"x2", "x1"}, {{"w3", 3}, {"w2", 2}, {"w1", 1}});
  return a;
}

TEST(WordStatistics, ExampleWord) {
  const OmegaWord u = W("w3(x2 x1 x1, x1, w1(x2 x2 x1)) x2 x1", example_alphabet());
  EXPECT_EQ(degree(u), 11u);
  EXPECT_EQ(breadth(u), 3u);
  EXPECT_EQ(depth(u), 2u);
}

TEST(WordStatistics, SmallCases) {
  const Alphabet a = testing::letters(2);
  const Alphabet x = testing::letters(1);
  EXPECT_EQ(degree(W("x", x)), 1u);
  EXPECT_EQ(degree(W("P(P(x))", x)), 3u);
  EXPECT_EQ(depth(W("P(P(x))", x)), 2u);
  EXPECT_EQ(depth(W("x1 x2", a)), 0u);
  EXPECT_EQ(breadth(W("x x x", x)), 3u);
  EXPECT_EQ(breadth(W("P(x x x)", x)), 1u);
}

TEST(WordStatistics, DegreeByTreeWalk) {
  // Count symbols in the printed form: every name is one symbol.
  const Alphabet a = testing::letters(2);
  for (const auto& level : words_by_degree(a, 5)) {
    for (const auto& u : level) {
      const std::string s = to_string(u);
      const auto symbols = static_cast<std::uint32_t>(std::count(s.begin(), s.end(), 'x') +
                                                      std::count(s.begin(), s.end(), 'P'));
      EXPECT_EQ(symbols, u.degree()) << s;
    }
  }
}

TEST(CmpLex, PrefixIsGreater) {
  const Alphabet a = testing::letters(2);
  const Alphabet x({"x", "y"}, {});
  EXPECT_GT(sign(cmp_lex(W("x", x).primes(), W("x y", x).primes())), 0);
  EXPECT_LT(sign(cmp_lex(W("x y", x).primes(), W("x", x).primes())), 0);
  EXPECT_GT(sign(cmp_lex(W("x2 x1", a).primes(), W("x1 x2 x2", a).primes())), 0);
  EXPECT_EQ(sign(cmp_lex(W("x2 P(x1)", a).primes(), W("x2 P(x1)", a).primes())), 0);
  EXPECT_GT(sign(cmp_lex({}, W("x", x).primes())), 0);
}

TEST(CmpDl, Examples) {
  const Alphabet a = testing::letters(2);
  const Alphabet x = testing::letters(1);
  EXPECT_GT(sign(cmp_dl(W("P(x)", x), W("x", x))), 0);
  EXPECT_GT(sign(cmp_dl(W("x1 x1 x1", a), W("P(x1 x1)", a))), 0);
  EXPECT_GT(sign(cmp_dl(W("P(x2) P(x1)", a), W("P(x1) P(x2)", a))), 0);
  EXPECT_GT(sign(cmp_dl(W("x2", a), W("x1", a))), 0);
}

TEST(CmpDl, AgreesWithWeightOracleAndIsTotal) {
  const Alphabet a = testing::letters(2);
  std::vector<OmegaWord> all;
  for (const auto& level : words_by_degree(a, 5)) all.insert(all.end(), level.begin(), level.end());
  std::vector<OmegaWord> small;
  for (const auto& u : all) {
    if (u.degree() <= 4) small.push_back(u);
  }
  for (const auto& u : small) {
    for (const auto& v : small) {
      const auto c = cmp_dl(u, v);
      const auto oracle = testing::weight(u) <=> testing::weight(v);
      ASSERT_EQ(c, oracle) << to_string(u) << " vs " << to_string(v);
      ASSERT_EQ(c == 0, to_string(u) == to_string(v));
      ASSERT_EQ(c, 0 <=> cmp_dl(v, u));
    }
  }
  // Degree <= 5: sorting by cmp_dl and by the oracle gives the same strict chain.
  std::vector<OmegaWord> by_dl = all;
  std::sort(by_dl.begin(), by_dl.end(), DlLess{});
  for (std::size_t i = 1; i < by_dl.size(); ++i) {
    ASSERT_LT(sign(cmp_dl(by_dl[i - 1], by_dl[i])), 0);
    ASSERT_LT(testing::weight(by_dl[i - 1]), testing::weight(by_dl[i]));
  }
}

TEST(Words, CountPerDegreeMatchesRecursion) {
  // words(n) = sum over first prime of degree k of primes(k) * words(n - k);
  // primes(1) = #letters, primes(k) = words(k - 1) for one unary operator.
  const Alphabet a = testing::letters(2);
  const std::uint32_t n = 7;
  std::vector<std::size_t> primes(n + 1, 0), words(n + 1, 0);
  words[0] = 1;
  for (std::uint32_t d = 1; d <= n; ++d) {
    primes[d] = d == 1 ? 2 : words[d - 1];
    for (std::uint32_t k = 1; k <= d; ++k) words[d] += primes[k] * words[d - k];
  }
  words[0] = 0;
  const auto actual = words_by_degree(a, n);
  for (std::uint32_t d = 1; d <= n; ++d) {
    EXPECT_EQ(actual[d].size(), words[d]) << "degree " << d;
    std::set<std::string> distinct;
    for (const auto& u : actual[d]) distinct.insert(to_string(u));
    EXPECT_EQ(distinct.size(), actual[d].size());
  }
}

std::vector<StarWord> star_words_upto(const Alphabet& a, std::uint32_t max_degree) {
  std::vector<StarWord> out;
  std::set<std::string> seen;
  for (const auto& level : words_by_degree(a, max_degree)) {
    for (const auto& host : level) {
      for (const auto& g : a.generators()) {
        for (auto& pi : occurrences(host, OmegaWord(Prime::letter(g)))) {
          if (seen.insert(to_string(pi)).second) out.push_back(std::move(pi));
        }
      }
    }
  }
  return out;
}

TEST(CmpDl, Monomial) {
  const Alphabet a = testing::letters(2);
  const auto stars = star_words_upto(a, 4);
  std::vector<OmegaWord> words;
  for (const auto& level : words_by_degree(a, 3)) words.insert(words.end(), level.begin(), level.end());
  ASSERT_GT(stars.size(), 50u);
  for (const auto& w : words) {
    for (const auto& v : words) {
      if (cmp_dl(w, v) <= 0) continue;
      for (const auto& pi : stars) {
        ASSERT_GT(sign(cmp_dl(substitute(pi, w), substitute(pi, v))), 0)
            << to_string(pi) << " with " << to_string(w) << " > " << to_string(v);
      }
    }
  }
}

TEST(Occurrences, Examples) {
  const Alphabet a = testing::three_down_to_zero();
  auto whole = occurrences(W("P(x2) P(x1)", a), W("P(x2) P(x1)", a));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_TRUE(whole[0].is_bare());
  EXPECT_EQ(to_string(whole[0]), "*");

  auto nested = occurrences(W("P(P(x2) P(x1)) P(x0)", a), W("P(x2) P(x1)", a));
  ASSERT_EQ(nested.size(), 1u);
  EXPECT_EQ(to_string(nested[0]), "P(*) P(x0)");

  const Alphabet x = testing::letters(1);
  auto three = occurrences(W("x x x", x), W("x", x));
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(to_string(three[0]), "* x x");
  EXPECT_EQ(to_string(three[1]), "x * x");
  EXPECT_EQ(to_string(three[2]), "x x *");

  EXPECT_TRUE(occurrences(W("x2 x1", a), W("x0", a)).empty());
}

TEST(Occurrences, LeftmostOutermostOrder) {
  const Alphabet x = testing::letters(1);
  auto occ = occurrences(W("P(x) P(P(x))", x), W("P(x)", x));
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(to_string(occ[0]), "* P(P(x))");
  EXPECT_EQ(to_string(occ[1]), "P(x) P(*)");
}

TEST(Occurrences, InverseOfSubstitute) {
  const Alphabet a = testing::letters(2);
  std::size_t checked = 0;
  for (const auto& level : words_by_degree(a, 5)) {
    for (const auto& host : level) {
      std::vector<OmegaWord> subs;
      testing::subwords(host, subs);
      for (const auto& pattern : subs) {
        for (const auto& pi : occurrences(host, pattern)) {
          ASSERT_EQ(substitute(pi, pattern), host);
          ASSERT_EQ(pi.degree() - 1 + pattern.degree(), host.degree());
          const auto again = occurrences(substitute(pi, pattern), pattern);
          ASSERT_NE(std::find(again.begin(), again.end(), pi), again.end());
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Substitute, Examples) {
  const Alphabet a = testing::three_down_to_zero();
  const Alphabet xy({"x", "y"}, {});
  EXPECT_EQ(substitute(StarWord(), W("x2 x1", a)), W("x2 x1", a));
  EXPECT_EQ(substitute(parse_star_word("P(*) P(x0)", a), W("P(x2) P(x1)", a)), W("P(P(x2) P(x1)) P(x0)", a));
  EXPECT_EQ(substitute(parse_star_word("x *", xy), W("y", xy)), W("x y", xy));
}

TEST(Overlaps, Examples) {
  const Alphabet a = testing::three_down_to_zero();
  auto one = overlaps(W("P(x2) P(x1)", a), W("P(x1) P(x0)", a));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].w, W("P(x2) P(x1) P(x0)", a));
  EXPECT_EQ(one[0].a, W("P(x0)", a));
  EXPECT_EQ(one[0].b, W("P(x2)", a));

  const Alphabet x = testing::letters(1);
  auto self = overlaps(W("P(x) P(x)", x), W("P(x) P(x)", x));
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].w, W("P(x) P(x) P(x)", x));

  EXPECT_TRUE(overlaps(W("x2", a), W("x1", a)).empty());
}

TEST(Overlaps, MatchBruteForceConcatenation) {
  const Alphabet a = testing::letters(2);
  std::vector<OmegaWord> words;
  for (const auto& level : words_by_degree(a, 4)) {
    for (const auto& u : level) {
      if (u.breadth() >= 2 && u.breadth() <= 4) words.push_back(u);
    }
  }
  for (const auto& t1 : words) {
    for (const auto& t2 : words) {
      // Brute force: every split w = t1 a = b t2 with a, b nonempty and a
      // shared border of k primes.
      std::set<std::string> expected;
      for (std::size_t k = 1; k < std::min(t1.breadth(), t2.breadth()); ++k) {
        const OmegaWord w = t1 * t2.slice(k, t2.breadth());
        if (w == t1.slice(0, t1.breadth() - k) * t2) expected.insert(to_string(w));
      }
      std::set<std::string> actual;
      for (const auto& ov : overlaps(t1, t2)) {
        ASSERT_EQ(ov.w, t1 * ov.a);
        ASSERT_EQ(ov.w, ov.b * t2);
        ASSERT_LT(ov.w.breadth(), t1.breadth() + t2.breadth());
        actual.insert(to_string(ov.w));
      }
      ASSERT_EQ(actual, expected) << to_string(t1) << " / " << to_string(t2);
    }
  }
}

TEST(AlphabetTest, RejectsBadNames) {
  EXPECT_THROW(Alphabet({"x", "x"}, {}), std::invalid_argument);
  EXPECT_THROW(Alphabet({"x"}, {{"x", 1}}), std::invalid_argument);
  EXPECT_THROW(Alphabet({"l"}, {}), std::invalid_argument);
  EXPECT_THROW(Alphabet({"x"}, {{"P", 0}}), std::invalid_argument);
  EXPECT_THROW(Alphabet({"2x"}, {}), std::invalid_argument);
  EXPECT_THROW(Alphabet({""}, {}), std::invalid_argument);
}

TEST(PrimeTest, ArityMismatch) {
  const Alphabet a({"x"}, {{"Q", 2}});
  const OmegaWord x = a.letter("x");
  EXPECT_THROW(Prime::apply(a.operators()[0], {x}), ArityMismatch);
  EXPECT_NO_THROW(Prime::apply(a.operators()[0], {x, x}));
}

}  // namespace
}  // namespace lieomega
