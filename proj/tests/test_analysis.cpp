#include <doctest.h>

#include <random>

#include "gpsw/analysis.hpp"
#include "gpsw/closure.hpp"
#include "gpsw/error.hpp"
#include "gpsw/palindromic_tree.hpp"
#include "oracles.hpp"

using namespace gpsw;

TEST_SUITE("analysis") {

TEST_CASE("factor complexity examples") {
  const auto tm = factor_complexity(tbm_prefix({2, 2}, 4096), 4);
  CHECK(tm.values == std::vector<std::uint64_t>{2, 4, 6, 10});
  CHECK(tm.source_length == 4096);
  const auto periodic = factor_complexity(tbm_prefix({3, 2}, 500), 30);
  for (auto c : periodic.values) CHECK(c == 2);
  CHECK(factor_complexity(parse_word("0002", 3), 1).at(1) == 2);
  CHECK_THROWS_AS(factor_complexity(parse_word("01", 2), 2), DomainError);
}

TEST_CASE("factor complexity agrees with set enumeration") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const std::uint32_t m = 2 + i % 4;
    const bool random = i % 2;
    const Word w = random ? oracle::random_word(rng, m, 80) : tbm_prefix({2u + i % 5, m}, 300);
    const auto prof = factor_complexity(w, 12);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(prof.at(n) == oracle::complexity(w, n));
    // Profile invariants. Monotonicity needs every factor to extend, which a
    // finite random word does not guarantee.
    CHECK(prof.at(1) <= m);
    for (std::size_t n = 1; n < 12; ++n) {
      if (!random) CHECK(prof.at(n) <= prof.at(n + 1));
      CHECK(prof.at(n + 1) <= m * prof.at(n));
    }
    for (std::size_t n = 1; n <= 12; ++n) CHECK(prof.at(n) <= w.size() - n + 1);
  }
}

TEST_CASE("stream complexity and bounds") {
  const auto s = tbm_complexity({2, 2}, 10);
  CHECK(s.stable);
  CHECK(s.profile.at(4) == 10);
  const auto rows = complexity_bounds(s.profile, {2, 2});
  REQUIRE(rows.size() == 10);
  // q m = 4: lower bound 3n fails at n = 4, upper bound 4n holds.
  CHECK(rows[3].lower == 12);
  CHECK_FALSE(rows[3].lower_holds);
  for (const auto& r : rows) CHECK(r.upper_holds);
  const auto csv = complexity_csv(rows);
  CHECK(csv.starts_with("n,C(n),lower_bound,upper_bound,lower_holds,upper_holds\n1,2,3,4,false,true\n"));
  CHECK(complexity_csv(s.profile).starts_with("n,C(n)\n1,2\n2,4\n"));
}

TEST_CASE("stream complexity matches long prefixes") {
  for (auto [b, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 4}, {4, 2}, {2, 7}, {5, 3}}) {
    const TbmParams p(b, m);
    const auto s = tbm_complexity(p, 12);
    CHECK(s.stable);
    const Word t = tbm_prefix(p, 400000);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(s.profile.at(n) == oracle::complexity(t, n));
    for (std::size_t n = 1; n < 12; ++n) CHECK(s.profile.at(n) <= s.profile.at(n + 1));
  }
}

TEST_CASE("complexity over several words") {
  const std::vector<Word> words{parse_word("0011", 2), parse_word("110", 2), parse_word("1", 2)};
  const auto prof = factor_complexity(words, 3);
  CHECK(prof.values == std::vector<std::uint64_t>{2, 4, 3});
  CHECK(prof.source_length == 8);
}

TEST_CASE("palindrome census examples") {
  const auto c = palindrome_census(parse_word("0110110", 2));
  CHECK(c.palindromes == 8);
  CHECK(c.defect == 0);
  CHECK(c.per_antimorphism[0].second == 8);

  const auto d = palindrome_census(parse_word("01", 2));
  CHECK(d.per_antimorphism[0] == std::pair{psi(0, 2), std::uint64_t{3}});
  CHECK(d.per_antimorphism[1] == std::pair{psi(1, 2), std::uint64_t{2}});

  const auto e = palindrome_census(Word(4));
  CHECK(e.palindromes == 1);
  CHECK(e.defect == 0);
  CHECK(e.per_antimorphism.size() == 4);
  for (const auto& [g, n] : e.per_antimorphism) CHECK(n == 1);
}

TEST_CASE("census agrees with brute force and respects the richness bound") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t m = 2 + i % 4;
    const Word w = oracle::random_word(rng, m, rng() % 40);
    const auto c = palindrome_census(w);
    CHECK(c.palindromes == oracle::count_palindromes(w));
    if (m == 2) CHECK(c.palindromes == c.per_antimorphism[0].second);
    for (const auto& [g, n] : c.per_antimorphism) {
      CHECK(n == oracle::count_pseudopalindromes(w, g));
      CHECK(n <= w.size() + 1);
    }
    CHECK(c.palindromes <= w.size() + 1);
    CHECK(c.defect == w.size() + 1 - c.palindromes);
  }
  for (int i = 0; i < 200; ++i) {
    const Word w = oracle::random_word(rng, 2 + i % 4, 1 + rng() % 200);
    CHECK(palindrome_census(w).palindromes <= w.size() + 1);
  }
}

TEST_CASE("appending a letter adds at most one palindrome") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Word w = oracle::random_word(rng, 2 + i % 3, 60);
    std::uint64_t prev = 1;
    for (std::size_t l = 1; l <= w.size(); ++l) {
      const auto now = palindrome_census(w.prefix(l)).palindromes;
      CHECK((now == prev || now == prev + 1));
      prev = now;
    }
  }
}

TEST_CASE("distinct pseudopalindromes list occurrences") {
  const Word w = tbm_prefix({3, 4}, 120);
  for (std::uint32_t x = 0; x < 4; ++x) {
    const auto g = psi(x, 4);
    const auto list = distinct_pseudopalindromes(w, g);
    CHECK(list.size() == oracle::count_pseudopalindromes(w, g));
    for (auto [end, len] : list) CHECK(is_fixed(g, w.factor(end - len, len)));
  }
  CHECK_THROWS_AS(distinct_pseudopalindromes(w, DihedralElement::shift(1, 4)), DomainError);
}

TEST_CASE("palindromic tree tracks the longest suffix") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const std::uint32_t m = 2 + i % 3;
    const auto g = psi(i % m, m);
    std::vector<Letter> table(m);
    for (std::uint32_t k = 0; k < m; ++k) table[k] = g(static_cast<Letter>(k));
    PalindromicTree tree(table);
    const Word w = oracle::random_word(rng, m, 50);
    for (std::size_t l = 1; l <= w.size(); ++l) {
      tree.push_back(w[l - 1]);
      CHECK(tree.longest_suffix() == oracle::lps(w.prefix(l), g));
    }
  }
}

TEST_CASE("overlaps") {
  const auto o = find_overlap(parse_word("000", 2));
  REQUIRE(o.has_value());
  CHECK(o->position == 0);
  CHECK(o->x == 0);
  CHECK(o->v.empty());
  CHECK(o->length() == 3);
  CHECK(find_overlap(tbm_prefix({4, 2}, 64)).has_value());
  CHECK_FALSE(find_overlap(tbm_prefix({2, 2}, 4096)).has_value());
  CHECK_FALSE(find_overlap(Word(2)).has_value());
  CHECK_FALSE(find_overlap(parse_word("0110", 2)).has_value());

  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const Word w = oracle::random_word(rng, 2 + i % 3, rng() % 40);
    const auto got = find_overlap(w);
    const auto brute = oracle::overlap(w);
    REQUIRE(got.has_value() == brute.has_value());
    if (!got) continue;
    CHECK(got->position == brute->first);
    CHECK(got->v.size() + 1 == brute->second);
    Word shape(w.modulus());
    shape.push_back(got->x);
    shape.append(got->v);
    shape.push_back(got->x);
    shape.append(got->v);
    shape.push_back(got->x);
    CHECK(w.factor(got->position, shape.size()) == shape);
  }
}

}
