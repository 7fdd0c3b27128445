#include <doctest.h>

#include <random>
#include <set>

#include "gpsw/dihedral.hpp"
#include "gpsw/error.hpp"
#include "oracles.hpp"

using namespace gpsw;

TEST_SUITE("dihedral") {

TEST_CASE("letter maps of psi") {
  const auto R = psi(0, 2), E = psi(1, 2);
  CHECK(R(Letter{0}) == 0);
  CHECK(R(Letter{1}) == 1);
  CHECK(E(Letter{0}) == 1);
  CHECK(E(Letter{1}) == 0);
  const auto p = psi(2, 3);
  CHECK(p(Letter{0}) == 2);
  CHECK(p(Letter{1}) == 1);
  CHECK(p(Letter{2}) == 0);
  CHECK_THROWS_AS(psi(2, 2), DomainError);
}

TEST_CASE("apply") {
  CHECK(apply(psi(1, 2), parse_word("0110110", 2)) == parse_word("1001001", 2));
  CHECK(apply(psi(0, 2), parse_word("010", 2)) == parse_word("010", 2));
  CHECK(apply(psi(2, 3), parse_word("01", 3)) == parse_word("12", 3));
  CHECK(apply(DihedralElement::shift(1, 3), parse_word("012", 3)) == parse_word("120", 3));
  CHECK_THROWS_AS(apply(psi(0, 2), Word(3)), ModulusMismatchError);
}

TEST_CASE("compose") {
  const auto E = psi(1, 2), R = psi(0, 2);
  CHECK(compose(E, E) == DihedralElement::identity(2));
  const auto g = compose(psi(2, 3), psi(0, 3));
  CHECK(g == DihedralElement::shift(2, 3));
  for (std::size_t len = 0; len <= 3; ++len)
    for (const Word& w : oracle::all_words(3, len))
      CHECK(apply(g, w) == oracle::apply(psi(2, 3), oracle::apply(psi(0, 3), w)));
  CHECK(compose(DihedralElement::shift(1, 2), R).is_antimorphism());
  CHECK_THROWS_AS(compose(psi(0, 2), psi(0, 3)), ModulusMismatchError);
}

TEST_CASE("compose agrees with sequential application on all group pairs") {
  for (std::uint32_t m = 2; m <= 6; ++m) {
    const auto group = dihedral_group(m).elements;
    for (const auto& g : group)
      for (const auto& h : group) {
        const auto gh = compose(g, h);
        for (std::size_t len = 0; len <= 3; ++len)
          for (const Word& w : oracle::all_words(m, len)) CHECK(apply(gh, w) == apply(g, apply(h, w)));
      }
  }
}

TEST_CASE("group axioms") {
  for (std::uint32_t m : {2u, 3u, 5u, 8u}) {
    const auto G = dihedral_group(m);
    CHECK(G.elements.size() == 2 * m);
    CHECK(G.antimorphisms().size() == m);
    const std::set<DihedralElement> set(G.elements.begin(), G.elements.end());
    CHECK(set.size() == 2 * m);
    CHECK(set.count(DihedralElement::identity(m)) == 1);
    for (const auto& g : G.elements) {
      CHECK(compose(g, inverse(g)) == DihedralElement::identity(m));
      for (const auto& h : G.elements) {
        CHECK(set.count(compose(g, h)) == 1);
        for (const auto& k : G.elements) CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
      }
    }
  }
  const auto G2 = dihedral_group(2).elements;
  const std::set<DihedralElement> expect{DihedralElement::identity(2), DihedralElement::shift(1, 2), psi(0, 2),
                                         psi(1, 2)};
  CHECK(std::set<DihedralElement>(G2.begin(), G2.end()) == expect);
  CHECK_THROWS_AS(dihedral_group(1), DomainError);
}

TEST_CASE("involution and antimorphism law") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t m = 2 + i % 6;
    const auto g = psi(static_cast<std::uint64_t>(i) % m, m);
    const Word u = oracle::random_word(rng, m, i % 9), v = oracle::random_word(rng, m, i % 7);
    CHECK(apply(g, apply(g, u)) == u);
    CHECK(apply(g, u + v) == apply(g, v) + apply(g, u));
    CHECK(apply(g, u) == oracle::apply(g, u));
    // letter map is an involution with cycles of length 1 or 2
    for (Letter a = 0; a < m; ++a) CHECK(g(g(a)) == a);
  }
}

TEST_CASE("conjugate through phi") {
  CHECK(conjugate_through_phi(psi(1, 2), 2) == psi(0, 2));
  CHECK(conjugate_through_phi(psi(1, 2), 4) == psi(0, 2));
  for (std::uint32_t m = 2; m <= 6; ++m)
    for (std::uint32_t b = 2; b <= 7; ++b)
      for (std::uint32_t n = 1; n <= 4; ++n)
        for (std::uint32_t k = 0; k < b; ++k)
          CHECK(conjugate_through_phi(psi(((b - 1) * n + k) % m, m), b) == psi(((b - 1) * (n - 1) + k) % m, m));
  // E phi = phi R for the classical substitution, on all words up to length 4.
  for (std::size_t len = 0; len <= 4; ++len)
    for (const Word& w : oracle::all_words(2, len))
      CHECK(oracle::apply(psi(1, 2), oracle::phi(2, w)) == oracle::phi(2, oracle::apply(psi(0, 2), w)));
  CHECK_THROWS_AS(conjugate_through_phi(DihedralElement::shift(1, 3), 2), DomainError);
  CHECK_THROWS_AS(conjugate_through_phi(psi(1, 3), 1), DomainError);
}

TEST_CASE("antimorphism text form") {
  CHECK(parse_antimorphism("R", 2) == psi(0, 2));
  CHECK(parse_antimorphism("E", 2) == psi(1, 2));
  CHECK(parse_antimorphism("psi:3", 5) == psi(3, 5));
  CHECK_THROWS_AS(parse_antimorphism("R", 3), ParseError);
  CHECK_THROWS_AS(parse_antimorphism("psi:5", 5), AlphabetError);
  CHECK_THROWS_AS(parse_antimorphism("psi:x", 5), ParseError);
  CHECK(antimorphism_name(psi(1, 2)) == "E");
  CHECK(antimorphism_name(psi(1, 3)) == "psi:1");
  CHECK(psi(4, 7).to_string() == "psi:4");
  CHECK(DihedralElement::shift(2, 7).to_string() == "shift:2");
}

}
