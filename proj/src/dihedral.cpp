#include "gpsw/dihedral.hpp"

#include <algorithm>
#include <charconv>

#include "gpsw/error.hpp"

namespace gpsw {

DihedralElement DihedralElement::shift(std::uint64_t t, std::uint32_t m) {
  check_modulus(m);
  return DihedralElement(Kind::morphism, static_cast<Letter>(t % m), m);
}

DihedralElement DihedralElement::psi(std::uint64_t x, std::uint32_t m) {
  check_modulus(m);
  return DihedralElement(Kind::antimorphism, static_cast<Letter>(x % m), m);
}

Word DihedralElement::operator()(const Word& w) const {
  if (w.modulus() != modulus_) {
    throw ModulusMismatchError("cannot apply an element of I_2(" + std::to_string(modulus_) +
                               ") to a word over Z_" + std::to_string(w.modulus()));
  }
  std::vector<Letter> out(w.size());
  if (is_antimorphism()) {
    std::transform(w.letters().rbegin(), w.letters().rend(), out.begin(), [this](Letter k) { return (*this)(k); });
  } else {
    std::transform(w.begin(), w.end(), out.begin(), [this](Letter k) { return (*this)(k); });
  }
  return Word(modulus_, std::move(out));
}

std::string DihedralElement::to_string() const {
  return (is_antimorphism() ? "psi:" : "shift:") + std::to_string(parameter_);
}

DihedralElement psi(std::uint64_t x, std::uint32_t m) {
  check_modulus(m);
  if (x >= m) {
    throw DomainError("antimorphism center " + std::to_string(x) + " is not in Z_" + std::to_string(m));
  }
  return DihedralElement::psi(x, m);
}

Word apply(const DihedralElement& g, const Word& w) { return g(w); }

DihedralElement compose(const DihedralElement& g, const DihedralElement& h) {
  if (g.modulus() != h.modulus()) throw ModulusMismatchError("compose: moduli differ");
  const auto m = g.modulus();
  using K = DihedralElement::Kind;
  // k -> x_g - (x_h - k) = k + (x_g - x_h), and so on for the mixed cases.
  if (g.kind() == K::morphism && h.kind() == K::morphism) {
    return DihedralElement::shift(g.parameter() + h.parameter(), m);
  }
  if (g.kind() == K::antimorphism && h.kind() == K::antimorphism) {
    return DihedralElement::shift(sub_mod(g.parameter(), h.parameter(), m), m);
  }
  if (g.kind() == K::morphism) {
    return DihedralElement::psi(add_mod(h.parameter(), g.parameter(), m), m);
  }
  return DihedralElement::psi(sub_mod(g.parameter(), h.parameter(), m), m);
}

DihedralElement inverse(const DihedralElement& g) {
  if (g.is_antimorphism()) return g;
  return DihedralElement::shift(sub_mod(0, g.parameter(), g.modulus()), g.modulus());
}

std::vector<DihedralElement> DihedralGroup::antimorphisms() const {
  std::vector<DihedralElement> out;
  std::copy_if(elements.begin(), elements.end(), std::back_inserter(out),
               [](const DihedralElement& g) { return g.is_antimorphism(); });
  return out;
}

DihedralGroup dihedral_group(std::uint32_t m) {
  check_modulus(m);
  DihedralGroup group{m, {}};
  group.elements.reserve(2 * std::size_t{m});
  for (std::uint32_t t = 0; t < m; ++t) group.elements.push_back(DihedralElement::shift(t, m));
  for (std::uint32_t x = 0; x < m; ++x) group.elements.push_back(DihedralElement::psi(x, m));
  return group;
}

DihedralElement conjugate_through_phi(const DihedralElement& g, std::uint64_t b) {
  if (!g.is_antimorphism()) {
    throw DomainError("conjugate_through_phi is only defined for antimorphisms");
  }
  if (b < 2) throw DomainError("base b must be at least 2");
  const auto m = g.modulus();
  return DihedralElement::psi(sub_mod(g.parameter() + 1, b % m, m), m);
}

DihedralElement parse_antimorphism(std::string_view text, std::uint32_t m) {
  check_modulus(m);
  if (text == "R" || text == "E") {
    if (m != 2) throw ParseError("aliases R and E are only defined over Z_2");
    return DihedralElement::psi(text == "R" ? 0 : 1, m);
  }
  constexpr std::string_view tag = "psi:";
  if (!text.starts_with(tag)) throw ParseError("expected psi:<x>, got '" + std::string(text) + "'");
  const auto digits = text.substr(tag.size());
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), x);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed antimorphism '" + std::string(text) + "'");
  }
  if (x >= m) throw AlphabetError("antimorphism center " + std::to_string(x) + " is not in Z_" + std::to_string(m));
  return DihedralElement::psi(x, m);
}

std::string antimorphism_name(const DihedralElement& g) {
  if (g.is_antimorphism() && g.modulus() == 2) return g.parameter() == 0 ? "R" : "E";
  return g.to_string();
}

}  // namespace gpsw
