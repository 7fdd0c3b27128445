#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpsw/word.hpp"

namespace gpsw {

// Elements of I_2(m): shifts k -> k + t (morphisms) and reflections
// k -> x - k (involutory antimorphisms Psi_x). An antimorphism also reverses
// the word it acts on.
class DihedralElement {
 public:
  enum class Kind : std::uint8_t { morphism, antimorphism };

  static DihedralElement shift(std::uint64_t t, std::uint32_t m);
  static DihedralElement psi(std::uint64_t x, std::uint32_t m);
  static DihedralElement identity(std::uint32_t m) { return shift(0, m); }

  Kind kind() const { return kind_; }
  bool is_antimorphism() const { return kind_ == Kind::antimorphism; }
  Letter parameter() const { return parameter_; }
  std::uint32_t modulus() const { return modulus_; }

  Letter operator()(Letter k) const {
    return is_antimorphism() ? sub_mod(parameter_, k, modulus_) : add_mod(k, parameter_, modulus_);
  }
  Word operator()(const Word& w) const;

  // "psi:x" for antimorphisms, "shift:t" for morphisms.
  std::string to_string() const;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;

 private:
  DihedralElement(Kind kind, Letter parameter, std::uint32_t m)
      : kind_(kind), parameter_(parameter), modulus_(m) {}

  Kind kind_ = Kind::morphism;
  Letter parameter_ = 0;
  std::uint32_t modulus_ = 2;
};

// Psi_x; throws DomainError when x >= m.
DihedralElement psi(std::uint64_t x, std::uint32_t m);

Word apply(const DihedralElement& g, const Word& w);

// The element acting as g(h(.)).
DihedralElement compose(const DihedralElement& g, const DihedralElement& h);
DihedralElement inverse(const DihedralElement& g);

struct DihedralGroup {
  std::uint32_t modulus = 2;
  // Shifts 0..m-1 followed by Psi_0..Psi_{m-1}.
  std::vector<DihedralElement> elements;

  std::vector<DihedralElement> antimorphisms() const;
};

DihedralGroup dihedral_group(std::uint32_t m);

// The antimorphism Psi' with Psi o phi_{b,m} = phi_{b,m} o Psi', namely
// Psi_{x-b+1}. Only defined for antimorphisms.
DihedralElement conjugate_through_phi(const DihedralElement& g, std::uint64_t b);

// Accepts "psi:x", and "R"/"E" as aliases of psi:0/psi:1 when m == 2.
DihedralElement parse_antimorphism(std::string_view text, std::uint32_t m);
// "R"/"E" for m == 2, "psi:x" otherwise.
std::string antimorphism_name(const DihedralElement& g);

}  // namespace gpsw
