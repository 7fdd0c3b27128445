#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpsw {

// Letters are residues of Z_m stored as unsigned integers.
using Letter = std::uint16_t;

inline constexpr std::uint32_t kMaxModulus = 1u << 16;

// Default upper bound on the length of any materialized word.
inline constexpr std::size_t kDefaultLengthCap = std::size_t{1} << 24;

inline Letter add_mod(std::uint64_t a, std::uint64_t b, std::uint32_t m) {
  return static_cast<Letter>((a % m + b % m) % m);
}

inline Letter sub_mod(std::uint64_t a, std::uint64_t b, std::uint32_t m) {
  return static_cast<Letter>((a % m + m - b % m) % m);
}

// Throws DomainError unless 2 <= m <= kMaxModulus.
void check_modulus(std::uint32_t m);

/// A finite word over Z_m. Equality compares the modulus and every letter.
class Word {
 public:
  Word() = default;
  explicit Word(std::uint32_t modulus);
  // Every letter must be < modulus (AlphabetError otherwise).
  Word(std::uint32_t modulus, std::vector<Letter> letters);

  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word prefix(std::size_t length) const;
  Word suffix(std::size_t length) const;
  Word factor(std::size_t pos, std::size_t length) const;

  // Appends a letter reduced mod m.
  void push_back(std::uint64_t letter) { letters_.push_back(static_cast<Letter>(letter % modulus_)); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  void truncate(std::size_t length);
  Word& append(const Word& other);
  Word& append(std::span<const Letter> other);

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::uint32_t modulus_ = 2;
  std::vector<Letter> letters_;
};

Word operator+(Word lhs, const Word& rhs);

// Compact digits when m <= 10, comma-separated decimals otherwise.
Word parse_word(std::string_view text, std::uint32_t m);
std::string format_word(const Word& w);

// Indices j with w[j+1] != w[j] + 1 (mod m), in increasing order.
std::vector<std::size_t> jumps(const Word& w);
bool has_jump(std::span<const Letter> w, std::uint32_t m);

bool is_prefix(const Word& u, const Word& v);
// Least i with u[i] != v[i]; nullopt when one word is a prefix of the other.
std::optional<std::size_t> first_mismatch(const Word& u, const Word& v);

// Whether `needle` occurs as a factor of `haystack`.
bool contains_factor(std::span<const Letter> haystack, std::span<const Letter> needle);

}  // namespace gpsw
