#include "gpsw/word.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "gpsw/error.hpp"

namespace gpsw {

void check_modulus(std::uint32_t m) {
  if (m < 2 || m > kMaxModulus) {
    throw DomainError("modulus must lie in [2, 65536], got " + std::to_string(m));
  }
}

Word::Word(std::uint32_t modulus) : modulus_(modulus) { check_modulus(modulus); }

Word::Word(std::uint32_t modulus, std::vector<Letter> letters)
    : modulus_(modulus), letters_(std::move(letters)) {
  check_modulus(modulus);
  for (Letter a : letters_) {
    if (a >= modulus_) {
      throw AlphabetError("letter " + std::to_string(a) + " is not in Z_" + std::to_string(modulus_));
    }
  }
}

Word Word::prefix(std::size_t length) const {
  Word out(modulus_);
  length = std::min(length, letters_.size());
  out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(length));
  return out;
}

Word Word::suffix(std::size_t length) const {
  Word out(modulus_);
  length = std::min(length, letters_.size());
  out.letters_.assign(letters_.end() - static_cast<std::ptrdiff_t>(length), letters_.end());
  return out;
}

Word Word::factor(std::size_t pos, std::size_t length) const {
  Word out(modulus_);
  pos = std::min(pos, letters_.size());
  length = std::min(length, letters_.size() - pos);
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  out.letters_.assign(first, first + static_cast<std::ptrdiff_t>(length));
  return out;
}

void Word::truncate(std::size_t length) {
  if (length < letters_.size()) letters_.resize(length);
}

Word& Word::append(const Word& other) {
  if (other.modulus_ != modulus_) {
    throw ModulusMismatchError("cannot concatenate words over Z_" + std::to_string(modulus_) +
                               " and Z_" + std::to_string(other.modulus_));
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word& Word::append(std::span<const Letter> other) {
  letters_.insert(letters_.end(), other.begin(), other.end());
  return *this;
}

std::string Word::to_string() const { return format_word(*this); }

Word operator+(Word lhs, const Word& rhs) {
  lhs.append(rhs);
  return lhs;
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

Letter checked_letter(std::uint64_t value, std::uint32_t m) {
  if (value >= m) {
    throw AlphabetError("letter " + std::to_string(value) + " is not in Z_" + std::to_string(m));
  }
  return static_cast<Letter>(value);
}

}  // namespace

Word parse_word(std::string_view text, std::uint32_t m) {
  check_modulus(m);
  text = trim(text);
  std::vector<Letter> letters;
  const bool comma_separated = m > 10 || text.find(',') != std::string_view::npos;
  if (!comma_separated) {
    letters.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError(std::string("unexpected character '") + c + "' in word");
      }
      letters.push_back(checked_letter(static_cast<std::uint64_t>(c - '0'), m));
    }
    return Word(m, std::move(letters));
  }
  if (text.empty()) return Word(m);
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("malformed letter '" + std::string(token) + "' in word");
    }
    letters.push_back(checked_letter(value, m));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(m, std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  if (w.modulus() <= 10) {
    out.reserve(w.size());
    for (Letter a : w) out.push_back(static_cast<char>('0' + a));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

std::vector<std::size_t> jumps(const Word& w) {
  std::vector<std::size_t> out;
  const auto m = w.modulus();
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    if (w[j + 1] != add_mod(w[j], 1, m)) out.push_back(j);
  }
  return out;
}

bool has_jump(std::span<const Letter> w, std::uint32_t m) {
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    if (w[j + 1] != add_mod(w[j], 1, m)) return true;
  }
  return false;
}

bool is_prefix(const Word& u, const Word& v) {
  if (u.modulus() != v.modulus()) throw ModulusMismatchError("is_prefix: moduli differ");
  return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

std::optional<std::size_t> first_mismatch(const Word& u, const Word& v) {
  if (u.modulus() != v.modulus()) throw ModulusMismatchError("first_mismatch: moduli differ");
  const auto n = std::min(u.size(), v.size());
  const auto [it, _] = std::mismatch(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n), v.begin());
  if (it == u.begin() + static_cast<std::ptrdiff_t>(n)) return std::nullopt;
  return static_cast<std::size_t>(it - u.begin());
}

bool contains_factor(std::span<const Letter> haystack, std::span<const Letter> needle) {
  if (needle.empty()) return true;
  return std::search(haystack.begin(), haystack.end(),
                     std::boyer_moore_horspool_searcher(needle.begin(), needle.end())) != haystack.end();
}

}  // namespace gpsw
