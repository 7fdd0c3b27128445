#include "gpsw/thue_morse.hpp"

#include <algorithm>
#include <numeric>

#include "gpsw/dihedral.hpp"
#include "gpsw/error.hpp"

namespace gpsw {

TbmParams::TbmParams(std::uint32_t base, std::uint32_t modulus) : b(base), m(modulus) {
  if (b < 2) throw DomainError("base b must be at least 2, got " + std::to_string(b));
  check_modulus(m);
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t b) {
  if (b < 2) throw DomainError("base b must be at least 2");
  std::uint64_t s = 0;
  for (; n > 0; n /= b) s += n % b;
  return s;
}

namespace {

void check_cap(std::size_t length, std::size_t max_len) {
  if (length > max_len) {
    throw ResourceError("word of length " + std::to_string(length) + " exceeds the cap " + std::to_string(max_len));
  }
}

}  // namespace

Word tbm_prefix(const TbmParams& p, std::size_t length, std::size_t max_len) {
  check_cap(length, max_len);
  // s_b(n) = s_b(n / b) + n mod b.
  std::vector<Letter> t(length);
  for (std::size_t n = 1; n < length; ++n) t[n] = add_mod(t[n / p.b], n % p.b, p.m);
  return Word(p.m, std::move(t));
}

Word Substitution::image(Letter k) const {
  Word out(params_.m);
  out.reserve(params_.b);
  for (std::uint32_t i = 0; i < params_.b; ++i) out.push_back(std::uint64_t{k} + i);
  return out;
}

Word Substitution::operator()(const Word& w) const {
  if (w.modulus() != params_.m) throw ModulusMismatchError("phi: word over the wrong alphabet");
  Word out(params_.m);
  out.reserve(w.size() * params_.b);
  for (Letter k : w) {
    for (std::uint32_t i = 0; i < params_.b; ++i) out.push_back(std::uint64_t{k} + i);
  }
  return out;
}

Word phi_apply(const TbmParams& p, const Word& w) { return Substitution(p)(w); }

Word phi_power_0(const TbmParams& p, unsigned n, std::size_t max_len) {
  std::size_t length = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (length > max_len / p.b) check_cap(max_len + 1, max_len);
    length *= p.b;
  }
  check_cap(length, max_len);
  const Substitution phi(p);
  Word w(p.m, {0});
  for (unsigned i = 0; i < n; ++i) w = phi(w);
  return w;
}

Word phi_fixed_point_prefix(const TbmParams& p, std::size_t length, std::size_t max_len) {
  check_cap(length, max_len);
  const Substitution phi(p);
  Word w(p.m, {0});
  // phi maps a prefix of the fixed point to a longer prefix of it.
  while (w.size() < length) {
    w.truncate((length + p.b - 1) / p.b);
    w = phi(w);
  }
  w.truncate(length);
  return w;
}

std::uint32_t order_q(const TbmParams& p) {
  const std::uint32_t step = (p.b - 1) % p.m;
  return p.m / std::gcd(step, p.m);
}

bool is_periodic(const TbmParams& p) { return p.b % p.m == 1 % p.m; }

namespace {

// Letters w_0..w_k of the phi-blocks covering v when v starts at offset r of
// the first block, or nothing when v is inconsistent with that alignment.
std::optional<Word> aligned_preimage(const Word& v, const TbmParams& p, std::uint32_t r) {
  const auto blocks = (r + v.size() + p.b - 1) / p.b;
  std::vector<int> letters(blocks, -1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto pos = r + i;
    const auto k = sub_mod(v[i], pos % p.b, p.m);
    auto& slot = letters[pos / p.b];
    if (slot >= 0 && slot != k) return std::nullopt;
    slot = k;
  }
  std::vector<Letter> out(letters.begin(), letters.end());
  return Word(p.m, std::move(out));
}

bool in_image(const Word& v, const Substitution& phi, const Word& w, std::size_t first, std::size_t count) {
  return contains_factor(phi(w.factor(first, count)).letters(), v.letters());
}

// Ancestors of v, assuming v is a factor of t.
std::vector<Word> ancestors_unchecked(const Word& v, const TbmParams& p) {
  const Substitution phi(p);
  std::vector<Word> out;
  if (v.empty()) return out;
  // Any ancestor has an occurrence of v touching its first and last blocks,
  // so it is the preimage of v under one of the b alignments.
  for (std::uint32_t r = 0; r < p.b; ++r) {
    auto w = aligned_preimage(v, p, r);
    if (!w) continue;
    const auto k = w->size();
    if (in_image(v, phi, *w, 1, k - 1) || in_image(v, phi, *w, 0, k - 1)) continue;
    out.push_back(std::move(*w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Word> ancestors(const Word& v, const TbmParams& p, const Word& scanned) {
  if (v.modulus() != p.m || scanned.modulus() != p.m) throw ModulusMismatchError("ancestors: moduli differ");
  if (!contains_factor(scanned.letters(), v.letters())) {
    throw NotAFactorError(format_word(v) + " does not occur in the first " + std::to_string(scanned.size()) +
                          " letters of t_{" + std::to_string(p.b) + "," + std::to_string(p.m) + "}");
  }
  return ancestors_unchecked(v, p);
}

std::vector<Word> ancestors(const Word& v, const TbmParams& p) {
  if (v.modulus() != p.m) throw ModulusMismatchError("ancestors: moduli differ");
  if (!is_tbm_factor(v, p)) {
    throw NotAFactorError(format_word(v) + " is not a factor of t_{" + std::to_string(p.b) + "," +
                          std::to_string(p.m) + "}");
  }
  return ancestors_unchecked(v, p);
}

std::vector<std::pair<Letter, Letter>> two_letter_factors(const TbmParams& p, std::size_t max_len) {
  const std::size_t expected = std::size_t{p.m} * order_q(p);
  std::vector<char> seen(std::size_t{p.m} * p.m, 0);
  std::vector<std::pair<Letter, Letter>> out;
  std::vector<Letter> t{0};
  for (std::size_t n = 1; out.size() < expected; ++n) {
    check_cap(n + 1, max_len);
    t.push_back(add_mod(t[n / p.b], n % p.b, p.m));
    const auto key = std::size_t{t[n - 1]} * p.m + t[n];
    if (!seen[key]) {
      seen[key] = 1;
      out.emplace_back(t[n - 1], t[n]);
    }
  }
  return out;
}

std::vector<Word> covering_blocks(const TbmParams& p, std::size_t n, std::size_t max_len) {
  std::size_t block = 1;
  unsigned k = 0;
  while (block < n) {
    check_cap(2 * block * p.b, max_len);
    block *= p.b;
    ++k;
  }
  const Word base = phi_power_0(p, k, max_len);
  std::vector<Word> out;
  for (const auto& [x, y] : two_letter_factors(p, max_len)) {
    Word w = DihedralElement::shift(x, p.m)(base);
    w.append(DihedralElement::shift(y, p.m)(base));
    out.push_back(std::move(w));
  }
  return out;
}

bool is_tbm_factor(const Word& v, const TbmParams& p) {
  if (v.modulus() != p.m) throw ModulusMismatchError("is_tbm_factor: moduli differ");
  if (v.empty()) return true;
  const auto blocks = covering_blocks(p, v.size());
  return std::any_of(blocks.begin(), blocks.end(),
                     [&](const Word& w) { return contains_factor(w.letters(), v.letters()); });
}

DirectiveBisequence canonical_directives(const TbmParams& p) {
  std::vector<Letter> period;
  for (std::uint32_t k = 1; k < p.b; ++k) period.push_back(static_cast<Letter>(k % p.m));
  std::vector<DihedralElement> thetas;
  for (std::uint32_t x = 0; x < p.m; ++x) thetas.push_back(DihedralElement::psi(x, p.m));
  return DirectiveBisequence(p.m, {0}, std::move(period), {}, std::move(thetas));
}

WordStream::WordStream(std::uint32_t modulus, Generator generator, std::size_t max_len)
    : modulus_(modulus), generator_(std::move(generator)), max_len_(max_len), state_(std::make_shared<State>()) {
  state_->cache = Word(modulus);
}

WordStream WordStream::thue_morse(const TbmParams& p, std::size_t max_len) {
  return WordStream(p.m, [p, max_len](std::size_t n) { return tbm_prefix(p, n, max_len); }, max_len);
}

WordStream WordStream::phi_fixed_point(const TbmParams& p, std::size_t max_len) {
  return WordStream(p.m, [p, max_len](std::size_t n) { return phi_fixed_point_prefix(p, n, max_len); }, max_len);
}

WordStream WordStream::gps(const DirectiveBisequence& d, std::size_t max_len) {
  return WordStream(d.modulus(), [d, max_len](std::size_t n) { return gps_prefix(d, n, max_len); }, max_len);
}

Word WordStream::prefix(std::size_t length) const {
  check_cap(length, max_len_);
  std::lock_guard lock(state_->mutex);
  if (state_->cache.size() < length) {
    const auto target = std::min(max_len_, std::max(length, 2 * state_->cache.size()));
    state_->cache = generator_(target);
  }
  return state_->cache.prefix(length);
}

}  // namespace gpsw
