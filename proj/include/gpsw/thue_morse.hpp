#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "gpsw/gps.hpp"
#include "gpsw/word.hpp"

namespace gpsw {

// Parameters of t_{b,m}: base b >= 2, modulus m >= 2.
struct TbmParams {
  std::uint32_t b;
  std::uint32_t m;

  TbmParams(std::uint32_t base, std::uint32_t modulus);

  friend bool operator==(const TbmParams&, const TbmParams&) = default;
};

// Sum of the base-b digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t b);

// t_n = digit_sum(n, b) mod m for n < length.
Word tbm_prefix(const TbmParams& p, std::size_t length, std::size_t max_len = kDefaultLengthCap);

// phi_{b,m}: k -> k (k+1) ... (k+b-1), letters mod m.
class Substitution {
 public:
  explicit Substitution(TbmParams params) : params_(params) {}

  const TbmParams& params() const { return params_; }
  Word image(Letter k) const;
  Word operator()(const Word& w) const;

 private:
  TbmParams params_;
};

Word phi_apply(const TbmParams& p, const Word& w);
// phi^n(0); throws ResourceError when b^n exceeds max_len.
Word phi_power_0(const TbmParams& p, unsigned n, std::size_t max_len = kDefaultLengthCap);
// Length-L prefix of phi^infinity(0), built by iterating phi only.
Word phi_fixed_point_prefix(const TbmParams& p, std::size_t length, std::size_t max_len = kDefaultLengthCap);

// Additive order of (b-1) in Z_m.
std::uint32_t order_q(const TbmParams& p);
bool is_periodic(const TbmParams& p);

// Distinct two-letter factors of t_{b,m}, in order of first occurrence. A pair
// t_n t_{n+1} is (a, a + 1 - c(b-1)) where c counts the trailing digits b-1
// of n, so there are exactly m * order_q(p) of them; the prefix is scanned
// until all have appeared.
std::vector<std::pair<Letter, Letter>> two_letter_factors(const TbmParams& p, std::size_t max_len = kDefaultLengthCap);

// The words phi^k(x) phi^k(y) for every two-letter factor xy, with k least
// such that b^k >= n. They are factors of t_{b,m}, and every factor of
// t_{b,m} of length at most n + 1 occurs in one of them.
std::vector<Word> covering_blocks(const TbmParams& p, std::size_t n, std::size_t max_len = kDefaultLengthCap);

// Whether v occurs in t_{b,m}, decided on the covering blocks for |v|.
bool is_tbm_factor(const Word& v, const TbmParams& p);

// All phi-ancestors of v: words w_0..w_k with v a factor of phi(w_0..w_k) but
// not of phi(w_1..w_k) nor of phi(w_0..w_{k-1}). Sorted.
//
// v must be a factor of t_{b,m}; this is checked against `scanned`, or with
// is_tbm_factor by the two-argument overload.
std::vector<Word> ancestors(const Word& v, const TbmParams& p, const Word& scanned);
std::vector<Word> ancestors(const Word& v, const TbmParams& p);

// Delta = 0 (1 2 ... b-1)^omega and Theta = (Psi_0 ... Psi_{m-1})^omega.
DirectiveBisequence canonical_directives(const TbmParams& p);

/// Lazily extended infinite word. prefix() calls may come from several
/// threads; the cache grows geometrically and is guarded by a mutex.
class WordStream {
 public:
  // Must return a prefix of the infinite word of at least the given length.
  using Generator = std::function<Word(std::size_t)>;

  WordStream(std::uint32_t modulus, Generator generator, std::size_t max_len = kDefaultLengthCap);

  static WordStream thue_morse(const TbmParams& p, std::size_t max_len = kDefaultLengthCap);
  static WordStream phi_fixed_point(const TbmParams& p, std::size_t max_len = kDefaultLengthCap);
  static WordStream gps(const DirectiveBisequence& d, std::size_t max_len = kDefaultLengthCap);

  Word prefix(std::size_t length) const;
  std::uint32_t modulus() const { return modulus_; }

 private:
  struct State {
    std::mutex mutex;
    Word cache;
  };

  std::uint32_t modulus_;
  Generator generator_;
  std::size_t max_len_;
  std::shared_ptr<State> state_;
};

}  // namespace gpsw
