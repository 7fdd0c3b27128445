#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpsw/thue_morse.hpp"

namespace gpsw {

enum class Verdict { confirmed, refuted, out_of_range };

std::string to_string(Verdict v);

/// Outcome of one executable check. A refuted report always carries a
/// witness, and every witness has been rechecked by a direct computation
/// before the report is returned.
struct VerificationReport {
  std::string check;
  std::uint32_t b = 0;
  std::uint32_t m = 0;
  std::size_t length = 0;          // "L": the word length the check ran on
  std::optional<unsigned> level;   // n, for per-level lemma checks
  std::string predicted;
  std::string observed;
  Verdict verdict = Verdict::out_of_range;
  std::optional<std::size_t> witness_index;
  std::optional<std::string> witness_factor;
  std::string scope;               // "exhaustive" or "sampled"
  double elapsed_ms = 0;
};

// Length of t_{b,m} prefix by which the canonical construction must have
// diverged when b > m and b != 1 (mod m): the closure at level q has length
// at most 2 b^q. Saturates at SIZE_MAX.
std::size_t divergence_horizon(const TbmParams& p);

// Compares gps_prefix(canonical_directives(p), L) with tbm_prefix(p, L).
// Prediction: match iff b <= m or b = 1 (mod m). A predicted mismatch that
// cannot show up within L letters (L < divergence_horizon) is out-of-range.
VerificationReport verify_theorem(const TbmParams& p, std::size_t length);

// The claim "the canonical bisequence generates t_{b,m}" on length-L prefixes:
// confirmed on a match, refuted (with the first mismatch) otherwise.
VerificationReport verify_canonical_prefix(const TbmParams& p, std::size_t length);

// Per-level checks for n = 0..n_max: closure steps inside phi^{n+1}(0), the
// longest-suffix case split at phi^n(0) 1, the closure of phi^n(0) 1 (and its
// failure at n = q when b > m), and the factorisation of pseudopalindromic
// prefixes through phi. Periodic parameters get the periodic-case check.
std::vector<VerificationReport> verify_lemma_suite(const TbmParams& p, unsigned n_max,
                                                   std::size_t max_len = kDefaultLengthCap);

// Properties 1-7 of t_{b,m} on a prefix of the given length. Random words for
// the commutation checks come from a fixed seed.
std::vector<VerificationReport> verify_properties(const TbmParams& p, std::size_t prefix_len,
                                                  std::size_t random_words = 1000, std::uint64_t seed = 20140421);

// Properties 6 and 7 over every word of length 1..max_word_len for every
// modulus 2..m_max.
std::vector<VerificationReport> verify_small_word_properties(std::uint32_t m_max, std::size_t max_word_len);

struct TheoremGrid {
  std::vector<VerificationReport> cells;  // row-major over (b, m)
  // Every cell confirmed: matches exactly where b <= m or b = 1 (mod m).
  bool iff_pattern_holds = false;
};

// verify_theorem over b_lo..b_hi x m_lo..m_hi, cells evaluated concurrently.
TheoremGrid theorem_grid(std::uint32_t b_lo, std::uint32_t b_hi, std::uint32_t m_lo, std::uint32_t m_hi,
                         std::size_t length);

}  // namespace gpsw
