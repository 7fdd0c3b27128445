#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpsw/dihedral.hpp"
#include "gpsw/thue_morse.hpp"
#include "gpsw/word.hpp"

namespace gpsw {

struct ComplexityProfile {
  // values[n - 1] = C(n) for 1 <= n <= n_max.
  std::vector<std::uint64_t> values;
  std::size_t source_length = 0;

  std::size_t n_max() const { return values.size(); }
  std::uint64_t at(std::size_t n) const { return values.at(n - 1); }
};

// Number of distinct factors of each length 1..n_max. Requires n_max < |w|.
// Windows are bucketed by a rolling hash and compared letterwise within a
// bucket, so the counts are exact.
ComplexityProfile factor_complexity(const Word& w, std::size_t n_max);
// Distinct factors occurring in at least one of the words. source_length is
// the total number of letters.
ComplexityProfile factor_complexity(const std::vector<Word>& words, std::size_t n_max);

struct StreamComplexity {
  ComplexityProfile profile;
  // Whether the recount on blocks b times longer gave identical counts.
  bool stable = false;
};

// Exact C(n) of t_{b,m} for n <= n_max, counted on covering_blocks(p, n_max),
// then recounted on the blocks for b * n_max.
StreamComplexity tbm_complexity(const TbmParams& p, std::size_t n_max);

struct ComplexityBoundRow {
  std::size_t n;
  std::uint64_t count;
  std::uint64_t lower;  // (qm - 1) n
  std::uint64_t upper;  // qmn
  bool lower_holds;
  bool upper_holds;
};

std::vector<ComplexityBoundRow> complexity_bounds(const ComplexityProfile& profile, const TbmParams& p);
// Header "n,C(n),lower_bound,upper_bound,lower_holds,upper_holds".
std::string complexity_csv(const std::vector<ComplexityBoundRow>& rows);
// Two columns "n,C(n)" for words without (b, m) context.
std::string complexity_csv(const ComplexityProfile& profile);

struct PalindromeCensus {
  std::size_t length = 0;
  // Distinct factors fixed by each Psi_x, the empty word included.
  std::vector<std::pair<DihedralElement, std::uint64_t>> per_antimorphism;
  // Distinct ordinary (mirror) palindromes, the empty word included.
  std::uint64_t palindromes = 1;
  // length + 1 - palindromes.
  std::uint64_t defect = 0;
};

PalindromeCensus palindrome_census(const Word& w);

// Distinct factors of w fixed by g, the empty word included. Each entry is
// (end position of first occurrence, length).
std::vector<std::pair<std::size_t, std::size_t>> distinct_pseudopalindromes(const Word& w, const DihedralElement& g);

struct Overlap {
  std::size_t position;
  Letter x;
  Word v;

  std::size_t length() const { return 2 * (v.size() + 1) + 1; }
};

// Leftmost, then shortest, factor of the form x v x v x.
std::optional<Overlap> find_overlap(const Word& w);

}  // namespace gpsw
