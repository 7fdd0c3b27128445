#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gpsw/dihedral.hpp"
#include "gpsw/word.hpp"

namespace gpsw {

/// Eventually periodic pair of directive streams: letters delta_1 delta_2 ...
/// and antimorphisms theta_1 theta_2 ..., each given as a preperiod followed
/// by a nonempty period that repeats forever.
///
/// Text form: "delta=0(101); theta=(R E)". Each stream is its preperiod, then
/// its period in parentheses. Letters use the word text format (compact digits
/// for m <= 10, comma-separated otherwise); antimorphisms are whitespace
/// separated "psi:x" tokens, with R/E accepted over Z_2.
class DirectiveBisequence {
 public:
  DirectiveBisequence(std::uint32_t modulus, std::vector<Letter> delta_preperiod,
                      std::vector<Letter> delta_period, std::vector<DihedralElement> theta_preperiod,
                      std::vector<DihedralElement> theta_period);

  std::uint32_t modulus() const { return modulus_; }
  // 1-based, as in w_n = (w_{n-1} delta_n)^{theta_n}.
  Letter delta(std::size_t n) const;
  const DihedralElement& theta(std::size_t n) const;

  const std::vector<Letter>& delta_preperiod() const { return delta_pre_; }
  const std::vector<Letter>& delta_period() const { return delta_period_; }
  const std::vector<DihedralElement>& theta_preperiod() const { return theta_pre_; }
  const std::vector<DihedralElement>& theta_period() const { return theta_period_; }

  std::string to_string() const;
  std::string delta_spec() const;
  std::string theta_spec() const;

  friend bool operator==(const DirectiveBisequence&, const DirectiveBisequence&) = default;

 private:
  std::uint32_t modulus_;
  std::vector<Letter> delta_pre_, delta_period_;
  std::vector<DihedralElement> theta_pre_, theta_period_;
};

DirectiveBisequence parse_bisequence(std::string_view text, std::uint32_t m);
// Individual streams, e.g. "0(101)" and "psi:0(psi:0 psi:1)".
std::pair<std::vector<Letter>, std::vector<Letter>> parse_delta_spec(std::string_view text, std::uint32_t m);
std::pair<std::vector<DihedralElement>, std::vector<DihedralElement>> parse_theta_spec(std::string_view text,
                                                                                       std::uint32_t m);
DirectiveBisequence make_bisequence(std::string_view delta, std::string_view theta, std::uint32_t m);

// Arbitrary (not necessarily periodic) directive streams, indexed from 1.
struct DirectiveStreams {
  std::uint32_t modulus = 2;
  std::function<Letter(std::size_t)> delta;
  std::function<DihedralElement(std::size_t)> theta;

  static DirectiveStreams from(const DirectiveBisequence& d);
};

struct TraceStep {
  std::size_t n;
  Letter delta;
  DihedralElement theta;
  Word word;
};

// Steps w_1..w_N of the iterated closure; w_0 is the empty word and is not
// stored.
struct ClosureTrace {
  std::uint32_t modulus = 2;
  std::vector<TraceStep> steps;

  Word word(std::size_t n) const { return n == 0 ? Word(modulus) : steps.at(n - 1).word; }
};

ClosureTrace gps_steps(const DirectiveStreams& d, std::size_t steps);
ClosureTrace gps_steps(const DirectiveBisequence& d, std::size_t steps);

// Length-L prefix of the limit word. Throws ResourceError when L > max_len.
Word gps_prefix(const DirectiveStreams& d, std::size_t length, std::size_t max_len = kDefaultLengthCap);
Word gps_prefix(const DirectiveBisequence& d, std::size_t length, std::size_t max_len = kDefaultLengthCap);

struct PalPrefix {
  std::size_t length;
  DihedralElement antimorphism;

  friend bool operator==(const PalPrefix&, const PalPrefix&) = default;
};

// Every nonempty prefix fixed by some antimorphism of I_2(m), with that
// (necessarily unique) antimorphism, by increasing length.
std::vector<PalPrefix> pseudopalindromic_prefixes(const Word& w);

struct ChainStep {
  std::size_t length;          // |w_k|
  DihedralElement antimorphism;  // theta_k
  Letter letter;               // delta_k

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};
using Chain = std::vector<ChainStep>;

struct InferenceResult {
  // Maximal chains starting from w_0 = empty word, in lexicographic order of
  // their length sequences. At most the requested limit are listed.
  std::vector<Chain> chains;
  // Total number of maximal chains, saturating at UINT64_MAX.
  std::uint64_t chain_count = 0;
  bool truncated = false;
  // Longest prefix length reached by any chain.
  std::size_t max_coverage = 0;
};

// Finds every way of reading p as w_1, w_2, ... of some directive bisequence:
// a step from prefix length l to l' is valid when the closure of
// p[0..l] under the antimorphism fixing p[0..l') is exactly p[0..l').
InferenceResult infer_bisequence(const Word& p, std::size_t max_chains = 4096);

}  // namespace gpsw
