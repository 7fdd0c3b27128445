#include "gpsw/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "gpsw/error.hpp"
#include "gpsw/palindromic_tree.hpp"

namespace gpsw {

namespace {

constexpr std::uint64_t kHashBase = 0x9E3779B97F4A7C15ull;

struct HashedWord {
  std::span<const Letter> letters;
  std::vector<std::uint64_t> prefix_hash;
};

HashedWord hashed(std::span<const Letter> w) {
  HashedWord h{w, std::vector<std::uint64_t>(w.size() + 1, 0)};
  for (std::size_t i = 0; i < w.size(); ++i) h.prefix_hash[i + 1] = h.prefix_hash[i] * kHashBase + w[i] + 1;
  return h;
}

std::uint64_t distinct_windows(const std::vector<HashedWord>& words, std::size_t n, std::uint64_t base_pow) {
  struct Key {
    std::uint64_t hash;
    std::uint32_t word;
    std::uint32_t start;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<Key> keyed;
  for (std::uint32_t k = 0; k < words.size(); ++k) {
    const auto& h = words[k];
    for (std::size_t i = 0; i + n <= h.letters.size(); ++i) {
      keyed.push_back({h.prefix_hash[i + n] - h.prefix_hash[i] * base_pow, k, static_cast<std::uint32_t>(i)});
    }
  }
  std::sort(keyed.begin(), keyed.end());
  auto window = [&](const Key& key) { return words[key.word].letters.subspan(key.start, n); };
  std::uint64_t distinct = 0;
  std::vector<std::span<const Letter>> representatives;
  for (std::size_t lo = 0; lo < keyed.size();) {
    auto hi = lo;
    while (hi < keyed.size() && keyed[hi].hash == keyed[lo].hash) ++hi;
    // Equal hashes: keep one representative per distinct window.
    representatives.clear();
    for (auto k = lo; k < hi; ++k) {
      const auto w = window(keyed[k]);
      const bool seen = std::any_of(representatives.begin(), representatives.end(),
                                    [&](std::span<const Letter> r) { return std::equal(w.begin(), w.end(), r.begin()); });
      if (!seen) representatives.push_back(w);
    }
    distinct += representatives.size();
    lo = hi;
  }
  return distinct;
}

ComplexityProfile count_factors(const std::vector<HashedWord>& words, std::size_t n_max, std::size_t source_length) {
  std::vector<std::uint64_t> powers(n_max + 1, 1);
  for (std::size_t i = 1; i <= n_max; ++i) powers[i] = powers[i - 1] * kHashBase;
  ComplexityProfile profile{std::vector<std::uint64_t>(n_max, 0), source_length};
  const auto workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n_max));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t n = 1 + t; n <= n_max; n += workers) {
          profile.values[n - 1] = distinct_windows(words, n, powers[n]);
        }
      });
    }
  }
  return profile;
}

}  // namespace

ComplexityProfile factor_complexity(const Word& w, std::size_t n_max) {
  if (n_max >= w.size()) {
    throw DomainError("factor_complexity needs n_max < |w| (n_max = " + std::to_string(n_max) +
                      ", |w| = " + std::to_string(w.size()) + ")");
  }
  return count_factors({hashed(w.letters())}, n_max, w.size());
}

ComplexityProfile factor_complexity(const std::vector<Word>& words, std::size_t n_max) {
  std::vector<HashedWord> hashes;
  std::size_t total = 0;
  for (const auto& w : words) {
    hashes.push_back(hashed(w.letters()));
    total += w.size();
  }
  return count_factors(hashes, n_max, total);
}

StreamComplexity tbm_complexity(const TbmParams& p, std::size_t n_max) {
  StreamComplexity out;
  out.profile = factor_complexity(covering_blocks(p, n_max), n_max);
  out.stable = factor_complexity(covering_blocks(p, n_max * p.b), n_max).values == out.profile.values;
  return out;
}

std::vector<ComplexityBoundRow> complexity_bounds(const ComplexityProfile& profile, const TbmParams& p) {
  const std::uint64_t qm = std::uint64_t{order_q(p)} * p.m;
  std::vector<ComplexityBoundRow> rows;
  for (std::size_t n = 1; n <= profile.n_max(); ++n) {
    const auto c = profile.at(n);
    const std::uint64_t lower = (qm - 1) * n;
    const std::uint64_t upper = qm * n;
    rows.push_back({n, c, lower, upper, lower <= c, c <= upper});
  }
  return rows;
}

std::string complexity_csv(const std::vector<ComplexityBoundRow>& rows) {
  std::ostringstream out;
  out << "n,C(n),lower_bound,upper_bound,lower_holds,upper_holds\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.count << ',' << r.lower << ',' << r.upper << ',' << (r.lower_holds ? "true" : "false")
        << ',' << (r.upper_holds ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string complexity_csv(const ComplexityProfile& profile) {
  std::ostringstream out;
  out << "n,C(n)\n";
  for (std::size_t n = 1; n <= profile.n_max(); ++n) out << n << ',' << profile.at(n) << '\n';
  return out.str();
}

namespace {

std::vector<Letter> reflection_table(const DihedralElement& g) {
  std::vector<Letter> table(g.modulus());
  for (std::uint32_t k = 0; k < g.modulus(); ++k) table[k] = g(static_cast<Letter>(k));
  return table;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> distinct_pseudopalindromes(const Word& w, const DihedralElement& g) {
  if (!g.is_antimorphism()) throw DomainError("expected an antimorphism, got " + g.to_string());
  if (g.modulus() != w.modulus()) throw ModulusMismatchError("distinct_pseudopalindromes: moduli differ");
  PalindromicTree tree(reflection_table(g));
  tree.extend(w.letters());
  std::vector<std::pair<std::size_t, std::size_t>> out{{0, 0}};
  for (std::size_t i = 2; i < tree.nodes().size(); ++i) {
    const auto& node = tree.nodes()[i];
    out.emplace_back(node.end, static_cast<std::size_t>(node.length));
  }
  return out;
}

PalindromeCensus palindrome_census(const Word& w) {
  PalindromeCensus census;
  census.length = w.size();
  for (const auto& g : dihedral_group(w.modulus()).antimorphisms()) {
    PalindromicTree tree(reflection_table(g));
    tree.extend(w.letters());
    census.per_antimorphism.emplace_back(g, tree.distinct() + 1);
  }
  std::vector<Letter> identity(w.modulus());
  for (std::uint32_t k = 0; k < w.modulus(); ++k) identity[k] = static_cast<Letter>(k);
  PalindromicTree mirror(std::move(identity));
  mirror.extend(w.letters());
  census.palindromes = mirror.distinct() + 1;
  census.defect = w.size() + 1 - census.palindromes;
  return census;
}

std::optional<Overlap> find_overlap(const Word& w) {
  const auto n = w.size();
  std::optional<std::pair<std::size_t, std::size_t>> best;  // (position, period)
  // x v x v x is a factor of length 2p + 1 with period p = |xv|.
  for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
    const auto limit = best ? std::min(best->first, n - 2 * p - 1) : n - 2 * p - 1;
    std::size_t run = 0;
    std::optional<std::size_t> found;
    // run = length of the stretch starting at j where w[i] == w[i + p].
    for (std::size_t j = n - p; j-- > 0;) {
      run = w[j] == w[j + p] ? run + 1 : 0;
      if (j <= limit && run >= p + 1) found = j;
    }
    if (found && (!best || *found < best->first)) best = {{*found, p}};
  }
  if (!best) return std::nullopt;
  const auto [pos, p] = *best;
  return Overlap{pos, w[pos], w.factor(pos + 1, p - 1)};
}

}  // namespace gpsw
