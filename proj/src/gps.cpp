#include "gpsw/gps.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

#include "gpsw/closure.hpp"
#include "gpsw/error.hpp"

namespace gpsw {

DirectiveBisequence::DirectiveBisequence(std::uint32_t modulus, std::vector<Letter> delta_preperiod,
                                         std::vector<Letter> delta_period,
                                         std::vector<DihedralElement> theta_preperiod,
                                         std::vector<DihedralElement> theta_period)
    : modulus_(modulus),
      delta_pre_(std::move(delta_preperiod)),
      delta_period_(std::move(delta_period)),
      theta_pre_(std::move(theta_preperiod)),
      theta_period_(std::move(theta_period)) {
  check_modulus(modulus_);
  if (delta_period_.empty() || theta_period_.empty()) {
    throw DomainError("directive periods must be nonempty");
  }
  for (auto* seq : {&delta_pre_, &delta_period_}) {
    for (Letter a : *seq) {
      if (a >= modulus_) throw AlphabetError("directive letter " + std::to_string(a) + " is not in Z_" + std::to_string(modulus_));
    }
  }
  for (auto* seq : {&theta_pre_, &theta_period_}) {
    for (const auto& g : *seq) {
      if (!g.is_antimorphism()) throw DomainError("directive antimorphism expected, got " + g.to_string());
      if (g.modulus() != modulus_) throw ModulusMismatchError("directive antimorphism over the wrong modulus");
    }
  }
}

Letter DirectiveBisequence::delta(std::size_t n) const {
  assert(n >= 1);
  const auto i = n - 1;
  if (i < delta_pre_.size()) return delta_pre_[i];
  return delta_period_[(i - delta_pre_.size()) % delta_period_.size()];
}

const DihedralElement& DirectiveBisequence::theta(std::size_t n) const {
  assert(n >= 1);
  const auto i = n - 1;
  if (i < theta_pre_.size()) return theta_pre_[i];
  return theta_period_[(i - theta_pre_.size()) % theta_period_.size()];
}

namespace {

std::string letters_text(const std::vector<Letter>& letters, std::uint32_t m) {
  return format_word(Word(m, letters));
}

std::string antimorphisms_text(const std::vector<DihedralElement>& gs) {
  std::string out;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i) out.push_back(' ');
    out += antimorphism_name(gs[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

// Splits "pre(period)" into its two parts.
std::pair<std::string_view, std::string_view> split_periodic(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')' || text.find('(', open + 1) != std::string_view::npos) {
    throw ParseError("expected <preperiod>(<period>), got '" + std::string(text) + "'");
  }
  return {trim(text.substr(0, open)), trim(text.substr(open + 1, text.size() - open - 2))};
}

std::vector<DihedralElement> parse_antimorphism_list(std::string_view text, std::uint32_t m) {
  std::vector<DihedralElement> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(parse_antimorphism(token, m));
  return out;
}

}  // namespace

std::string DirectiveBisequence::delta_spec() const {
  return letters_text(delta_pre_, modulus_) + "(" + letters_text(delta_period_, modulus_) + ")";
}

std::string DirectiveBisequence::theta_spec() const {
  auto pre = antimorphisms_text(theta_pre_);
  return pre + "(" + antimorphisms_text(theta_period_) + ")";
}

std::string DirectiveBisequence::to_string() const {
  return "delta=" + delta_spec() + "; theta=" + theta_spec();
}

std::pair<std::vector<Letter>, std::vector<Letter>> parse_delta_spec(std::string_view text, std::uint32_t m) {
  const auto [pre, period] = split_periodic(text);
  auto pre_word = parse_word(pre, m);
  auto period_word = parse_word(period, m);
  if (period_word.empty()) throw ParseError("letter period must be nonempty");
  return {std::vector<Letter>(pre_word.begin(), pre_word.end()),
          std::vector<Letter>(period_word.begin(), period_word.end())};
}

std::pair<std::vector<DihedralElement>, std::vector<DihedralElement>> parse_theta_spec(std::string_view text,
                                                                                       std::uint32_t m) {
  const auto [pre, period] = split_periodic(text);
  auto period_list = parse_antimorphism_list(period, m);
  if (period_list.empty()) throw ParseError("antimorphism period must be nonempty");
  return {parse_antimorphism_list(pre, m), std::move(period_list)};
}

DirectiveBisequence make_bisequence(std::string_view delta, std::string_view theta, std::uint32_t m) {
  auto [dpre, dper] = parse_delta_spec(delta, m);
  auto [tpre, tper] = parse_theta_spec(theta, m);
  return DirectiveBisequence(m, std::move(dpre), std::move(dper), std::move(tpre), std::move(tper));
}

DirectiveBisequence parse_bisequence(std::string_view text, std::uint32_t m) {
  std::string_view delta, theta;
  bool have_delta = false, have_theta = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const auto part = trim(text.substr(start, semi == std::string_view::npos ? text.npos : semi - start));
    if (!part.empty()) {
      const auto eq = part.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(part) + "'");
      const auto key = trim(part.substr(0, eq));
      const auto value = trim(part.substr(eq + 1));
      if (key == "delta" && !have_delta) {
        delta = value;
        have_delta = true;
      } else if (key == "theta" && !have_theta) {
        theta = value;
        have_theta = true;
      } else {
        throw ParseError("unexpected or repeated key '" + std::string(key) + "'");
      }
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (!have_delta || !have_theta) throw ParseError("bisequence needs both delta= and theta=");
  return make_bisequence(delta, theta, m);
}

DirectiveStreams DirectiveStreams::from(const DirectiveBisequence& d) {
  return DirectiveStreams{d.modulus(), [d](std::size_t n) { return d.delta(n); },
                          [d](std::size_t n) { return d.theta(n); }};
}

ClosureTrace gps_steps(const DirectiveStreams& d, std::size_t steps) {
  ClosureTrace trace{d.modulus, {}};
  trace.steps.reserve(steps);
  Word w(d.modulus);
  for (std::size_t n = 1; n <= steps; ++n) {
    const Letter a = d.delta(n);
    const DihedralElement g = d.theta(n);
    w.push_back(a);
    w = closure(w, g);
    trace.steps.push_back({n, a, g, w});
  }
  return trace;
}

ClosureTrace gps_steps(const DirectiveBisequence& d, std::size_t steps) {
  return gps_steps(DirectiveStreams::from(d), steps);
}

Word gps_prefix(const DirectiveStreams& d, std::size_t length, std::size_t max_len) {
  if (length > max_len) {
    throw ResourceError("requested prefix of length " + std::to_string(length) + " exceeds the cap " +
                        std::to_string(max_len));
  }
  Word w(d.modulus);
  for (std::size_t n = 1; w.size() < length; ++n) {
    const auto before = w.size();
    w.push_back(d.delta(n));
    w = closure(w, d.theta(n));
    assert(w.size() > before);
    (void)before;
  }
  w.truncate(length);
  return w;
}

Word gps_prefix(const DirectiveBisequence& d, std::size_t length, std::size_t max_len) {
  return gps_prefix(DirectiveStreams::from(d), length, max_len);
}

std::vector<PalPrefix> pseudopalindromic_prefixes(const Word& w) {
  std::vector<PalPrefix> out;
  const auto m = w.modulus();
  const auto letters = w.letters();
  for (std::size_t len = 1; len <= w.size(); ++len) {
    // Psi_x(w[len-1]) must equal w[0], which pins down x.
    const auto g = DihedralElement::psi(add_mod(letters[0], letters[len - 1], m), m);
    if (is_fixed(g, letters.first(len))) out.push_back({len, g});
  }
  return out;
}

namespace {

struct Edge {
  std::size_t target;
  DihedralElement antimorphism;
};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

InferenceResult infer_bisequence(const Word& p, std::size_t max_chains) {
  const auto n = p.size();
  const auto pal = pseudopalindromic_prefixes(p);
  std::vector<const PalPrefix*> pal_at(n + 1, nullptr);
  for (const auto& e : pal) pal_at[e.length] = &e;

  // Node l stands for "w_k = p[0..l)". Node 0 is w_0.
  std::vector<std::vector<Edge>> edges(n + 1);
  std::vector<char> reachable(n + 1, 0);
  reachable[0] = 1;
  for (std::size_t l = 0; l < n; ++l) {
    if (!reachable[l]) continue;
    const Word extended = p.prefix(l + 1);
    // Candidate antimorphisms: those fixing some longer prefix.
    std::vector<DihedralElement> candidates;
    for (const auto& e : pal) {
      if (e.length > l && std::find(candidates.begin(), candidates.end(), e.antimorphism) == candidates.end()) {
        candidates.push_back(e.antimorphism);
      }
    }
    for (const auto& g : candidates) {
      const auto target = 2 * (l + 1) - longest_pal_suffix(extended, g);
      // A palindromic prefix of that length with the same antimorphism is the
      // closure itself: both are g-palindromes of equal length sharing p[0..l].
      if (target <= n && pal_at[target] && pal_at[target]->antimorphism == g) {
        edges[l].push_back({target, g});
        reachable[target] = 1;
      }
    }
    std::sort(edges[l].begin(), edges[l].end(), [](const Edge& a, const Edge& b) { return a.target < b.target; });
  }

  InferenceResult result;
  for (std::size_t l = n + 1; l-- > 0;) {
    if (reachable[l]) {
      result.max_coverage = l;
      break;
    }
  }

  // Number of maximal chains from each node, computed right to left.
  std::vector<std::uint64_t> paths(n + 1, 0);
  for (std::size_t l = n + 1; l-- > 0;) {
    if (!reachable[l]) continue;
    if (edges[l].empty()) {
      paths[l] = 1;
      continue;
    }
    for (const auto& e : edges[l]) paths[l] = saturating_add(paths[l], paths[e.target]);
  }
  result.chain_count = paths[0];

  Chain current;
  auto walk = [&](auto&& self, std::size_t l) -> void {
    if (result.chains.size() >= max_chains) {
      result.truncated = true;
      return;
    }
    if (edges[l].empty()) {
      result.chains.push_back(current);
      return;
    }
    for (const auto& e : edges[l]) {
      current.push_back({e.target, e.antimorphism, p[l]});
      self(self, e.target);
      current.pop_back();
      if (result.truncated) return;
    }
  };
  walk(walk, 0);
  if (result.chain_count > result.chains.size()) result.truncated = true;
  return result;
}

}  // namespace gpsw
