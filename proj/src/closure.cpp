#include "gpsw/closure.hpp"

#include <vector>

#include "gpsw/error.hpp"

namespace gpsw {

namespace {

void require_antimorphism(const DihedralElement& g, std::uint32_t m) {
  if (!g.is_antimorphism()) throw DomainError("expected an antimorphism, got " + g.to_string());
  if (g.modulus() != m) throw ModulusMismatchError("antimorphism and word have different moduli");
}

}  // namespace

bool is_fixed(const DihedralElement& g, std::span<const Letter> w) {
  const auto n = w.size();
  if (g.is_antimorphism()) {
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
      if (w[i] != g(w[n - 1 - i])) return false;
    }
    return true;
  }
  for (Letter a : w) {
    if (g(a) != a) return false;
  }
  return true;
}

bool is_fixed(const DihedralElement& g, const Word& w) {
  if (g.modulus() != w.modulus()) throw ModulusMismatchError("is_fixed: moduli differ");
  return is_fixed(g, w.letters());
}

std::size_t longest_pal_suffix(const Word& w, const DihedralElement& g) {
  require_antimorphism(g, w.modulus());
  const auto n = w.size();
  if (n == 0) return 0;
  const Word pattern = g(w);

  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }
  std::size_t state = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (state > 0 && (state == n || w[i] != pattern[state])) state = fail[state - 1];
    if (w[i] == pattern[state]) ++state;
  }
  return state;
}

Word closure(const Word& w, const DihedralElement& g) {
  const auto q = longest_pal_suffix(w, g);
  Word out = w;
  out.reserve(2 * w.size() - q);
  const auto u_len = w.size() - q;
  for (std::size_t i = u_len; i-- > 0;) out.push_back(g(w[i]));
  return out;
}

}  // namespace gpsw
