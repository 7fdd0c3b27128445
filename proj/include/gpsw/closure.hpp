#pragma once

#include <cstddef>
#include <span>

#include "gpsw/dihedral.hpp"
#include "gpsw/word.hpp"

namespace gpsw {

// Whether g(w) == w. Works for any element; for antimorphisms this is the
// Psi-palindrome test and does not allocate.
bool is_fixed(const DihedralElement& g, const Word& w);
bool is_fixed(const DihedralElement& g, std::span<const Letter> w);

// Length of the longest suffix of w fixed by the antimorphism g. The empty
// suffix always qualifies, so the result is 0 when nothing longer does.
//
// The suffix of length l is a g-palindrome iff it equals the length-l prefix
// of g(w), so the answer is the final state of a KMP scan of w against g(w).
std::size_t longest_pal_suffix(const Word& w, const DihedralElement& g);

// Shortest g-palindrome with prefix w: u q g(u) where q is the longest
// g-palindromic suffix of w = u q.
Word closure(const Word& w, const DihedralElement& g);

}  // namespace gpsw
