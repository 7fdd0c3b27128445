#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gpsw/word.hpp"

namespace gpsw {

/// Eertree over an involutive letter map `reflect`: its nodes are the distinct
/// nonempty factors v with reverse(reflect(v)) == v, i.e. the pseudopalindromes
/// of the antimorphism induced by `reflect`. The identity map gives ordinary
/// palindromes.
///
/// Appending a letter adds at most one node, so a word of length n has at
/// most n + 1 distinct pseudopalindromic factors counting the empty word.
class PalindromicTree {
 public:
  struct Node {
    std::int64_t length;
    std::size_t link;      // longest proper pseudopalindromic suffix
    std::size_t end;       // end position (exclusive) of the first occurrence
    std::vector<std::pair<Letter, std::size_t>> next;
  };

  explicit PalindromicTree(std::vector<Letter> reflect);

  // Returns true when the letter created a new distinct pseudopalindrome.
  bool push_back(Letter a);
  void extend(std::span<const Letter> w) {
    for (Letter a : w) push_back(a);
  }

  // Distinct nonempty pseudopalindromic factors seen so far.
  std::size_t distinct() const { return nodes_.size() - 2; }
  // Nodes 0 (length -1) and 1 (empty word) are roots.
  const std::vector<Node>& nodes() const { return nodes_; }
  // Length of the longest pseudopalindromic suffix of the current word.
  std::size_t longest_suffix() const { return static_cast<std::size_t>(std::max<std::int64_t>(0, nodes_[last_].length)); }

 private:
  static constexpr std::size_t kImaginary = 0;
  static constexpr std::size_t kEmpty = 1;

  std::size_t child(std::size_t node, Letter a) const;
  // Follows suffix links from `node` until the pseudopalindrome can be wrapped
  // as reflect(a) . p . a at the current end, or returns kEmpty's sentinel.
  std::size_t find_extendable(std::size_t node, Letter a, bool& found) const;

  std::vector<Letter> reflect_;
  std::vector<Letter> text_;
  std::vector<Node> nodes_;
  std::size_t last_ = kEmpty;
};

}  // namespace gpsw
