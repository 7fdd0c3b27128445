#include "gpsw/palindromic_tree.hpp"

#include <algorithm>

namespace gpsw {

PalindromicTree::PalindromicTree(std::vector<Letter> reflect) : reflect_(std::move(reflect)) {
  nodes_.push_back({-1, kImaginary, 0, {}});
  nodes_.push_back({0, kImaginary, 0, {}});
}

std::size_t PalindromicTree::child(std::size_t node, Letter a) const {
  for (const auto& [letter, target] : nodes_[node].next) {
    if (letter == a) return target;
  }
  return 0;
}

std::size_t PalindromicTree::find_extendable(std::size_t node, Letter a, bool& found) const {
  const auto i = text_.size() - 1;  // position of a
  while (true) {
    const auto len = nodes_[node].length;
    // The letter before the suffix p must be reflect(a); for the imaginary
    // root this asks whether a is its own reflection.
    const auto before = static_cast<std::int64_t>(i) - len - 1;
    if (before >= 0 && text_[static_cast<std::size_t>(before)] == reflect_[a]) {
      found = true;
      return node;
    }
    if (node == kImaginary) {
      found = false;
      return node;
    }
    node = nodes_[node].link;
  }
}

bool PalindromicTree::push_back(Letter a) {
  text_.push_back(a);
  bool found = false;
  const auto parent = find_extendable(last_, a, found);
  if (!found) {
    last_ = kEmpty;
    return false;
  }
  if (auto existing = child(parent, a)) {
    last_ = existing;
    return false;
  }
  const auto length = nodes_[parent].length + 2;
  std::size_t link = kEmpty;
  if (length > 1) {
    bool link_found = false;
    const auto link_parent = find_extendable(nodes_[parent].link, a, link_found);
    // parent != kImaginary here, so its link chain ends at kImaginary.
    if (link_found) link = child(link_parent, a);
  }
  nodes_.push_back({length, link, text_.size(), {}});
  const auto created = nodes_.size() - 1;
  nodes_[parent].next.emplace_back(a, created);
  last_ = created;
  return true;
}

}  // namespace gpsw
