#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "intergame/error.hpp"

namespace intergame {

/// Finite word over {0,1}; indexes nodes of a dyadic strategy tree.
/// Ordered by length first, then lexicographically, so a sorted container
/// walks the tree level by level.
class BinaryWord {
 public:
  BinaryWord() = default;

  static BinaryWord parse(std::string_view bits) {
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw Error(ErrorCode::parse_error, "binary word may only contain 0 and 1: '" + std::string(bits) + "'");
      }
    }
    BinaryWord w;
    w.bits_ = std::string(bits);
    return w;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
  const std::string& str() const { return bits_; }

  BinaryWord child(int bit) const {
    BinaryWord w = *this;
    w.bits_.push_back(bit ? '1' : '0');
    return w;
  }
  BinaryWord parent() const {
    BinaryWord w = *this;
    if (!w.bits_.empty()) w.bits_.pop_back();
    return w;
  }
  bool is_prefix_of(const BinaryWord& other) const {
    return bits_.size() <= other.bits_.size() && other.bits_.compare(0, bits_.size(), bits_) == 0;
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  std::string bits_;
};

}  // namespace intergame
