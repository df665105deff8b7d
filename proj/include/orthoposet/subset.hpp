#pragma once

// Element subsets as fixed-width bit masks. The width is the size of the
// owning poset; mixing subsets of different widths is a caller bug and throws.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthoposet {

class Subset {
 public:
  Subset() = default;

  explicit Subset(int width) : width_(width), words_(word_count(width), 0) {
    if (width < 0) throw std::invalid_argument("Subset: negative width");
  }

  static Subset full(int width) {
    Subset s(width);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static Subset of(int width, std::initializer_list<int> bits) {
    Subset s(width);
    for (int b : bits) s.set(b);
    return s;
  }

  static Subset single(int width, int bit) {
    Subset s(width);
    s.set(bit);
    return s;
  }

  int width() const { return width_; }

  bool test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool any() const { return !empty(); }

  // Lowest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    }
    return -1;
  }

  // The unique member when count()==1.
  std::optional<int> sole() const {
    if (count() != 1) return std::nullopt;
    return first();
  }

  Subset& operator&=(const Subset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Subset& operator|=(const Subset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Subset& subtract(const Subset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool is_subset_of(const Subset& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const Subset& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend bool operator==(const Subset&, const Subset&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t m = words_[i];
      while (m) {
        f(static_cast<int>(i * 64 + std::countr_zero(m)));
        m &= m - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  static std::size_t word_count(int width) {
    return (static_cast<std::size_t>(width) + 63) / 64;
  }

  void check_index(int i) const {
    if (i < 0 || i >= width_) {
      throw std::out_of_range("Subset: index " + std::to_string(i) +
                              " out of range for width " + std::to_string(width_));
    }
  }

  void check_width(const Subset& o) const {
    if (width_ != o.width_) {
      throw std::invalid_argument("Subset width mismatch: " + std::to_string(width_) +
                                  " vs " + std::to_string(o.width_));
    }
  }

  void trim() {
    if (width_ % 64 && !words_.empty()) {
      words_.back() &= (~std::uint64_t{0}) >> (64 - width_ % 64);
    }
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace orthoposet
