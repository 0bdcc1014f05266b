#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace imax {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

constexpr std::size_t round_up_to_word(std::size_t bits) {
  return words_for(bits) * kWordBits;
}

// Bitmask subset of {0, ..., capacity-1}. Bits at or above capacity are
// always zero. Sets of different capacity compare by content only after
// the caller has matched capacities; mixing capacities in binary ops is a
// precondition violation.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_(words_for(capacity), 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  static VertexSet from_word(std::size_t capacity, Word bits) {
    VertexSet s(capacity);
    if (!s.words_.empty()) s.words_[0] = bits;
    s.trim();
    return s;
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return {words_.data(), words_.size()}; }
  Word word(std::size_t i) const { return words_[i]; }

  bool test(std::size_t v) const {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void set(std::size_t v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void reset(std::size_t v) {
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void assign(std::size_t v, bool value) {
    if (value) set(v); else reset(v);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const { return !any(); }

  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }

  // Smallest member strictly greater than v, or npos.
  std::size_t next(std::size_t v) const {
    std::size_t pos = v + 1;
    if (pos >= capacity_) return npos;
    std::size_t wi = pos / kWordBits;
    Word w = words_[wi] & (~Word{0} << (pos % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement within the capacity.
  VertexSet operator~() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend std::size_t intersection_count(const VertexSet& a, const VertexSet& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.capacity_ == b.capacity_ &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
  }

  // Numeric order of the bitmask read as a binary number (vertex 0 is the
  // least significant bit).
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
  }

  // Lower-case hex of the bitmask, most significant digit first, no prefix.
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = words_.size(); i-- > 0;) {
      for (int shift = 60; shift >= 0; shift -= 4)
        out.push_back(kDigits[(words_[i] >> shift) & 0xF]);
    }
    auto nz = out.find_first_not_of('0');
    return nz == std::string::npos ? std::string("0") : out.substr(nz);
  }

 private:
  void trim() {
    if (words_.empty()) return;
    std::size_t r = capacity_ % kWordBits;
    if (r) words_.back() &= (Word{1} << r) - 1;
  }

  std::size_t capacity_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

// Fixed-width bitset used inside hot enumeration kernels. W words, no
// capacity tracking; callers keep bits above the vertex count clear.
template <std::size_t W>
struct WordSet {
  using Word = std::uint64_t;
  std::array<Word, W> w{};

  static WordSet from(const VertexSet& s) {
    WordSet out;
    for (std::size_t i = 0; i < s.word_count() && i < W; ++i) out.w[i] = s.word(i);
    return out;
  }
  VertexSet to_vertex_set(std::size_t capacity) const {
    VertexSet s(capacity);
    for (std::size_t v = 0; v < capacity; ++v)
      if (test(v)) s.set(v);
    return s;
  }

  bool test(std::size_t v) const { return (w[v / kWordBits] >> (v % kWordBits)) & 1U; }
  void set(std::size_t v) { w[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void reset(std::size_t v) { w[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  bool any() const {
    Word acc = 0;
    for (Word x : w) acc |= x;
    return acc != 0;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      Word x = w[i];
      while (x) {
        f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
  friend WordSet operator|(WordSet a, const WordSet& b) {
    for (std::size_t i = 0; i < W; ++i) a.w[i] |= b.w[i];
    return a;
  }
  friend WordSet operator&(WordSet a, const WordSet& b) {
    for (std::size_t i = 0; i < W; ++i) a.w[i] &= b.w[i];
    return a;
  }
  friend WordSet operator-(WordSet a, const WordSet& b) {
    for (std::size_t i = 0; i < W; ++i) a.w[i] &= ~b.w[i];
    return a;
  }
  // |a & b| without materialising the intersection.
  friend std::size_t intersection_count(const WordSet& a, const WordSet& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(a.w[i] & b.w[i]));
    return c;
  }
};

}  // namespace imax
