#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace msum {

/// Dense bit array over [0, size). Bit v stands for the integer v.
class DenseBits {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  DenseBits() = default;
  explicit DenseBits(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::size_t i) const {
    return i < size_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U);
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  Word word(std::size_t w) const { return words_[w]; }
  Word& word(std::size_t w) { return words_[w]; }
  const Word* data() const { return words_.data(); }
  Word* data() { return words_.data(); }

  std::size_t count() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Word w of this array viewed as if every bit were moved up by `shift`
  /// (negative shifts move bits down). Bits shifted in from outside are zero.
  Word shifted_word(std::ptrdiff_t w, std::ptrdiff_t shift) const {
    const std::ptrdiff_t first = w * static_cast<std::ptrdiff_t>(kWordBits) - shift;
    return extract(first);
  }

  /// 64 bits starting at bit position `first` (may be negative or past the end).
  Word extract(std::ptrdiff_t first) const {
    const auto bits = static_cast<std::ptrdiff_t>(kWordBits);
    std::ptrdiff_t q = first >= 0 ? first / bits : -((-first + bits - 1) / bits);
    const auto off = static_cast<unsigned>(first - q * bits);
    Word lo = fetch(q);
    if (off == 0) return lo;
    Word hi = fetch(q + 1);
    return (lo >> off) | (hi << (kWordBits - off));
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word cur = words_[w];
      while (cur != 0) {
        const auto off = static_cast<std::size_t>(std::countr_zero(cur));
        f(w * kWordBits + off);
        cur &= cur - 1;
      }
    }
  }

  /// Mask of the valid bits of word w (clears bits at or beyond size()).
  Word valid_mask(std::size_t w) const {
    const std::size_t end = (w + 1) * kWordBits;
    if (end <= size_) return ~Word{0};
    const std::size_t keep = size_ - w * kWordBits;
    return keep == 0 ? 0 : (~Word{0} >> (kWordBits - keep));
  }

  bool operator==(const DenseBits&) const = default;

 private:
  Word fetch(std::ptrdiff_t q) const {
    if (q < 0 || q >= static_cast<std::ptrdiff_t>(words_.size())) return 0;
    return words_[static_cast<std::size_t>(q)];
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace msum
