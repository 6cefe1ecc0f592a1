#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace reachpairs {

// Square boolean matrix stored as packed 64-bit rows.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }

  std::span<Word> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }
  std::span<const Word> row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }

  // row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src);

  std::size_t row_count(std::size_t r) const;
  std::size_t count() const;

  // Column indices of set bits in row r, ascending.
  std::vector<std::uint32_t> row_indices(std::size_t r) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

}  // namespace reachpairs
