#include "reachpairs/bit_matrix.hpp"

#include <numeric>

namespace reachpairs {

void BitMatrix::or_row(std::size_t dst, std::size_t src) {
  Word* d = bits_.data() + dst * words_;
  const Word* s = bits_.data() + src * words_;
  for (std::size_t i = 0; i < words_; ++i) d[i] |= s[i];
}

std::size_t BitMatrix::row_count(std::size_t r) const {
  std::size_t total = 0;
  for (Word w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::count() const {
  return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0},
                         [](std::size_t acc, Word w) {
                           return acc + static_cast<std::size_t>(std::popcount(w));
                         });
}

std::vector<std::uint32_t> BitMatrix::row_indices(std::size_t r) const {
  std::vector<std::uint32_t> out;
  out.reserve(row_count(r));
  auto words = row(r);
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w = words[i];
    while (w != 0) {
      auto bit = static_cast<std::size_t>(std::countr_zero(w));
      out.push_back(static_cast<std::uint32_t>(i * kWordBits + bit));
      w &= w - 1;
    }
  }
  return out;
}

}  // namespace reachpairs
