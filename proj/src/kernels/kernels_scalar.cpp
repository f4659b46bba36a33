#include "wsat/kernels.hpp"

#include <bit>

namespace wsat::kernels::scalar {

std::uint64_t popcount(std::span<const Word> words) {
  std::uint64_t total = 0;
  for (Word w : words) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void complement(std::span<const Word> in, std::span<Word> out, std::uint64_t bits) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = ~in[i];
  if (bits % 64 != 0 && !out.empty()) out.back() &= (Word{1} << (bits % 64)) - 1;
}

void bitwise_or(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
}

const KernelTable& table() {
  static const KernelTable t{&popcount, &is_subset, &complement, &bitwise_or};
  return t;
}

}  // namespace wsat::kernels::scalar
