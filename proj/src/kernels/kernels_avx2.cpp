#include "wsat/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace wsat::kernels::avx2 {

namespace {

// Nibble-lookup popcount over 256-bit lanes (Mula's method).
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

}  // namespace

std::uint64_t popcount(std::span<const Word> words) {
  const std::size_t n = words.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  while (i + 4 <= n) {
    // Byte counters saturate after 31 rounds of +8; flush well before that.
    __m256i bytes = _mm256_setzero_si256();
    for (int round = 0; round < 16 && i + 4 <= n; ++round, i += 4)
      bytes = _mm256_add_epi8(bytes, popcount_bytes(load(words.data() + i)));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(words[i]));
  return total;
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i stray = _mm256_andnot_si256(load(b.data() + i), load(a.data() + i));
    if (!_mm256_testz_si256(stray, stray)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void complement(std::span<const Word> in, std::span<Word> out, std::uint64_t bits) {
  const std::size_t n = in.size();
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(out.data() + i, _mm256_xor_si256(load(in.data() + i), ones));
  for (; i < n; ++i) out[i] = ~in[i];
  if (bits % 64 != 0 && !out.empty()) out.back() &= (Word{1} << (bits % 64)) - 1;
}

void bitwise_or(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(out.data() + i, _mm256_or_si256(load(a.data() + i), load(b.data() + i)));
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

const KernelTable& table() {
  static const KernelTable t{&popcount, &is_subset, &complement, &bitwise_or};
  return t;
}

}  // namespace wsat::kernels::avx2
