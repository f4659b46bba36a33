#pragma once

// Word-level kernels over presence bitsets. Every kernel has a portable
// scalar reference and, on x86-64, an AVX2 variant. The active variant is
// picked once at startup from CPUID and can be overridden for testing.

#include <cstddef>
#include <cstdint>
#include <span>

namespace wsat::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

struct KernelTable {
  std::uint64_t (*popcount)(std::span<const Word> words);
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
  void (*complement)(std::span<const Word> in, std::span<Word> out, std::uint64_t bits);
  void (*bitwise_or)(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
};

namespace scalar {
std::uint64_t popcount(std::span<const Word> words);
// a is a subset of b (a & ~b == 0); spans must have equal length.
bool is_subset(std::span<const Word> a, std::span<const Word> b);
// out = ~in restricted to the low `bits` bits; bits beyond are cleared.
void complement(std::span<const Word> in, std::span<Word> out, std::uint64_t bits);
void bitwise_or(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
const KernelTable& table();
}  // namespace scalar

#if defined(WSAT_HAVE_AVX2)
namespace avx2 {
std::uint64_t popcount(std::span<const Word> words);
bool is_subset(std::span<const Word> a, std::span<const Word> b);
void complement(std::span<const Word> in, std::span<Word> out, std::uint64_t bits);
void bitwise_or(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
const KernelTable& table();
}  // namespace avx2
#endif

// True if this build carries the AVX2 variant and the CPU supports it.
bool avx2_available();

Isa active_isa();
// Selects a variant; requesting avx2 when unavailable falls back to scalar.
// Not thread-safe; meant for tests and benchmarks.
void select_isa(Isa isa);

const KernelTable& active();

inline std::uint64_t popcount(std::span<const Word> w) { return active().popcount(w); }
inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  return active().is_subset(a, b);
}
inline void complement(std::span<const Word> in, std::span<Word> out, std::uint64_t bits) {
  active().complement(in, out, bits);
}
inline void bitwise_or(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  active().bitwise_or(a, b, out);
}

constexpr std::size_t words_for_bits(std::uint64_t bits) {
  return static_cast<std::size_t>((bits + 63) / 64);
}

}  // namespace wsat::kernels
