// Compiled with -mavx2; only reached through the runtime dispatch table.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace doems::kernels::detail {
namespace {

// Reduces 16 lanes holding values < 2^16 modulo p (p < 256).
// magic = floor(2^16 / p) gives a quotient estimate short by at most one,
// so a single conditional subtraction finishes the reduction.
inline __m256i reduce16(__m256i v, __m256i p16, __m256i magic) {
  const __m256i q = _mm256_mulhi_epu16(v, magic);
  const __m256i r = _mm256_sub_epi16(v, _mm256_mullo_epi16(q, p16));
  return _mm256_min_epu16(r, _mm256_sub_epi16(r, p16));
}

inline __m256i load16(const std::uint8_t* src) {
  return _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

inline void store16(std::uint8_t* dst, __m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm_packus_epi16(lo, hi));
}

inline __m256i magic_for(std::uint8_t p) {
  return _mm256_set1_epi16(static_cast<short>(static_cast<std::uint16_t>(65536u / p)));
}

}  // namespace

void affine_map_avx2(const std::uint8_t* src, std::uint8_t* dst, std::size_t len,
                     std::uint8_t a, std::uint8_t b, std::uint8_t p) {
  std::size_t i = 0;
  if (p <= 16) {
    // Residues fit a 16-entry byte table, so the map is a single shuffle.
    alignas(16) std::uint8_t table[16] = {};
    for (unsigned x = 0; x < p; ++x) {
      table[x] = static_cast<std::uint8_t>((a * x + b) % p);
    }
    const __m256i lut =
        _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(table)));
    for (; i + 32 <= len; i += 32) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(lut, v));
    }
  } else {
    const __m256i p16 = _mm256_set1_epi16(p);
    const __m256i magic = magic_for(p);
    const __m256i a16 = _mm256_set1_epi16(a);
    const __m256i b16 = _mm256_set1_epi16(b);
    for (; i + 16 <= len; i += 16) {
      const __m256i v = _mm256_add_epi16(_mm256_mullo_epi16(load16(src + i), a16), b16);
      store16(dst + i, reduce16(v, p16, magic));
    }
  }
  affine_map_scalar(src + i, dst + i, len - i, a, b, p);
}

void axpy_mod_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                   std::uint8_t c, std::uint8_t p) {
  const __m256i p16 = _mm256_set1_epi16(p);
  const __m256i magic = magic_for(p);
  const __m256i c16 = _mm256_set1_epi16(c);
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    const __m256i v = _mm256_add_epi16(load16(dst + i), _mm256_mullo_epi16(load16(src + i), c16));
    store16(dst + i, reduce16(v, p16, magic));
  }
  axpy_mod_scalar(dst + i, src + i, len - i, c, p);
}

void mul_mod_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                  std::uint8_t p) {
  const __m256i p16 = _mm256_set1_epi16(p);
  const __m256i magic = magic_for(p);
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    const __m256i v = _mm256_mullo_epi16(load16(dst + i), load16(src + i));
    store16(dst + i, reduce16(v, p16, magic));
  }
  mul_mod_scalar(dst + i, src + i, len - i, p);
}

}  // namespace doems::kernels::detail
