#pragma once
// Data-parallel modular arithmetic kernels.
//
// Every kernel has a scalar reference implementation and, where the target
// allows it, an AVX2 variant. The variant is picked once at runtime from the
// CPU feature flags; DOEMS_KERNELS=scalar in the environment forces the
// reference path. Both paths must produce identical bytes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace doems::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  // dst[i] = (a * src[i] + b) mod p, inputs in [0, p)
  void (*affine_map)(const std::uint8_t* src, std::uint8_t* dst, std::size_t len,
                     std::uint8_t a, std::uint8_t b, std::uint8_t p);
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy_mod)(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                   std::uint8_t c, std::uint8_t p);
  // dst[i] = (dst[i] * src[i]) mod p
  void (*mul_mod)(std::uint8_t* dst, const std::uint8_t* src, std::size_t len, std::uint8_t p);
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table();

// The table used by the library; resolved on first use.
const KernelTable& active();

inline void affine_map(std::span<const std::uint8_t> src, std::span<std::uint8_t> dst,
                       std::uint8_t a, std::uint8_t b, std::uint8_t p) {
  active().affine_map(src.data(), dst.data(), src.size(), a, b, p);
}

inline void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
                     std::uint8_t c, std::uint8_t p) {
  active().axpy_mod(dst.data(), src.data(), dst.size(), c, p);
}

inline void mul_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
                    std::uint8_t p) {
  active().mul_mod(dst.data(), src.data(), dst.size(), p);
}

}  // namespace doems::kernels
