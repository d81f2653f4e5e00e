#pragma once

#include <cstddef>
#include <cstdint>

namespace doems::kernels::detail {

void affine_map_scalar(const std::uint8_t* src, std::uint8_t* dst, std::size_t len,
                       std::uint8_t a, std::uint8_t b, std::uint8_t p);
void axpy_mod_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                     std::uint8_t c, std::uint8_t p);
void mul_mod_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                    std::uint8_t p);

#ifdef DOEMS_HAVE_AVX2
void affine_map_avx2(const std::uint8_t* src, std::uint8_t* dst, std::size_t len,
                     std::uint8_t a, std::uint8_t b, std::uint8_t p);
void axpy_mod_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                   std::uint8_t c, std::uint8_t p);
void mul_mod_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                  std::uint8_t p);
#endif

}  // namespace doems::kernels::detail
