#include "kernels_impl.hpp"

namespace doems::kernels::detail {

void affine_map_scalar(const std::uint8_t* src, std::uint8_t* dst, std::size_t len,
                       std::uint8_t a, std::uint8_t b, std::uint8_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<std::uint8_t>((unsigned{a} * src[i] + b) % p);
  }
}

void axpy_mod_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                     std::uint8_t c, std::uint8_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<std::uint8_t>((dst[i] + unsigned{c} * src[i]) % p);
  }
}

void mul_mod_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t len,
                    std::uint8_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<std::uint8_t>((unsigned{dst[i]} * src[i]) % p);
  }
}

}  // namespace doems::kernels::detail
