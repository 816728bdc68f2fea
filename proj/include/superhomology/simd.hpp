#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define SHOM_SIMD_X86 1
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
#define SHOM_SIMD_NEON 1
#endif

namespace shom::simd {

enum class Kernel { Scalar, Avx2, Neon };

std::string kernel_name(Kernel k);

// dst[i] <- (dst[i] + c * src[i]) mod p for i < n; inputs are reduced residues.
using RowAxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                           std::uint32_t p, std::size_t n);

void row_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                     std::size_t n);

// Largest modulus for which the vector kernels are exact (c*src + dst < 2^24).
constexpr std::uint32_t kVectorModulusLimit = 4096;

// Kernels usable on this machine for modulus p, scalar first.
std::vector<Kernel> available_kernels(std::uint32_t p);
RowAxpyFn kernel_fn(Kernel k);
// Fastest available kernel for p; honours SHOM_FORCE_SCALAR=1 in the environment.
Kernel select_kernel(std::uint32_t p);

}  // namespace shom::simd
