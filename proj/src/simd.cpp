#include "superhomology/simd.hpp"

#include <cstdlib>
#include <stdexcept>

#ifdef SHOM_SIMD_X86
#include <immintrin.h>
#endif
#ifdef SHOM_SIMD_NEON
#include <arm_neon.h>
#endif

namespace shom::simd {

std::string kernel_name(Kernel k) {
    switch (k) {
        case Kernel::Scalar: return "scalar";
        case Kernel::Avx2: return "avx2";
        case Kernel::Neon: return "neon";
    }
    return "unknown";
}

void row_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                     std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

#ifdef SHOM_SIMD_X86
__attribute__((target("avx2"))) static void row_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                          std::uint32_t c, std::uint32_t p,
                                                          std::size_t n) {
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
    const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
        // x < 2^24 is exact in single precision; the quotient estimate is off by at most one.
        __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), vinv));
        __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
        r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
        r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vpm1), vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    row_axpy_scalar(dst + i, src + i, c, p, n - i);
}
#endif

#ifdef SHOM_SIMD_NEON
static void row_axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                          std::size_t n) {
    const uint32x4_t vp = vdupq_n_u32(p);
    const float32x4_t vinv = vdupq_n_f32(1.0f / static_cast<float>(p));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t x = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), c);
        uint32x4_t q = vcvtq_u32_f32(vmulq_f32(vcvtq_f32_u32(x), vinv));
        int32x4_t r = vreinterpretq_s32_u32(vsubq_u32(x, vmulq_u32(q, vp)));
        int32x4_t sp = vreinterpretq_s32_u32(vp);
        r = vaddq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcltq_s32(r, vdupq_n_s32(0))), sp));
        r = vsubq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcgeq_s32(r, sp)), sp));
        vst1q_u32(dst + i, vreinterpretq_u32_s32(r));
    }
    row_axpy_scalar(dst + i, src + i, c, p, n - i);
}
#endif

static bool cpu_has(Kernel k) {
    switch (k) {
        case Kernel::Scalar: return true;
        case Kernel::Avx2:
#ifdef SHOM_SIMD_X86
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Kernel::Neon:
#ifdef SHOM_SIMD_NEON
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::vector<Kernel> available_kernels(std::uint32_t p) {
    std::vector<Kernel> out{Kernel::Scalar};
    if (p >= kVectorModulusLimit) return out;
    for (Kernel k : {Kernel::Avx2, Kernel::Neon})
        if (cpu_has(k)) out.push_back(k);
    return out;
}

RowAxpyFn kernel_fn(Kernel k) {
    switch (k) {
        case Kernel::Scalar: return &row_axpy_scalar;
#ifdef SHOM_SIMD_X86
        case Kernel::Avx2: return &row_axpy_avx2;
#endif
#ifdef SHOM_SIMD_NEON
        case Kernel::Neon: return &row_axpy_neon;
#endif
        default: break;
    }
    throw std::invalid_argument("kernel " + kernel_name(k) + " is not compiled into this build");
}

Kernel select_kernel(std::uint32_t p) {
    const char* force = std::getenv("SHOM_FORCE_SCALAR");
    if (force && std::string(force) == "1") return Kernel::Scalar;
    return available_kernels(p).back();
}

}  // namespace shom::simd
