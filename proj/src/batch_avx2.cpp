// AVX2+FMA batch kernels for the branch-free methods (eq3, eq4, eq5, eq6,
// one-log). This translation unit is the only one compiled with -mavx2 -mfma;
// the dispatcher guarantees these functions run only on CPUs reporting both
// feature bits. Kernels mirror the scalar arithmetic term for term, so the
// only cross-lane differences come from the vector log and from FMA
// contraction — the equivalence tests bound those.

#if defined(FRICTIONLAB_HAVE_AVX2)

#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "frictionlab/batch.hpp"
#include "frictionlab/rational_b.hpp"

namespace frictionlab::batch {

namespace {

inline __m256d vset(double v) { return _mm256_set1_pd(v); }

// Natural log of four positive normal doubles, classic argument-reduction
// port: split x = 2^k * m with m in [sqrt(2)/2, sqrt(2)), then evaluate the
// standard degree-14 minimax series in s = (m-1)/(m+1). Accuracy ~1 ulp for
// normal positive finite inputs; other inputs are the caller's problem (the
// method kernels mask non-positive lanes to NaN before storing).
inline __m256d vln(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i hx = _mm256_srli_epi64(bits, 32);
    const __m256i mant = _mm256_and_si256(hx, _mm256_set1_epi64x(0x000fffff));
    // Lanes with mantissa >= ~sqrt(2) get halved (exponent 0x3fe) and k+1.
    const __m256i adj = _mm256_and_si256(
        _mm256_add_epi64(mant, _mm256_set1_epi64x(0x95f64)),
        _mm256_set1_epi64x(0x100000));
    const __m256i k64 = _mm256_add_epi64(
        _mm256_sub_epi64(_mm256_srli_epi64(hx, 20), _mm256_set1_epi64x(1023)),
        _mm256_srli_epi64(adj, 20));
    const __m256i newhi =
        _mm256_or_si256(mant, _mm256_xor_si256(adj, _mm256_set1_epi64x(0x3ff00000)));
    const __m256i mbits = _mm256_or_si256(
        _mm256_slli_epi64(newhi, 32),
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x00000000ffffffffLL)));
    const __m256d m = _mm256_castsi256_pd(mbits);

    // Exact small-integer epi64 -> double conversion via the 1.5*2^52 anchor.
    const __m256d dk = _mm256_sub_pd(
        _mm256_castsi256_pd(
            _mm256_add_epi64(k64, _mm256_set1_epi64x(0x4338000000000000LL))),
        vset(6755399441055744.0));

    const __m256d one = vset(1.0);
    const __m256d f = _mm256_sub_pd(m, one);
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(vset(2.0), f));
    const __m256d z = _mm256_mul_pd(s, s);
    const __m256d w = _mm256_mul_pd(z, z);

    __m256d t1 = _mm256_fmadd_pd(w, vset(1.531383769920937332e-01),
                                 vset(2.222219843214978396e-01));
    t1 = _mm256_fmadd_pd(w, t1, vset(3.999999999940941908e-01));
    t1 = _mm256_mul_pd(w, t1);

    __m256d t2 = _mm256_fmadd_pd(w, vset(1.479819860511658591e-01),
                                 vset(1.818357216161805012e-01));
    t2 = _mm256_fmadd_pd(w, t2, vset(2.857142874366239149e-01));
    t2 = _mm256_fmadd_pd(w, t2, vset(6.666666666666735130e-01));
    t2 = _mm256_mul_pd(z, t2);

    const __m256d r = _mm256_add_pd(t2, t1);
    const __m256d hfsq = _mm256_mul_pd(vset(0.5), _mm256_mul_pd(f, f));

    // dk*ln2_hi - ((hfsq - (s*(hfsq+r) + dk*ln2_lo)) - f)
    const __m256d lo = _mm256_fmadd_pd(dk, vset(1.90821492927058770002e-10),
                                       _mm256_mul_pd(s, _mm256_add_pd(hfsq, r)));
    const __m256d mid = _mm256_sub_pd(_mm256_sub_pd(hfsq, lo), f);
    return _mm256_fmsub_pd(dk, vset(6.93147180369123816490e-01), mid);
}

// a * (v^(1/a) - 1) for a >= 1e5: with t = ln(v)/a at most ~2e-4, the
// truncated exponential series is exact to double precision and avoids the
// catastrophic a*pow(v,1/a) - a cancellation of the naive form.
inline __m256d vpow_scaled_m1(__m256d v, double a) {
    const __m256d t = _mm256_div_pd(vln(v), vset(a));
    __m256d p = _mm256_fmadd_pd(t, vset(1.0 / 24.0), vset(1.0 / 6.0));
    p = _mm256_fmadd_pd(t, p, vset(0.5));
    p = _mm256_fmadd_pd(t, p, vset(1.0));
    return _mm256_mul_pd(_mm256_mul_pd(vset(a), t), p);
}

// NaN lanes wherever the method left its meaningful range (non-positive
// Reynolds or a non-positive log argument), matching what the scalar lane
// produces at such points.
inline __m256d mask_valid(__m256d u, __m256d reynolds, __m256d z) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d ok = _mm256_and_pd(_mm256_cmp_pd(reynolds, zero, _CMP_GT_OQ),
                                     _mm256_cmp_pd(z, zero, _CMP_GT_OQ));
    const __m256d nan = vset(std::numeric_limits<double>::quiet_NaN());
    return _mm256_blendv_pd(nan, u, ok);
}

inline __m256d shape_eq3(__m256d b, __m256d z, __m256d l) {
    const __m256d one = vset(1.0);
    const __m256d recip = _mm256_div_pd(one, z);
    const __m256d term = _mm256_mul_pd(l, _mm256_sub_pd(recip, one));
    return _mm256_mul_pd(vset(0.8686), _mm256_add_pd(b, term));
}

inline __m256d shape_eq5(__m256d b, __m256d z, __m256d l) {
    const __m256d term = _mm256_div_pd(_mm256_mul_pd(vset(1.038), l),
                                       _mm256_add_pd(vset(0.332), z));
    return _mm256_mul_pd(vset(0.8686), _mm256_sub_pd(_mm256_add_pd(b, term), l));
}

inline __m256d shape_eq6(__m256d b, __m256d z, __m256d l) {
    const __m256d t1 = _mm256_div_pd(_mm256_mul_pd(vset(1.0119), l), z);
    const __m256d t2 = _mm256_div_pd(_mm256_sub_pd(l, vset(2.3849)),
                                     _mm256_mul_pd(z, z));
    const __m256d core = _mm256_add_pd(_mm256_sub_pd(_mm256_add_pd(b, t1), l), t2);
    return _mm256_mul_pd(vset(0.8686), core);
}

inline __m256d apply_shape(Eq4Variant variant, __m256d b, __m256d z, __m256d l) {
    switch (variant) {
        case Eq4Variant::Eq5Shape: return shape_eq5(b, z, l);
        case Eq4Variant::Eq6Shape: return shape_eq6(b, z, l);
        case Eq4Variant::Eq3Shape: break;
    }
    return shape_eq3(b, z, l);
}

inline __m256d roughness_term(__m256d reynolds, __m256d eps) {
    return _mm256_div_pd(_mm256_mul_pd(reynolds, eps), vset(8.0878));
}

__m256d kernel_log_family(MethodId id, __m256d reynolds, __m256d eps) {
    const __m256d a = roughness_term(reynolds, eps);
    const __m256d b = _mm256_sub_pd(vln(reynolds), vset(0.779397488));
    const __m256d z = _mm256_add_pd(b, a);
    const __m256d l = vln(z);
    __m256d u;
    switch (id) {
        case MethodId::Eq5: u = shape_eq5(b, z, l); break;
        case MethodId::Eq6: u = shape_eq6(b, z, l); break;
        default:            u = shape_eq3(b, z, l); break;
    }
    return mask_valid(u, reynolds, z);
}

__m256d kernel_power_family(__m256d reynolds, __m256d eps, const Options& opts) {
    const __m256d a = roughness_term(reynolds, eps);
    const __m256d b =
        _mm256_sub_pd(vpow_scaled_m1(reynolds, opts.power_a), vset(0.779397488));
    const __m256d z = _mm256_add_pd(b, a);
    const __m256d l = vpow_scaled_m1(z, opts.power_a);
    return mask_valid(apply_shape(opts.variant, b, z, l), reynolds, z);
}

__m256d kernel_onelog(__m256d reynolds, __m256d eps) {
    const __m256d r = _mm256_div_pd(reynolds, vset(kReynoldsScale));
    __m256d num = _mm256_fmadd_pd(vset(11.0), r, vset(27.0));
    num = _mm256_fmsub_pd(r, num, vset(27.0));
    num = _mm256_fmsub_pd(r, num, vset(11.0));
    __m256d den = _mm256_fmadd_pd(vset(3.0), r, vset(27.0));
    den = _mm256_fmadd_pd(r, den, vset(27.0));
    den = _mm256_fmadd_pd(r, den, vset(3.0));
    const __m256d s = _mm256_div_pd(num, den);

    const __m256d s2 = _mm256_mul_pd(s, s);
    const __m256d s6 = _mm256_mul_pd(_mm256_mul_pd(s2, s2), s2);
    const __m256d term_s =
        _mm256_mul_pd(s, _mm256_fmadd_pd(vset(0.0001086), s6, vset(0.9824)));
    const __m256d term_inv = _mm256_div_pd(vset(0.006206), r);
    const __m256d term_r =
        _mm256_mul_pd(r, _mm256_fmsub_pd(vset(0.000007237), r, vset(0.006656)));
    const __m256d b = _mm256_add_pd(
        _mm256_sub_pd(_mm256_sub_pd(term_s, term_inv), term_r), vset(11.881));

    const __m256d a = roughness_term(reynolds, eps);
    const __m256d z = _mm256_add_pd(b, a);
    const __m256d l = vln(z);
    return mask_valid(shape_eq3(b, z, l), reynolds, z);
}

template <typename Kernel>
void run_blocks(Kernel&& kernel, MethodId id, std::span<const double> reynolds,
                std::span<const double> roughness, std::span<double> u_out,
                const Options& opts) {
    const std::size_t n = reynolds.size();
    const std::size_t main = n - n % 4;
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d vr = _mm256_loadu_pd(reynolds.data() + i);
        const __m256d ve = _mm256_loadu_pd(roughness.data() + i);
        _mm256_storeu_pd(u_out.data() + i, kernel(vr, ve));
    }
    if (main < n) {
        eval_u_scalar(id, reynolds.subspan(main), roughness.subspan(main),
                      u_out.subspan(main), opts);
    }
}

}  // namespace

void eval_u_avx2(MethodId id, std::span<const double> reynolds,
                 std::span<const double> roughness, std::span<double> u_out,
                 const Options& opts) {
    switch (id) {
        case MethodId::Eq3:
        case MethodId::Eq5:
        case MethodId::Eq6:
            run_blocks([id](__m256d r, __m256d e) { return kernel_log_family(id, r, e); },
                       id, reynolds, roughness, u_out, opts);
            return;
        case MethodId::Eq4:
            if (!(opts.power_a >= 1e5)) {
                break;  // scalar lane raises the parameter error
            }
            run_blocks([&opts](__m256d r, __m256d e) {
                return kernel_power_family(r, e, opts);
            }, id, reynolds, roughness, u_out, opts);
            return;
        case MethodId::Eq3OneLog:
            // The rational fit underneath is only defined on [4000, 1e8]; the
            // scalar lane reports out-of-interval points by throwing, so keep
            // identical behavior rather than silently extrapolating.
            for (const double r : reynolds) {
                if (!(r >= 4000.0 && r <= 1e8)) {
                    eval_u_scalar(id, reynolds, roughness, u_out, opts);
                    return;
                }
            }
            run_blocks([](__m256d r, __m256d e) { return kernel_onelog(r, e); },
                       id, reynolds, roughness, u_out, opts);
            return;
        default:
            break;
    }
    eval_u_scalar(id, reynolds, roughness, u_out, opts);
}

}  // namespace frictionlab::batch

#endif  // FRICTIONLAB_HAVE_AVX2
