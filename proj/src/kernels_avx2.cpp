// Compiled with -mavx2 only; the dispatcher calls into this unit after a
// runtime CPU check. No FMA so results match the scalar reference bit for bit.
#include "kernels_impl.hpp"

#if defined(RATDYN_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cstdint>

namespace ratdyn::kernels::detail {

namespace {

struct C4 {
  __m256d re, im;
};

inline C4 cmul(C4 a, C4 b) {
  return {_mm256_sub_pd(_mm256_mul_pd(a.re, b.re), _mm256_mul_pd(a.im, b.im)),
          _mm256_add_pd(_mm256_mul_pd(a.re, b.im), _mm256_mul_pd(a.im, b.re))};
}

inline C4 cadd(C4 a, C4 b) { return {_mm256_add_pd(a.re, b.re), _mm256_add_pd(a.im, b.im)}; }

inline C4 homogeneous_eval(const std::vector<double>& cr, const std::vector<double>& ci, int d,
                           C4 z, C4 w) {
  C4 acc{_mm256_set1_pd(cr[static_cast<std::size_t>(d)]), _mm256_set1_pd(ci[static_cast<std::size_t>(d)])};
  C4 pw{_mm256_set1_pd(1.0), _mm256_setzero_pd()};
  for (int k = d - 1; k >= 0; --k) {
    pw = cmul(pw, w);
    C4 c{_mm256_set1_pd(cr[static_cast<std::size_t>(k)]), _mm256_set1_pd(ci[static_cast<std::size_t>(k)])};
    C4 t = cmul(c, pw);
    acc = cadd(cmul(acc, z), t);
  }
  return acc;
}

inline __m256d norm2(C4 a, C4 b) {
  return _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(a.re, a.re), _mm256_mul_pd(a.im, a.im)),
                       _mm256_add_pd(_mm256_mul_pd(b.re, b.re), _mm256_mul_pd(b.im, b.im)));
}

}  // namespace

void horner_eval_avx2(const HornerBatch& b, std::size_t n4) {
  const std::size_t n = b.c_re.size();
  for (std::size_t i = 0; i < n4; i += 4) {
    C4 z{_mm256_loadu_pd(&b.z_re[i]), _mm256_loadu_pd(&b.z_im[i])};
    C4 p{_mm256_setzero_pd(), _mm256_setzero_pd()};
    C4 dp{_mm256_setzero_pd(), _mm256_setzero_pd()};
    for (std::size_t k = n; k-- > 0;) {
      C4 ndp = cadd(cmul(dp, z), p);
      C4 c{_mm256_set1_pd(b.c_re[k]), _mm256_set1_pd(b.c_im[k])};
      C4 np = cadd(cmul(p, z), c);
      dp = ndp;
      p = np;
    }
    _mm256_storeu_pd(&b.p_re[i], p.re);
    _mm256_storeu_pd(&b.p_im[i], p.im);
    _mm256_storeu_pd(&b.dp_re[i], dp.re);
    _mm256_storeu_pd(&b.dp_im[i], dp.im);
  }
}

void attraction_time_avx2(const AttractionBatch& b, std::size_t n4) {
  const HomogeneousMap& m = *b.map;
  const __m256d thr2 = _mm256_set1_pd(b.threshold * b.threshold);
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < n4; i += 4) {
    C4 z{_mm256_loadu_pd(&b.z_re[i]), _mm256_loadu_pd(&b.z_im[i])};
    C4 w{one, _mm256_setzero_pd()};
    {
      __m256d s = _mm256_div_pd(one, _mm256_sqrt_pd(norm2(z, w)));
      z = {_mm256_mul_pd(z.re, s), _mm256_mul_pd(z.im, s)};
      w = {_mm256_mul_pd(w.re, s), _mm256_mul_pd(w.im, s)};
    }
    alignas(32) std::int32_t result[4] = {b.max_iter, b.max_iter, b.max_iter, b.max_iter};
    int done = 0;
    for (int it = 0; it < b.max_iter && done != 0xF; ++it) {
      __m256d hit = _mm256_setzero_pd();
      for (const Attractor& a : b.attractors) {
        C4 aw{_mm256_set1_pd(a.w_re), _mm256_set1_pd(a.w_im)};
        C4 az{_mm256_set1_pd(a.z_re), _mm256_set1_pd(a.z_im)};
        C4 l = cmul(z, aw);
        C4 r = cmul(w, az);
        C4 x{_mm256_sub_pd(l.re, r.re), _mm256_sub_pd(l.im, r.im)};
        __m256d d2 = _mm256_add_pd(_mm256_mul_pd(x.re, x.re), _mm256_mul_pd(x.im, x.im));
        hit = _mm256_or_pd(hit, _mm256_cmp_pd(d2, thr2, _CMP_LT_OQ));
      }
      int mask = _mm256_movemask_pd(hit) & ~done;
      for (int lane = 0; lane < 4; ++lane)
        if (mask & (1 << lane)) result[lane] = it;
      done |= mask;
      if (done == 0xF) break;
      C4 p = homogeneous_eval(m.p_re, m.p_im, m.degree, z, w);
      C4 q = homogeneous_eval(m.q_re, m.q_im, m.degree, z, w);
      __m256d s = _mm256_div_pd(one, _mm256_sqrt_pd(norm2(p, q)));
      z = {_mm256_mul_pd(p.re, s), _mm256_mul_pd(p.im, s)};
      w = {_mm256_mul_pd(q.re, s), _mm256_mul_pd(q.im, s)};
    }
    for (int lane = 0; lane < 4; ++lane) b.out[i + static_cast<std::size_t>(lane)] = result[lane];
  }
}

}  // namespace ratdyn::kernels::detail

#endif
