// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has checked CPUID.

#include <immintrin.h>

#include "wusim/kernels.hpp"

namespace wusim::kern::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return hsum(acc) + tail;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double sum_sq(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i] * x[i];
  return hsum(acc) + tail;
}

void caxpy(std::complex<double> a, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n) {
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  // Two complex values per 256-bit lane: [x0r x0i x1r x1i].
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d xswap = _mm256_permute_pd(xv, 0x5);  // [x0i x0r x1i x1r]
    // addsub:  even lanes subtract, odd lanes add -> complex multiply.
    const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(ar, xv),
                                          _mm256_mul_pd(ai, xswap));
    _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(_mm256_loadu_pd(ys + 2 * i), prod));
  }
  for (; i < n; ++i) {
    const double xr = xs[2 * i], xi = xs[2 * i + 1];
    ys[2 * i] += a.real() * xr - a.imag() * xi;
    ys[2 * i + 1] += a.real() * xi + a.imag() * xr;
  }
}

std::complex<double> cdotc(const std::complex<double>* a,
                           const std::complex<double>* b, std::size_t n) {
  const double* as = reinterpret_cast<const double*>(a);
  const double* bs = reinterpret_cast<const double*>(b);
  // re = sum ar*br + ai*bi ; im = sum ar*bi - ai*br.
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d av = _mm256_loadu_pd(as + 2 * i);
    const __m256d bv = _mm256_loadu_pd(bs + 2 * i);
    const __m256d bswap = _mm256_permute_pd(bv, 0x5);
    acc_re = _mm256_fmadd_pd(av, bv, acc_re);
    acc_im = _mm256_fmadd_pd(av, bswap, acc_im);
  }
  // acc_re lanes: [a0r*b0r, a0i*b0i, ...] all add into re.
  const double re = hsum(acc_re);
  // acc_im lanes: [a0r*b0i, a0i*b0r, ...]; im needs even minus odd lanes.
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc_im);
  double im = lanes[0] - lanes[1] + lanes[2] - lanes[3];
  double re_tail = 0.0, im_tail = 0.0;
  for (; i < n; ++i) {
    const double ar = as[2 * i], ai = as[2 * i + 1];
    const double br = bs[2 * i], bi = bs[2 * i + 1];
    re_tail += ar * br + ai * bi;
    im_tail += ar * bi - ai * br;
  }
  return {re + re_tail, im + im_tail};
}

double csum_sq(const std::complex<double>* x, std::size_t n) {
  return sum_sq(reinterpret_cast<const double*>(x), 2 * n);
}

void lif_update(double* v, const double* current, double beta, double theta,
                std::uint8_t* spikes, std::size_t n) {
  const __m256d bv = _mm256_set1_pd(beta);
  const __m256d tv = _mm256_set1_pd(theta);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d pre = _mm256_fmadd_pd(bv, _mm256_loadu_pd(v + i),
                                  _mm256_loadu_pd(current + i));
    const __m256d fired = _mm256_cmp_pd(pre, tv, _CMP_GE_OQ);
    const int mask = _mm256_movemask_pd(fired);
    spikes[i] = static_cast<std::uint8_t>(mask & 1);
    spikes[i + 1] = static_cast<std::uint8_t>((mask >> 1) & 1);
    spikes[i + 2] = static_cast<std::uint8_t>((mask >> 2) & 1);
    spikes[i + 3] = static_cast<std::uint8_t>((mask >> 3) & 1);
    _mm256_storeu_pd(v + i, _mm256_blendv_pd(pre, zero, fired));
  }
  for (; i < n; ++i) {
    const double pre = beta * v[i] + current[i];
    const bool fired = pre >= theta;
    spikes[i] = fired ? 1 : 0;
    v[i] = fired ? 0.0 : pre;
  }
}

}  // namespace wusim::kern::avx2
