#include "wusim/kernels.hpp"

// Reference implementations. Kept branch-free and in the plainest possible
// loop form; the AVX2 variants are validated against these.

namespace wusim::kern::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_sq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void caxpy(std::complex<double> a, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = xs[2 * i], xi = xs[2 * i + 1];
    ys[2 * i] += ar * xr - ai * xi;
    ys[2 * i + 1] += ar * xi + ai * xr;
  }
}

std::complex<double> cdotc(const std::complex<double>* a,
                           const std::complex<double>* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  const double* as = reinterpret_cast<const double*>(a);
  const double* bs = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = as[2 * i], ai = as[2 * i + 1];
    const double br = bs[2 * i], bi = bs[2 * i + 1];
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double csum_sq(const std::complex<double>* x, std::size_t n) {
  const double* xs = reinterpret_cast<const double*>(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) acc += xs[i] * xs[i];
  return acc;
}

void lif_update(double* v, const double* current, double beta, double theta,
                std::uint8_t* spikes, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double pre = beta * v[i] + current[i];
    const bool fired = pre >= theta;
    spikes[i] = fired ? 1 : 0;
    v[i] = fired ? 0.0 : pre;
  }
}

}  // namespace wusim::kern::scalar
