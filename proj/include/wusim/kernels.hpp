#pragma once

// Arithmetic inner loops used by the chip-level channel simulation and the
// spiking-network runners. Every kernel has a scalar reference implementation
// and an AVX2 variant; the active one is chosen at runtime from CPUID, the
// WUSIM_SIMD environment variable ("scalar" or "avx2"), or force_isa().
//
// SIMD variants may reassociate sums, so results can differ from the scalar
// reference in the last bits. Equivalence tests bound that difference; a
// fixed ISA selection makes whole-program output reproducible.

#include <complex>
#include <cstddef>
#include <cstdint>

namespace wusim::kern {

enum class Isa { scalar, avx2 };

// ISA picked at startup (env override wins, otherwise best supported).
Isa active();
const char* isa_name(Isa isa);
bool cpu_has_avx2();
// Explicit selection; throws std::invalid_argument if unsupported on this CPU.
void force_isa(Isa isa);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);
// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
// sum_i x[i]^2
double sum_sq(const double* x, std::size_t n);

// Complex kernels operate on std::complex<double> arrays (interleaved re,im).
// y[i] += a*x[i]
void caxpy(std::complex<double> a, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n);
// sum_i conj(a[i])*b[i]
std::complex<double> cdotc(const std::complex<double>* a,
                           const std::complex<double>* b, std::size_t n);
// sum_i |x[i]|^2
double csum_sq(const std::complex<double>* x, std::size_t n);

// One leaky-integrate-and-fire update over a layer:
//   v[i] = beta*v[i] + current[i]; spikes[i] = v[i] >= theta; fired v reset to 0.
void lif_update(double* v, const double* current, double beta, double theta,
                std::uint8_t* spikes, std::size_t n);

}  // namespace wusim::kern
