#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "wusim/kernels.hpp"

namespace wusim::kern {

namespace scalar {
double dot(const double*, const double*, std::size_t);
void axpy(double, const double*, double*, std::size_t);
double sum_sq(const double*, std::size_t);
void caxpy(std::complex<double>, const std::complex<double>*,
           std::complex<double>*, std::size_t);
std::complex<double> cdotc(const std::complex<double>*,
                           const std::complex<double>*, std::size_t);
double csum_sq(const std::complex<double>*, std::size_t);
void lif_update(double*, const double*, double, double, std::uint8_t*,
                std::size_t);
}  // namespace scalar

#ifdef WUSIM_HAVE_AVX2
namespace avx2 {
double dot(const double*, const double*, std::size_t);
void axpy(double, const double*, double*, std::size_t);
double sum_sq(const double*, std::size_t);
void caxpy(std::complex<double>, const std::complex<double>*,
           std::complex<double>*, std::size_t);
std::complex<double> cdotc(const std::complex<double>*,
                           const std::complex<double>*, std::size_t);
double csum_sq(const std::complex<double>*, std::size_t);
void lif_update(double*, const double*, double, double, std::uint8_t*,
                std::size_t);
}  // namespace avx2
#endif

namespace {

struct Table {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*sum_sq)(const double*, std::size_t);
  void (*caxpy)(std::complex<double>, const std::complex<double>*,
                std::complex<double>*, std::size_t);
  std::complex<double> (*cdotc)(const std::complex<double>*,
                                const std::complex<double>*, std::size_t);
  double (*csum_sq)(const std::complex<double>*, std::size_t);
  void (*lif_update)(double*, const double*, double, double, std::uint8_t*,
                     std::size_t);
};

constexpr Table kScalar = {scalar::dot,   scalar::axpy,    scalar::sum_sq,
                           scalar::caxpy, scalar::cdotc,   scalar::csum_sq,
                           scalar::lif_update};
#ifdef WUSIM_HAVE_AVX2
constexpr Table kAvx2 = {avx2::dot,   avx2::axpy,  avx2::sum_sq, avx2::caxpy,
                         avx2::cdotc, avx2::csum_sq, avx2::lif_update};
#endif

Isa g_isa = Isa::scalar;
const Table* g_table = &kScalar;

void apply(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      g_table = &kScalar;
      break;
    case Isa::avx2:
#ifdef WUSIM_HAVE_AVX2
      g_table = &kAvx2;
      break;
#else
      throw std::invalid_argument("avx2 kernels not compiled in");
#endif
  }
  g_isa = isa;
}

struct Init {
  Init() {
    Isa pick = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    if (const char* env = std::getenv("WUSIM_SIMD")) {
      if (std::strcmp(env, "scalar") == 0) pick = Isa::scalar;
      else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) pick = Isa::avx2;
      // Unknown or unsupported values fall back to the detected best.
    }
    apply(pick);
  }
};
Init g_init;

}  // namespace

bool cpu_has_avx2() {
#if defined(WUSIM_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active() { return g_isa; }

const char* isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !cpu_has_avx2())
    throw std::invalid_argument("avx2 not supported on this CPU");
  apply(isa);
}

double dot(const double* a, const double* b, std::size_t n) {
  return g_table->dot(a, b, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) {
  g_table->axpy(a, x, y, n);
}
double sum_sq(const double* x, std::size_t n) { return g_table->sum_sq(x, n); }
void caxpy(std::complex<double> a, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n) {
  g_table->caxpy(a, x, y, n);
}
std::complex<double> cdotc(const std::complex<double>* a,
                           const std::complex<double>* b, std::size_t n) {
  return g_table->cdotc(a, b, n);
}
double csum_sq(const std::complex<double>* x, std::size_t n) {
  return g_table->csum_sq(x, n);
}
void lif_update(double* v, const double* current, double beta, double theta,
                std::uint8_t* spikes, std::size_t n) {
  g_table->lif_update(v, current, beta, theta, spikes, n);
}

}  // namespace wusim::kern
