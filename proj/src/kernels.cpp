#include "fdstab/kernels.hpp"

#include <cassert>
#include <cmath>
#include <complex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fdstab::kernels {

namespace {
// Below these sizes the fork/join cost dominates.
constexpr std::size_t kStencilParallelMin = 1 << 14;
constexpr std::size_t kMatvecParallelMin = 256;
constexpr std::size_t kSymbolParallelMin = 1 << 12;
}  // namespace

void stencil_apply_serial(std::span<const double> coeffs, std::span<const double> ext,
                          std::span<double> out) {
  const std::size_t n = out.size();
  assert(ext.size() + 1 >= n + coeffs.size());
  for (std::size_t j = 0; j < n; ++j) out[j] = 0.0;
  // l outer, j inner: each pass is a contiguous axpy. The per-entry
  // summation order matches the OpenMP kernel, so both give identical bits.
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    const double c = coeffs[l];
    const double* src = ext.data() + l;
    double* dst = out.data();
    for (std::size_t j = 0; j < n; ++j) dst[j] += c * src[j];
  }
}

void stencil_apply_omp(std::span<const double> coeffs, std::span<const double> ext,
                       std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
  const std::size_t w = coeffs.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    double acc = 0.0;
    const double* src = ext.data() + j;
    for (std::size_t l = 0; l < w; ++l) acc += coeffs[l] * src[l];
    out[static_cast<std::size_t>(j)] = acc;
  }
}

void stencil_apply(std::span<const double> coeffs, std::span<const double> ext,
                   std::span<double> out) {
  if (out.size() >= kStencilParallelMin && max_threads() > 1) {
    stencil_apply_omp(coeffs, ext, out);
  } else {
    stencil_apply_serial(coeffs, ext, out);
  }
}

void matvec_serial(std::span<const double> a, std::size_t n, std::span<const double> x,
                   std::span<double> y) {
  assert(a.size() == n * n && x.size() == n && y.size() == n);
  for (std::size_t i = 0; i < n; ++i) y[i] = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double xj = x[j];
    const double* col = a.data() + j * n;
    for (std::size_t i = 0; i < n; ++i) y[i] += col[i] * xj;
  }
}

void matvec_omp(std::span<const double> a, std::size_t n, std::span<const double> x,
                std::span<double> y) {
  assert(a.size() == n * n && x.size() == n && y.size() == n);
  // Row blocks keep each thread's writes disjoint while still streaming
  // down columns.
  constexpr std::size_t kBlock = 64;
  const auto nblocks = static_cast<std::ptrdiff_t>((n + kBlock - 1) / kBlock);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::size_t i0 = static_cast<std::size_t>(b) * kBlock;
    const std::size_t i1 = std::min(n, i0 + kBlock);
    for (std::size_t i = i0; i < i1; ++i) y[i] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double xj = x[j];
      const double* col = a.data() + j * n;
      for (std::size_t i = i0; i < i1; ++i) y[i] += col[i] * xj;
    }
  }
}

void matvec(std::span<const double> a, std::size_t n, std::span<const double> x,
            std::span<double> y) {
  if (n >= kMatvecParallelMin && max_threads() > 1) {
    matvec_omp(a, n, x, y);
  } else {
    matvec_serial(a, n, x, y);
  }
}

namespace {
double modulus2_at(std::span<const double> coeffs, int r, double theta) {
  std::complex<double> c{0.0, 0.0};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int l = static_cast<int>(i) - r;
    c += coeffs[i] * std::polar(1.0, l * theta);
  }
  return std::norm(c);
}
}  // namespace

void sample_symbol_modulus2_serial(std::span<const double> coeffs, int r, double theta0,
                                   double h, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = modulus2_at(coeffs, r, theta0 + h * static_cast<double>(i));
}

void sample_symbol_modulus2_omp(std::span<const double> coeffs, int r, double theta0,
                                double h, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = modulus2_at(coeffs, r, theta0 + h * static_cast<double>(i));
}

void sample_symbol_modulus2(std::span<const double> coeffs, int r, double theta0, double h,
                            std::span<double> out) {
  if (out.size() >= kSymbolParallelMin && max_threads() > 1) {
    sample_symbol_modulus2_omp(coeffs, r, theta0, h, out);
  } else {
    sample_symbol_modulus2_serial(coeffs, r, theta0, h, out);
  }
}

double sum_squares(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_max_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace fdstab::kernels
