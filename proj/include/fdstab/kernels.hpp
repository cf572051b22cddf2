#pragma once

#include <span>
#include <vector>

namespace fdstab::kernels {

// Each data-parallel kernel comes in a serial reference form and an OpenMP
// form; the plain-named entry point dispatches on problem size. The serial
// versions are what the tests compare the parallel ones against.

/// out[j] = sum_{l=-r}^{p} coeffs[l + r] * ext[j + r + l], j in [0, out.size()).
/// ext must hold out.size() + coeffs.size() - 1 values.
void stencil_apply_serial(std::span<const double> coeffs, std::span<const double> ext,
                          std::span<double> out);
void stencil_apply_omp(std::span<const double> coeffs, std::span<const double> ext,
                       std::span<double> out);
void stencil_apply(std::span<const double> coeffs, std::span<const double> ext,
                   std::span<double> out);

/// y = A x for a column-major n x n matrix.
void matvec_serial(std::span<const double> a, std::size_t n, std::span<const double> x,
                   std::span<double> y);
void matvec_omp(std::span<const double> a, std::size_t n, std::span<const double> x,
                std::span<double> y);
void matvec(std::span<const double> a, std::size_t n, std::span<const double> x,
            std::span<double> y);

/// out[i] = |C(theta0 + i h)|^2 with C(theta) = sum_l coeffs[l + r] e^{i l theta}.
void sample_symbol_modulus2_serial(std::span<const double> coeffs, int r, double theta0,
                                   double h, std::span<double> out);
void sample_symbol_modulus2_omp(std::span<const double> coeffs, int r, double theta0,
                                double h, std::span<double> out);
void sample_symbol_modulus2(std::span<const double> coeffs, int r, double theta0, double h,
                            std::span<double> out);

/// sum x_i^2, accumulated in a fixed order so results are reproducible.
double sum_squares(std::span<const double> x);

/// Number of threads the OpenMP kernels will use (1 without OpenMP).
int max_threads();
/// Caps the OpenMP thread count; n <= 0 leaves the runtime default.
void set_max_threads(int n);

}  // namespace fdstab::kernels
