#pragma once

#include <Eigen/Core>

#include <complex>

namespace lplab {

// Complex samples on the uniform grid x_j = -T + j*h, h = 2T/n, over [-T, T).
// n is a power of two. The matching frequency grid is xi_m = m/(2T) for
// m in [-n/2, n/2); the Nyquist frequency is n/(4T).
struct GridFunction {
  Eigen::ArrayXcd samples;
  double half_width = 1.0;  // T

  Eigen::Index n() const { return samples.size(); }
  double spacing() const { return 2.0 * half_width / static_cast<double>(n()); }
  double x(Eigen::Index j) const { return -half_width + static_cast<double>(j) * spacing(); }
  double freq_step() const { return 1.0 / (2.0 * half_width); }
  double nyquist() const { return static_cast<double>(n()) / (4.0 * half_width); }
};

// Fourier coefficients in ascending frequency order: coefficients[i] belongs
// to xi_m with m = i - n/2. Normalized so that coefficients approximate the
// continuum transform  f^(xi) = int f(x) e^{-2 pi i xi x} dx.
struct Spectrum {
  Eigen::ArrayXcd coefficients;
  double half_width = 1.0;

  Eigen::Index n() const { return coefficients.size(); }
  double freq_step() const { return 1.0 / (2.0 * half_width); }
  double nyquist() const { return static_cast<double>(n()) / (4.0 * half_width); }
  // Frequency of storage index i.
  double xi(Eigen::Index i) const {
    return static_cast<double>(i - n() / 2) * freq_step();
  }
};

}  // namespace lplab
