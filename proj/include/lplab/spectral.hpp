#pragma once

#include "lplab/grid.hpp"
#include "lplab/intervals.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace lplab {

/// Discrete approximation of f^(xi) = int f(x) e^{-2 pi i xi x} dx on the
/// grid frequencies xi_m = m/(2T). Rejects non-power-of-two sizes and
/// non-finite samples.
Spectrum forward_transform(const GridFunction& f);

/// Inverse of forward_transform: f(x_j) = (1/2T) sum_m c_m e^{2 pi i xi_m x_j}.
GridFunction inverse_transform(const Spectrum& s);

/// Multiplier operator with symbol m: spectrum is multiplied pointwise by
/// m(xi) and transformed back. Throws if the symbol is non-finite at a grid
/// frequency.
GridFunction apply_multiplier(const GridFunction& f,
                              const std::function<std::complex<double>(double)>& symbol);

/// Frequency projection onto [a, b): keeps coefficients with xi_m in the
/// half-open interval, zeroes the rest. Membership is exact (endpoints are
/// dyadic rationals).
GridFunction project(const GridFunction& f, FrequencyInterval interval);
Spectrum project(const Spectrum& s, FrequencyInterval interval);

/// Index range [first, last) of storage indices whose frequency lies in the
/// interval, clamped to the grid.
std::pair<Eigen::Index, Eigen::Index> band_index_range(const Spectrum& s,
                                                       FrequencyInterval interval);

/// Multiplies samples by e^{-2 pi i t x_j}, shifting the spectrum by -t.
/// t must be a multiple of the frequency step 1/(2T).
GridFunction modulate(const GridFunction& f, double t);

// Real-valued bump profile with declared support and plateau.
struct SmoothBump {
  std::function<double(double)> value;
  std::vector<FrequencyInterval> support;   // value is zero outside these
  std::vector<FrequencyInterval> plateau;   // value is exactly one on these

  double operator()(double t) const { return value(t); }
};

/// C^inf even cutoff: 1 on [-1,1], 0 outside [-2,2], built from the
/// exp(-1/t) transition s(t) = h(t)/(h(t)+h(1-t)).
SmoothBump make_transition();

/// phi(xi) = sqrt(rho(xi) - rho(2 xi)) with rho = make_transition():
/// supported in +-[1/2, 2] and sum_nu phi(2^-nu xi)^2 = 1 for xi != 0.
SmoothBump make_phi_partition();

}  // namespace lplab
