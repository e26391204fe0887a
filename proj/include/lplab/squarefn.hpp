#pragma once

#include "lplab/grid.hpp"
#include "lplab/intervals.hpp"
#include "lplab/lattice.hpp"
#include "lplab/spectral.hpp"
#include "lplab/trig.hpp"

#include <cstdint>
#include <vector>

namespace lplab {

/// S(f) = (sum_I |P_I f|^2)^{1/2} over a disjoint family of frequency bands.
/// Intervals holding no grid frequency contribute zero; an interval reaching
/// beyond the Nyquist band is rejected (aliasing).
///
/// The sum of squares is accumulated in frequency space: |P_I f|^2 is a
/// band-limited function whose coefficients are the autocorrelation of the
/// coefficients of f on I, so each interval costs O(W log W) instead of a
/// full-size transform.
GridFunction square_function_grid(const GridFunction& f, const IntervalCollection& c);

/// Same operator acting on a ready-made spectrum; returns real samples on the
/// grid of s.
Eigen::ArrayXd square_function_samples(const Spectrum& s, const IntervalCollection& c);

/// || P_I f ||_{L^p([x_lo, x_hi])} evaluated from the band coefficients alone:
/// the projection is band-limited, so it is sampled on its own oversampled
/// grid (never the full one). The oversampling factor doubles until the
/// n-vs-n/2 refinement error of the quadrature drops below `refine_tol` or
/// the factor cap is hit. Requires 0 <= x_lo < x_hi <= half_width.
struct BandNorm {
  double value = 0.0;
  double refinement_error = 0.0;
};
BandNorm band_lp_norm(const Spectrum& s, FrequencyInterval interval, double p,
                      double x_lo, double x_hi, double refine_tol = 1e-4,
                      int initial_oversample = 32);

// Periodic second-order square function. Every nonzero integer frequency
// falls in exactly one I+-_{k,l} with k > l >= 0; the n = 0 mode contributes
// |f^(0)|^2 on its own.
struct S2Bucket {
  int k = 0;
  int l = 0;
  int sign = +1;

  friend bool operator==(const S2Bucket& u, const S2Bucket& v) {
    return u.k == v.k && u.l == v.l && u.sign == v.sign;
  }
};

/// Bucket of a nonzero integer frequency (exact integer arithmetic).
S2Bucket s2_bucket_of(std::int64_t n);

struct S2BucketData {
  S2Bucket bucket;
  std::int64_t n_first = 0;                  // lowest frequency of the band
  std::vector<std::complex<double>> coeffs;  // dense over the band, zeros kept
};

class PeriodicSquareFunction {
 public:
  PeriodicSquareFunction(double dc_abs2, std::vector<S2BucketData> buckets)
      : dc_abs2_(dc_abs2), buckets_(std::move(buckets)) {}

  const std::vector<S2BucketData>& buckets() const { return buckets_; }
  double dc_abs2() const { return dc_abs2_; }

  /// S_2(f) on the uniform grid theta_r = r/M. M must exceed twice the widest
  /// bucket so the accumulated spectrum of S_2^2 does not alias.
  Eigen::ArrayXd samples(Eigen::Index M) const;

  /// L^2(T) norm of S_2(f) by rectangle quadrature of S_2^2 on an oversampled
  /// grid; exact for trigonometric polynomials since S_2^2 is band-limited.
  double l2_norm(int oversample = 8) const;

 private:
  double dc_abs2_ = 0.0;
  std::vector<S2BucketData> buckets_;
};

/// Exact coefficient bucketing of a trigonometric polynomial. Requires
/// 2^k_max > degree so every frequency of f is covered.
PeriodicSquareFunction square_function_periodic_S2(const TrigPolynomial& f, int k_max);

/// Smooth dyadic-lattice square function
///   S_{phi,lat}(g)(x) = ( sum_nu sum_{|I|=2^-nu} (avg_I |P~_nu g|^2) chi_I(x) )^{1/2},
/// where P~_nu has symbol phi(2^-nu xi) and avg_I is the mean of the squared
/// samples over the lattice cell containing x. Scales finer than twice the
/// grid spacing are rejected.
GridFunction smooth_square_function(const GridFunction& g, const SmoothBump& phi,
                                    const DyadicLattice& lat, int nu_min, int nu_max);

}  // namespace lplab
