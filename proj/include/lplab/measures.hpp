#pragma once

#include "lplab/grid.hpp"
#include "lplab/intervals.hpp"
#include "lplab/lattice.hpp"
#include "lplab/trig.hpp"

#include <Eigen/Core>

#include <stdexcept>

namespace lplab {

// Raised when a quadrature fails its refinement gate; maps to exit code 2 in
// the CLI.
class QualityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Positive sampled weight. Sample j is the value on the grid cell
// [lo + j*h, lo + (j+1)*h), taken at the cell midpoint, so power weights
// never see x = 0. Line weights live on [-T, T); periodic weights on [0, 1).
struct Weight {
  enum class Kind { constant, power, step, custom };

  Eigen::ArrayXd samples;
  double lo = -1.0;
  double hi = 1.0;
  bool periodic = false;
  Kind kind = Kind::custom;
  double alpha = 0.0;

  Eigen::Index n() const { return samples.size(); }
  double spacing() const { return (hi - lo) / static_cast<double>(n()); }
  double cell_mid(Eigen::Index j) const {
    return lo + (static_cast<double>(j) + 0.5) * spacing();
  }
};

/// |x|^alpha on cell midpoints of [-T, T); alpha must lie in (-1, 1).
Weight make_power_weight(double alpha, double half_width, Eigen::Index n);
Weight make_constant_weight(double value, double half_width, Eigen::Index n);
/// `inside` on [step_lo, step_hi) (by cell midpoint), 1 elsewhere.
Weight make_step_weight(double inside, double step_lo, double step_hi, double half_width,
                        Eigen::Index n);
Weight make_custom_weight(Eigen::ArrayXd samples, double half_width);
Weight make_periodic_weight(Eigen::ArrayXd samples);

struct QuadratureValue {
  double value = 0.0;
  double refinement_error = 0.0;  // |value(n) - value(n/2)| / value(n)

  /// Throws QualityError if the refinement error exceeds tol.
  const QuadratureValue& gate(double tol = 1e-4) const;
};

/// Composite rectangle quadrature of |f|^p over [lo, hi) in sample steps,
/// p-th root taken; the refinement estimate compares against the half grid.
QuadratureValue lp_norm_grid(const GridFunction& f, double p, double lo, double hi);
QuadratureValue lp_norm_grid(const GridFunction& f, double p);

/// L^p(T) norm of a trigonometric polynomial by rectangle quadrature on a
/// grid oversampled by `oversample` relative to the degree.
QuadratureValue lp_norm_periodic(const TrigPolynomial& f, double p, int oversample = 8);

/// (sum |f_j|^2 w_j h)^{1/2}; the weight grid must match the function grid.
double weighted_l2_norm(const GridFunction& f, const Weight& w);

struct A2Report {
  double characteristic = 1.0;
  FrequencyInterval argmax;  // spatial interval attaining the maximum
  std::size_t family_size = 0;
};

/// [w]_{A2} = max over the scan family of <w>_I <w^{-1}>_I, via prefix sums.
/// The family is every grid-aligned start with lengths subsampled
/// geometrically (1, 2, 4, ... cells); ties prefer the smaller left endpoint,
/// then the smaller length. Periodic weights scan wrapped arcs.
A2Report a2_characteristic(const Weight& w);

/// Piecewise-constant weight with value <sigma>_I on each lattice cell of
/// scale 2^-nu; cell mass is preserved exactly.
Weight dyadic_average_weight(const Weight& sigma, int nu, const DyadicLattice& lat);

}  // namespace lplab
