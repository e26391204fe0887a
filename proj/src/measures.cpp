#include "lplab/measures.hpp"

#include "lplab/fft.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lplab {

namespace {

void require_weight_grid(double half_width, Eigen::Index n) {
  if (n < 2 || !is_power_of_two(static_cast<std::size_t>(n)))
    throw std::invalid_argument("weight grid size must be a power of two >= 2");
  if (half_width <= 0.0) throw std::invalid_argument("half_width must be positive");
}

void require_positive(const Eigen::ArrayXd& samples) {
  if (!samples.allFinite() || (samples <= 0.0).any())
    throw std::invalid_argument("weight samples must be positive and finite");
}

}  // namespace

Weight make_power_weight(double alpha, double half_width, Eigen::Index n) {
  if (!(alpha > -1.0 && alpha < 1.0))
    throw std::invalid_argument("power weight requires alpha in (-1, 1)");
  require_weight_grid(half_width, n);
  Weight w;
  w.lo = -half_width;
  w.hi = half_width;
  w.kind = Weight::Kind::power;
  w.alpha = alpha;
  w.samples.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) w.samples[j] = std::pow(std::abs(w.cell_mid(j)), alpha);
  require_positive(w.samples);
  return w;
}

Weight make_constant_weight(double value, double half_width, Eigen::Index n) {
  require_weight_grid(half_width, n);
  if (!(value > 0.0)) throw std::invalid_argument("constant weight must be positive");
  Weight w;
  w.lo = -half_width;
  w.hi = half_width;
  w.kind = Weight::Kind::constant;
  w.samples = Eigen::ArrayXd::Constant(n, value);
  return w;
}

Weight make_step_weight(double inside, double step_lo, double step_hi, double half_width,
                        Eigen::Index n) {
  require_weight_grid(half_width, n);
  if (!(inside > 0.0)) throw std::invalid_argument("step weight must be positive");
  Weight w;
  w.lo = -half_width;
  w.hi = half_width;
  w.kind = Weight::Kind::step;
  w.samples.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mid = w.cell_mid(j);
    w.samples[j] = (step_lo <= mid && mid < step_hi) ? inside : 1.0;
  }
  return w;
}

Weight make_custom_weight(Eigen::ArrayXd samples, double half_width) {
  require_weight_grid(half_width, samples.size());
  require_positive(samples);
  Weight w;
  w.lo = -half_width;
  w.hi = half_width;
  w.kind = Weight::Kind::custom;
  w.samples = std::move(samples);
  return w;
}

Weight make_periodic_weight(Eigen::ArrayXd samples) {
  if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
  require_positive(samples);
  Weight w;
  w.lo = 0.0;
  w.hi = 1.0;
  w.periodic = true;
  w.kind = Weight::Kind::custom;
  w.samples = std::move(samples);
  return w;
}

const QuadratureValue& QuadratureValue::gate(double tol) const {
  if (refinement_error > tol)
    throw QualityError("quadrature refinement error " + std::to_string(refinement_error) +
                       " exceeds " + std::to_string(tol));
  return *this;
}

QuadratureValue lp_norm_grid(const GridFunction& f, double p, double lo, double hi) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("empty quadrature domain");
  if (lo < -f.half_width || hi > f.half_width)
    throw std::invalid_argument("domain must lie inside [-T, T)");
  const double h = f.spacing();
  const Eigen::Index j0 =
      static_cast<Eigen::Index>(std::ceil((lo + f.half_width) / h - 1e-12));
  const Eigen::Index j1 =
      static_cast<Eigen::Index>(std::ceil((hi + f.half_width) / h - 1e-12));
  if (j1 <= j0) throw std::invalid_argument("domain holds no grid point");

  double sum = 0.0, sum_half = 0.0;
  for (Eigen::Index j = j0; j < j1; ++j) {
    const double v = std::pow(std::abs(f.samples[j]), p);
    sum += v;
    if (((j - j0) & 1) == 0) sum_half += v;
  }
  QuadratureValue out;
  out.value = std::pow(sum * h, 1.0 / p);
  const double value_half = std::pow(sum_half * 2.0 * h, 1.0 / p);
  out.refinement_error = out.value > 0.0 ? std::abs(out.value - value_half) / out.value : 0.0;
  return out;
}

QuadratureValue lp_norm_grid(const GridFunction& f, double p) {
  return lp_norm_grid(f, p, -f.half_width, f.half_width);
}

QuadratureValue lp_norm_periodic(const TrigPolynomial& f, double p, int oversample) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (oversample < 2) throw std::invalid_argument("oversample must be >= 2");
  const std::int64_t D = f.degree();
  const std::size_t M = next_power_of_two(std::max<std::size_t>(
      64, static_cast<std::size_t>(oversample) * static_cast<std::size_t>(D + 1)));
  // Evaluate on theta_r = r/M with one FFT; M > 2D so the index map n mod M
  // is collision-free.
  std::vector<std::complex<double>> buf(M, {0.0, 0.0});
  for (const auto& [n, c] : f.coefficients) {
    const std::int64_t slot = ((n % static_cast<std::int64_t>(M)) + static_cast<std::int64_t>(M)) %
                              static_cast<std::int64_t>(M);
    buf[static_cast<std::size_t>(slot)] += c;
  }
  plan_for(M)->inverse(buf.data());

  double sum = 0.0, sum_half = 0.0;
  for (std::size_t r = 0; r < M; ++r) {
    const double v = std::pow(std::abs(buf[r]), p);
    sum += v;
    if ((r & 1) == 0) sum_half += v;
  }
  QuadratureValue out;
  out.value = std::pow(sum / static_cast<double>(M), 1.0 / p);
  const double value_half = std::pow(sum_half / static_cast<double>(M / 2), 1.0 / p);
  out.refinement_error = out.value > 0.0 ? std::abs(out.value - value_half) / out.value : 0.0;
  return out;
}

double weighted_l2_norm(const GridFunction& f, const Weight& w) {
  if (w.periodic || w.n() != f.n() || w.lo != -f.half_width || w.hi != f.half_width)
    throw std::invalid_argument("weight grid does not match the function grid");
  const double h = f.spacing();
  double sum = 0.0;
  for (Eigen::Index j = 0; j < f.n(); ++j) sum += std::norm(f.samples[j]) * w.samples[j];
  return std::sqrt(sum * h);
}

A2Report a2_characteristic(const Weight& w) {
  const Eigen::Index n = w.n();
  const double h = w.spacing();
  // Prefix sums of w and 1/w over cells; doubled when periodic so wrapped
  // arcs are contiguous ranges.
  const Eigen::Index span = w.periodic ? 2 * n : n;
  std::vector<double> pw(span + 1, 0.0), pv(span + 1, 0.0);
  long double aw = 0.0L, av = 0.0L;
  for (Eigen::Index i = 0; i < span; ++i) {
    const double s = w.samples[i % n];
    aw += s;
    av += 1.0 / s;
    pw[i + 1] = static_cast<double>(aw);
    pv[i + 1] = static_cast<double>(av);
  }

  A2Report report;
  report.characteristic = 0.0;
  Eigen::Index best_a = 0, best_len = 0;
  for (Eigen::Index len = 1; len <= n; len *= 2) {
    const Eigen::Index a_max = w.periodic ? n - 1 : n - len;
    for (Eigen::Index a = 0; a <= a_max; ++a) {
      const double mw = (pw[a + len] - pw[a]) / static_cast<double>(len);
      const double mv = (pv[a + len] - pv[a]) / static_cast<double>(len);
      const double prod = mw * mv;
      ++report.family_size;
      if (prod > report.characteristic ||
          (prod == report.characteristic &&
           (a < best_a || (a == best_a && len < best_len)))) {
        report.characteristic = prod;
        best_a = a;
        best_len = len;
      }
    }
  }
  report.argmax = {w.lo + static_cast<double>(best_a) * h,
                   w.lo + static_cast<double>(best_a + best_len) * h};
  return report;
}

Weight dyadic_average_weight(const Weight& sigma, int nu, const DyadicLattice& lat) {
  if (sigma.periodic) throw std::invalid_argument("dyadic averaging acts on line weights");
  const double h = sigma.spacing();
  if (std::ldexp(1.0, -nu) < 2.0 * h)
    throw std::invalid_argument("lattice scale finer than the grid");
  const Eigen::Index n = sigma.n();
  Weight out = sigma;
  out.kind = Weight::Kind::custom;
  Eigen::Index j = 0;
  while (j < n) {
    const std::int64_t cell = lat.cell_index(nu, sigma.cell_mid(j));
    Eigen::Index j_end = j + 1;
    while (j_end < n && lat.cell_index(nu, sigma.cell_mid(j_end)) == cell) ++j_end;
    const double mean = sigma.samples.segment(j, j_end - j).mean();
    out.samples.segment(j, j_end - j) = mean;
    j = j_end;
  }
  return out;
}

}  // namespace lplab
