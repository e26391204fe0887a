#include "lplab/spectral.hpp"

#include "lplab/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace lplab {

namespace {

void require_grid(const GridFunction& f) {
  if (f.n() < 2 || !is_power_of_two(static_cast<std::size_t>(f.n())))
    throw std::invalid_argument("grid size must be a power of two >= 2");
  if (f.half_width <= 0.0) throw std::invalid_argument("half_width must be positive");
  if (!f.samples.allFinite()) throw std::invalid_argument("non-finite samples");
}

void require_spectrum(const Spectrum& s) {
  if (s.n() < 2 || !is_power_of_two(static_cast<std::size_t>(s.n())))
    throw std::invalid_argument("spectrum size must be a power of two >= 2");
  if (s.half_width <= 0.0) throw std::invalid_argument("half_width must be positive");
  if (!s.coefficients.allFinite()) throw std::invalid_argument("non-finite coefficients");
}

}  // namespace

Spectrum forward_transform(const GridFunction& f) {
  require_grid(f);
  const Eigen::Index n = f.n();
  const double h = f.spacing();
  std::vector<std::complex<double>> buf(f.samples.data(), f.samples.data() + n);
  plan_for(static_cast<std::size_t>(n))->forward(buf.data());
  Spectrum s;
  s.half_width = f.half_width;
  s.coefficients.resize(n);
  // c_m = h * (-1)^m * F_m, stored ascending in m = i - n/2; F index is m mod n.
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index m = i - n / 2;
    const double sign = (m & 1) ? -1.0 : 1.0;
    s.coefficients[i] = h * sign * buf[static_cast<std::size_t>((i + n / 2) % n)];
  }
  return s;
}

GridFunction inverse_transform(const Spectrum& s) {
  require_spectrum(s);
  const Eigen::Index n = s.n();
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index m = i - n / 2;
    const double sign = (m & 1) ? -1.0 : 1.0;
    buf[static_cast<std::size_t>((i + n / 2) % n)] = sign * s.coefficients[i];
  }
  plan_for(static_cast<std::size_t>(n))->inverse(buf.data());
  GridFunction f;
  f.half_width = s.half_width;
  f.samples.resize(n);
  const double scale = 1.0 / (2.0 * s.half_width);
  for (Eigen::Index j = 0; j < n; ++j) f.samples[j] = scale * buf[static_cast<std::size_t>(j)];
  return f;
}

GridFunction apply_multiplier(const GridFunction& f,
                              const std::function<std::complex<double>(double)>& symbol) {
  Spectrum s = forward_transform(f);
  for (Eigen::Index i = 0; i < s.n(); ++i) {
    const std::complex<double> v = symbol(s.xi(i));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("multiplier symbol is non-finite at a grid frequency");
    s.coefficients[i] *= v;
  }
  return inverse_transform(s);
}

std::pair<Eigen::Index, Eigen::Index> band_index_range(const Spectrum& s,
                                                       FrequencyInterval interval) {
  if (!(interval.a < interval.b)) throw std::invalid_argument("interval requires a < b");
  const double twoT = 2.0 * s.half_width;
  // xi_m in [a, b)  <=>  m in [a*2T, b*2T), endpoints exact dyadics.
  const double lo = interval.a * twoT;
  const double hi = interval.b * twoT;
  Eigen::Index m_first = static_cast<Eigen::Index>(std::ceil(lo));
  Eigen::Index m_last = static_cast<Eigen::Index>(std::ceil(hi));  // exclusive
  const Eigen::Index n = s.n();
  m_first = std::max<Eigen::Index>(m_first, -n / 2);
  m_last = std::min<Eigen::Index>(m_last, n / 2);
  if (m_last < m_first) m_last = m_first;
  return {m_first + n / 2, m_last + n / 2};
}

Spectrum project(const Spectrum& s, FrequencyInterval interval) {
  require_spectrum(s);
  auto [first, last] = band_index_range(s, interval);
  Spectrum out;
  out.half_width = s.half_width;
  out.coefficients = Eigen::ArrayXcd::Zero(s.n());
  out.coefficients.segment(first, last - first) = s.coefficients.segment(first, last - first);
  return out;
}

GridFunction project(const GridFunction& f, FrequencyInterval interval) {
  return inverse_transform(project(forward_transform(f), interval));
}

GridFunction modulate(const GridFunction& f, double t) {
  require_grid(f);
  const double steps = t * 2.0 * f.half_width;
  if (steps != std::round(steps))
    throw std::invalid_argument("modulation shift must be a multiple of 1/(2T)");
  GridFunction out;
  out.half_width = f.half_width;
  out.samples.resize(f.n());
  for (Eigen::Index j = 0; j < f.n(); ++j) {
    const double ang = -2.0 * M_PI * t * f.x(j);
    out.samples[j] = f.samples[j] * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return out;
}

namespace {

double h_exp(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// s(0)=0, s(1)=1, C^inf monotone transition.
double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = h_exp(u);
  const double b = h_exp(1.0 - u);
  return a / (a + b);
}

double transition_value(double t) { return smooth_step(2.0 - std::abs(t)); }

}  // namespace

SmoothBump make_transition() {
  SmoothBump bump;
  bump.value = [](double t) { return transition_value(t); };
  bump.support = {{-2.0, 2.0}};
  bump.plateau = {{-1.0, 1.0}};
  return bump;
}

SmoothBump make_phi_partition() {
  SmoothBump bump;
  bump.value = [](double xi) {
    const double d = transition_value(xi) - transition_value(2.0 * xi);
    return d > 0.0 ? std::sqrt(d) : 0.0;
  };
  bump.support = {{-2.0, -0.5}, {0.5, 2.0}};
  bump.plateau = {};  // equals one only at |xi| = 1
  return bump;
}

}  // namespace lplab
