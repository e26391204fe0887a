#include "lplab/squarefn.hpp"

#include "lplab/fft.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lplab {

namespace {

// r_d = sum_w u_w conj(u_{w-d}) for d in (-(W-1), W-1), returned with
// r[d + W - 1] = r_d. Computed with zero-padded FFTs of size >= 2W.
std::vector<std::complex<double>> autocorrelation(const std::complex<double>* u,
                                                  std::size_t W) {
  std::vector<std::complex<double>> r(2 * W - 1);
  if (W == 1) {
    r[0] = std::norm(u[0]);
    return r;
  }
  const std::size_t M = next_power_of_two(2 * W);
  std::vector<std::complex<double>> buf(M, {0.0, 0.0});
  for (std::size_t w = 0; w < W; ++w) buf[w] = u[w];
  auto plan = plan_for(M);
  plan->forward(buf.data());
  for (auto& v : buf) v = std::norm(v);
  plan->inverse(buf.data());
  const double inv_m = 1.0 / static_cast<double>(M);
  for (std::size_t d = 0; d < W; ++d) r[W - 1 + d] = buf[d] * inv_m;
  for (std::size_t d = 1; d < W; ++d) r[W - 1 - d] = buf[M - d] * inv_m;
  return r;
}

void require_within_nyquist(const Spectrum& s, const FrequencyInterval& iv) {
  if (iv.b > s.nyquist() || iv.a < -s.nyquist())
    throw std::invalid_argument("interval exceeds the Nyquist band (aliasing)");
}

}  // namespace

Eigen::ArrayXd square_function_samples(const Spectrum& s, const IntervalCollection& c) {
  const Eigen::Index n = s.n();
  const double twoT = 2.0 * s.half_width;

  Eigen::Index max_w = 0;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> bands;
  bands.reserve(c.size());
  for (const auto& iv : c) {
    require_within_nyquist(s, iv);
    auto [i0, i1] = band_index_range(s, iv);
    bands.emplace_back(i0, i1);
    max_w = std::max(max_w, i1 - i0);
  }

  const std::size_t n_eval = std::max<std::size_t>(
      static_cast<std::size_t>(n),
      max_w > 0 ? next_power_of_two(static_cast<std::size_t>(2 * max_w)) : 2);

  // Frequency-side accumulator for S^2: the coefficients of |P_I f|^2 are the
  // autocorrelation of the coefficients of f on I (the carrier modulation of
  // the band drops out of the modulus).
  std::vector<std::complex<double>> acc(n_eval, {0.0, 0.0});
  for (const auto& [i0, i1] : bands) {
    const Eigen::Index W = i1 - i0;
    if (W <= 0) continue;  // no grid frequency inside: contributes zero
    const auto r = autocorrelation(s.coefficients.data() + i0, static_cast<std::size_t>(W));
    for (Eigen::Index d = -(W - 1); d <= W - 1; ++d) {
      const std::size_t slot =
          static_cast<std::size_t>((d + static_cast<Eigen::Index>(n_eval)) %
                                   static_cast<Eigen::Index>(n_eval));
      acc[slot] += r[static_cast<std::size_t>(d + W - 1)];
    }
  }

  // S^2(x_j) = (1/2T)^2 sum_d acc_d e^{2 pi i d x_j / 2T}; on the grid the
  // phase splits into (-1)^d times the plain inverse DFT kernel.
  for (std::size_t k = 0; k < n_eval; ++k)
    if (k & 1) acc[k] = -acc[k];
  plan_for(n_eval)->inverse(acc.data());

  const std::size_t stride = n_eval / static_cast<std::size_t>(n);
  const double scale = 1.0 / (twoT * twoT);
  Eigen::ArrayXd out(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double v = acc[static_cast<std::size_t>(j) * stride].real() * scale;
    out[j] = v > 0.0 ? std::sqrt(v) : 0.0;
  }
  return out;
}

GridFunction square_function_grid(const GridFunction& f, const IntervalCollection& c) {
  const Spectrum s = forward_transform(f);
  GridFunction out;
  out.half_width = f.half_width;
  out.samples = square_function_samples(s, c).cast<std::complex<double>>();
  return out;
}

BandNorm band_lp_norm(const Spectrum& s, FrequencyInterval interval, double p,
                      double x_lo, double x_hi, double refine_tol,
                      int initial_oversample) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (!(0.0 <= x_lo && x_lo < x_hi && x_hi <= s.half_width))
    throw std::invalid_argument("band_lp_norm requires 0 <= x_lo < x_hi <= T");
  require_within_nyquist(s, interval);
  auto [i0, i1] = band_index_range(s, interval);
  const Eigen::Index W = i1 - i0;
  if (W <= 0) return {0.0, 0.0};

  const double twoT = 2.0 * s.half_width;
  const std::size_t min_pts =
      next_power_of_two(static_cast<std::size_t>(std::ceil(512.0 * twoT / (x_hi - x_lo))));
  std::size_t M = std::max(
      next_power_of_two(static_cast<std::size_t>(initial_oversample) *
                        static_cast<std::size_t>(W)),
      min_pts);
  const std::size_t M_cap = std::size_t{1} << 26;

  BandNorm result;
  for (;; M *= 2) {
    // q(x_r) = sum_w c_{i0+w} e^{2 pi i w x_r / 2T} at x_r = r 2T/M, so the
    // zero-padded unscaled inverse FFT evaluates the band on its own grid.
    std::vector<std::complex<double>> buf(M, {0.0, 0.0});
    for (Eigen::Index w = 0; w < W; ++w) buf[static_cast<std::size_t>(w)] = s.coefficients[i0 + w];
    plan_for(M)->inverse(buf.data());

    const double step = twoT / static_cast<double>(M);
    const std::size_t r0 = static_cast<std::size_t>(std::ceil(x_lo / step));
    const std::size_t r1 = static_cast<std::size_t>(std::ceil(x_hi / step));
    double sum = 0.0, sum_half = 0.0;
    for (std::size_t r = r0; r < r1; ++r) {
      const double v = std::pow(std::abs(buf[r]) / twoT, p);
      sum += v;
      if (((r - r0) & 1) == 0) sum_half += v;
    }
    const double value = std::pow(sum * step, 1.0 / p);
    const double value_half = std::pow(sum_half * 2.0 * step, 1.0 / p);
    result.value = value;
    result.refinement_error = value > 0.0 ? std::abs(value - value_half) / value : 0.0;
    if (result.refinement_error <= refine_tol || M >= M_cap) break;
  }
  return result;
}

S2Bucket s2_bucket_of(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("n = 0 carries its own term");
  const std::uint64_t a = static_cast<std::uint64_t>(n > 0 ? n : -n);
  const int k = std::bit_width(a);
  const std::uint64_t g = (std::uint64_t{1} << k) - a;  // in [1, 2^{k-1}]
  const int l = g == 1 ? 0 : std::bit_width(g - 1);
  return {k, l, n > 0 ? +1 : -1};
}

PeriodicSquareFunction square_function_periodic_S2(const TrigPolynomial& f, int k_max) {
  if (k_max < 1 || k_max > 62) throw std::invalid_argument("k_max out of range");
  const std::int64_t D = f.degree();
  if ((std::int64_t{1} << k_max) <= D)
    throw std::invalid_argument("2^k_max must exceed the polynomial degree");

  double dc2 = 0.0;
  auto it0 = f.coefficients.find(0);
  if (it0 != f.coefficients.end()) dc2 = std::norm(it0->second);

  // Dense band of bucket (k, l, sign): |n| runs over
  // [2^k - 2^l, 2^k - 2^l + w - 1], w = max(1, 2^{l-1}).
  struct Key {
    int k, l, sign;
    bool operator<(const Key& o) const {
      return std::tie(k, l, sign) < std::tie(o.k, o.l, o.sign);
    }
  };
  std::map<Key, S2BucketData> groups;
  for (const auto& [n, cval] : f.coefficients) {
    if (n == 0 || cval == std::complex<double>{0.0, 0.0}) continue;
    const S2Bucket b = s2_bucket_of(n);
    const Key key{b.k, b.l, b.sign};
    auto [it, inserted] = groups.try_emplace(key);
    S2BucketData& data = it->second;
    if (inserted) {
      data.bucket = b;
      const std::int64_t w = b.l == 0 ? 1 : (std::int64_t{1} << (b.l - 1));
      const std::int64_t abs_first = (std::int64_t{1} << b.k) - (std::int64_t{1} << b.l);
      data.n_first = b.sign > 0 ? abs_first : -(abs_first + w - 1);
      data.coeffs.assign(static_cast<std::size_t>(w), {0.0, 0.0});
    }
    data.coeffs[static_cast<std::size_t>(n - data.n_first)] = cval;
  }

  std::vector<S2BucketData> buckets;
  buckets.reserve(groups.size());
  for (auto& [key, data] : groups) buckets.push_back(std::move(data));
  return PeriodicSquareFunction(dc2, std::move(buckets));
}

Eigen::ArrayXd PeriodicSquareFunction::samples(Eigen::Index M) const {
  if (M < 2 || !is_power_of_two(static_cast<std::size_t>(M)))
    throw std::invalid_argument("sample count must be a power of two >= 2");
  std::size_t max_w = 1;
  for (const auto& b : buckets_) max_w = std::max(max_w, b.coeffs.size());
  if (static_cast<std::size_t>(M) < 2 * max_w)
    throw std::invalid_argument("sample grid too coarse for the widest band");

  std::vector<std::complex<double>> acc(static_cast<std::size_t>(M), {0.0, 0.0});
  acc[0] = dc_abs2_;
  for (const auto& b : buckets_) {
    const auto r = autocorrelation(b.coeffs.data(), b.coeffs.size());
    const std::int64_t W = static_cast<std::int64_t>(b.coeffs.size());
    for (std::int64_t d = -(W - 1); d <= W - 1; ++d)
      acc[static_cast<std::size_t>((d % M + M) % M)] += r[static_cast<std::size_t>(d + W - 1)];
  }
  plan_for(static_cast<std::size_t>(M))->inverse(acc.data());
  Eigen::ArrayXd out(M);
  for (Eigen::Index r = 0; r < M; ++r) {
    const double v = acc[static_cast<std::size_t>(r)].real();
    out[r] = v > 0.0 ? std::sqrt(v) : 0.0;
  }
  return out;
}

double PeriodicSquareFunction::l2_norm(int oversample) const {
  std::size_t max_w = 1;
  for (const auto& b : buckets_) max_w = std::max(max_w, b.coeffs.size());
  std::int64_t top = 1;
  for (const auto& b : buckets_)
    top = std::max(top, std::abs(b.n_first) + static_cast<std::int64_t>(b.coeffs.size()));
  const std::size_t M = next_power_of_two(std::max<std::size_t>(
      64, static_cast<std::size_t>(oversample) * static_cast<std::size_t>(top)));
  const Eigen::ArrayXd s = samples(static_cast<Eigen::Index>(M));
  return std::sqrt(s.square().sum() / static_cast<double>(M));
}

GridFunction smooth_square_function(const GridFunction& g, const SmoothBump& phi,
                                    const DyadicLattice& lat, int nu_min, int nu_max) {
  if (nu_min > nu_max) throw std::invalid_argument("empty scale range");
  const double h = g.spacing();
  if (std::ldexp(1.0, -nu_max) < 2.0 * h)
    throw std::invalid_argument("lattice scale finer than the grid");

  const Spectrum s = forward_transform(g);
  const Eigen::Index n = g.n();
  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(n);
  for (int nu = nu_min; nu <= nu_max; ++nu) {
    Spectrum filtered = s;
    const double scale = std::ldexp(1.0, -nu);
    for (Eigen::Index i = 0; i < filtered.n(); ++i)
      filtered.coefficients[i] *= phi(scale * filtered.xi(i));
    const GridFunction pg = inverse_transform(filtered);
    Eigen::ArrayXd sq(n);
    for (Eigen::Index j = 0; j < n; ++j) sq[j] = std::norm(pg.samples[j]);

    // Cell ids are nondecreasing along the grid; average per run.
    Eigen::Index j = 0;
    while (j < n) {
      const std::int64_t cell = lat.cell_index(nu, g.x(j));
      Eigen::Index j_end = j + 1;
      while (j_end < n && lat.cell_index(nu, g.x(j_end)) == cell) ++j_end;
      const double mean = sq.segment(j, j_end - j).mean();
      acc.segment(j, j_end - j) += mean;
      j = j_end;
    }
  }

  GridFunction out;
  out.half_width = g.half_width;
  out.samples = acc.sqrt().cast<std::complex<double>>();
  return out;
}

}  // namespace lplab
