#include "lplab/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace lplab {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("FftPlan: size must be a power of two");
  int lg = 0;
  while ((std::size_t{1} << lg) < n) ++lg;
  bit_reversal_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t r = 0;
    for (int b = 0; b < lg; ++b)
      if (i & (std::size_t{1} << b)) r |= std::uint32_t{1} << (lg - 1 - b);
    bit_reversal_[i] = r;
  }
  twiddles_.reserve(n > 1 ? n - 1 : 0);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * M_PI / static_cast<double>(len);
    for (std::size_t k = 0; k < len / 2; ++k)
      twiddles_.push_back({std::cos(ang * static_cast<double>(k)),
                           std::sin(ang * static_cast<double>(k))});
  }
}

void FftPlan::run(std::complex<double>* a, bool inverse) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint32_t r = bit_reversal_[i];
    if (i < r) std::swap(a[i], a[r]);
  }
  const std::complex<double>* t = twiddles_.data();
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < n_; i += len) {
      std::complex<double>* p = a + i;
      std::complex<double>* q = a + i + half;
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> w = inverse ? std::conj(t[k]) : t[k];
        const std::complex<double> u = p[k];
        const std::complex<double> v = q[k] * w;
        p[k] = u + v;
        q[k] = u - v;
      }
    }
    t += half;
  }
}

std::shared_ptr<const FftPlan> plan_for(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const FftPlan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto plan = std::make_shared<const FftPlan>(n);
  cache.emplace(n, plan);
  return plan;
}

}  // namespace lplab
