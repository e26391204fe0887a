#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace lplab {

// Iterative radix-2 complex FFT for power-of-two sizes, with precomputed
// twiddles and bit-reversal table. Plans are cached per size (see plan_for).
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  // Unscaled transforms: forward uses e^{-2 pi i jk/n}, inverse e^{+2 pi i jk/n}.
  // Callers apply their own 1/n (or physical) normalization.
  void forward(std::complex<double>* data) const { run(data, false); }
  void inverse(std::complex<double>* data) const { run(data, true); }

 private:
  void run(std::complex<double>* data, bool inverse) const;

  std::size_t n_;
  std::vector<std::complex<double>> twiddles_;  // per-stage, concatenated
  std::vector<std::uint32_t> bit_reversal_;
};

// Shared, thread-safe plan cache. n must be a power of two.
std::shared_ptr<const FftPlan> plan_for(std::size_t n);

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace lplab
