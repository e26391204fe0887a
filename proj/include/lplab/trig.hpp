#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>

namespace lplab {

// Finite map n -> c_n representing f(theta) = sum c_n e^{2 pi i n theta} on
// the torus R/Z.
struct TrigPolynomial {
  std::map<std::int64_t, std::complex<double>> coefficients;

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& [n, c] : coefficients)
      if (c != std::complex<double>{0.0, 0.0}) d = std::max(d, std::int64_t{std::abs(n)});
    return d;
  }

  std::complex<double> eval(double theta) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [n, c] : coefficients) {
      const double ang = 2.0 * M_PI * static_cast<double>(n) * theta;
      acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }
};

}  // namespace lplab
