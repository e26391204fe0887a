#pragma once

#include "lplab/intervals.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace lplab {

// Shifted dyadic system: at scale nu the cells are
// [shift + j 2^-nu, shift + (j+1) 2^-nu), j in Z. Each scale-nu cell splits
// into exactly two scale-(nu+1) cells.
struct DyadicLattice {
  double shift = 0.0;

  FrequencyInterval cell(int nu, std::int64_t j) const {
    const double len = std::ldexp(1.0, -nu);
    return {shift + static_cast<double>(j) * len, shift + static_cast<double>(j + 1) * len};
  }

  std::int64_t cell_index(int nu, double x) const {
    return static_cast<std::int64_t>(std::floor((x - shift) * std::ldexp(1.0, nu)));
  }
};

// The three shifted copies used alongside the smooth square function.
inline std::array<DyadicLattice, 3> three_shifted_lattices() {
  return {DyadicLattice{0.0}, DyadicLattice{1.0 / 3.0}, DyadicLattice{-1.0 / 3.0}};
}

}  // namespace lplab
