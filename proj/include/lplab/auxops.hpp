#pragma once

#include "lplab/grid.hpp"

#include <span>
#include <vector>

namespace lplab {

/// Non-centred Hardy-Littlewood maximal function: discrete sup over
/// grid-aligned sample windows containing x_j of the window average of |f|.
/// Window lengths are all of 1..16 samples plus a geometric ladder (ratio 2)
/// up to the full grid, which bounds the cost at O(n log n); the sup over the
/// ladder is within a factor <= 2 of the all-windows sup.
GridFunction maximal_function(const GridFunction& f);

/// Geometric truncation ladder 2h, 4h, ..., up to 2T.
std::vector<double> make_eps_ladder(const GridFunction& f);

/// Maximal Hilbert transform: sup over the ladder of
/// | sum_{|x_j - x_i| > eps} f(x_i) h / (x_j - x_i) |  (kernel 1/(x-y), no 1/pi).
/// Each truncation is evaluated by FFT convolution.
GridFunction maximal_hilbert(const GridFunction& f, std::span<const double> eps_ladder);

}  // namespace lplab
