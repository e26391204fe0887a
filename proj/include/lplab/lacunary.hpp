#pragma once

#include "lplab/intervals.hpp"

#include <span>
#include <vector>

namespace lplab {

enum class SignMode { positive, negative, both };

// Finite window of a lacunary point set of order N:
//   order 1:            { +-2^k : k in [k_min, k_max] }
//   order 2, difference:{ +-(2^k - 2^l) : k in [k_min, k_max], l in [l_min, k-1] }
//   order N, sum form:  { +-(2^{k_1} + ... + 2^{k_N}) : k_max >= k_1 > ... > k_N >= l_min,
//                         k_1 >= k_min }
struct LacunarySpec {
  int order = 1;
  int k_min = 0;
  int k_max = 0;
  int l_min = 0;
  SignMode sign = SignMode::both;
  bool difference_form = true;  // order 2 only: E2 = {2^k - 2^l} vs sum form {2^k + 2^l}
};

/// Sorted, duplicate-free point set; all values exact dyadic rationals.
/// Throws on an empty window or exponents outside [-50, 50].
std::vector<double> generate_points(const LacunarySpec& spec);

/// Consecutive-pair partition {[p_i, p_{i+1})} of [min, max). Requires at
/// least two strictly increasing points.
IntervalCollection intervals_from_points(std::span<const double> points);

// Closed-form band interval: I+_{k,l} = [2^k - 2^l, 2^k - 2^{l-1}),
// I-_{k,l} = [-2^k + 2^{l-1}, -2^k + 2^l).
FrequencyInterval interval_Ikl(int k, int l, bool positive);

struct LabeledInterval {
  int k = 0;
  int l = 0;
  int sign = +1;
  bool tail = false;  // truncation stub [2^k - 2^{l_min-1}, 2^k), labeled l = l_min - 1
  FrequencyInterval interval;
};

/// All I+-_{k,l} for k in [k_min, k_max], l in [l_min, k-1], sorted by left
/// endpoint. When include_tail_stubs is set (the default), the truncation
/// remainder [2^k - 2^{l_min-1}, 2^k) of each band except the last is added
/// as a single interval, so the positive part tiles
/// [2^{k_min-1}, 2^{k_max} - 2^{l_min-1}) exactly; this matches the
/// consecutive-point partition of the difference set truncated at l_min - 1.
std::vector<LabeledInterval> enumerate_Ikl_labeled(int k_min, int k_max, int l_min,
                                                   SignMode sign,
                                                   bool include_tail_stubs = true);

IntervalCollection enumerate_Ikl(int k_min, int k_max, int l_min, SignMode sign,
                                 bool include_tail_stubs = true);

}  // namespace lplab
