#include "lplab/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lplab {

IntervalCollection make_collection(std::vector<FrequencyInterval> intervals) {
  for (const auto& iv : intervals)
    if (!(iv.a < iv.b)) throw std::invalid_argument("interval requires a < b");
  std::sort(intervals.begin(), intervals.end(),
            [](const FrequencyInterval& u, const FrequencyInterval& v) {
              return u.a < v.a || (u.a == v.a && u.b < v.b);
            });
  for (std::size_t i = 1; i < intervals.size(); ++i)
    if (intervals[i].a < intervals[i - 1].b)
      throw std::invalid_argument("intervals overlap");
  return IntervalCollection{std::move(intervals)};
}

PartitionReport verify_partition(const IntervalCollection& c, FrequencyInterval band) {
  PartitionReport report;
  std::vector<FrequencyInterval> sorted = c.intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const FrequencyInterval& u, const FrequencyInterval& v) {
              return u.a < v.a || (u.a == v.a && u.b < v.b);
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].a < sorted[i - 1].b) {
      report.disjoint = false;
      report.overlaps.push_back({sorted[i].a, std::min(sorted[i - 1].b, sorted[i].b)});
    }
  }
  double cursor = band.a;
  for (const auto& iv : sorted) {
    if (iv.b <= band.a || iv.a >= band.b) continue;
    if (iv.a > cursor) report.gaps.push_back({cursor, std::min(iv.a, band.b)});
    cursor = std::max(cursor, std::min(iv.b, band.b));
  }
  if (cursor < band.b) report.gaps.push_back({cursor, band.b});
  report.covering = report.gaps.empty();
  return report;
}

namespace {

void require_exponent(int e) {
  if (e < -50 || e > 50) throw std::invalid_argument("exponent out of supported range [-50, 50]");
}

void append_signed(std::vector<double>& out, double v, SignMode sign) {
  if (sign != SignMode::negative) out.push_back(v);
  if (sign != SignMode::positive) out.push_back(-v);
}

void tuple_sums(int leading_min, int k_max, int l_min, int order,
                double partial, int next_max, int depth, SignMode sign,
                std::vector<double>& out) {
  if (depth == order) {
    append_signed(out, partial, sign);
    return;
  }
  // remaining exponents are strictly decreasing and >= l_min
  const int slots_left = order - depth - 1;
  for (int k = next_max; k - slots_left >= l_min; --k) {
    if (depth == 0 && k < leading_min) break;
    tuple_sums(leading_min, k_max, l_min, order, partial + std::ldexp(1.0, k), k - 1,
               depth + 1, sign, out);
  }
}

}  // namespace

std::vector<double> generate_points(const LacunarySpec& spec) {
  if (spec.order < 1) throw std::invalid_argument("order must be >= 1");
  if (spec.k_max < spec.k_min) throw std::invalid_argument("k_max must be >= k_min");
  require_exponent(spec.k_min);
  require_exponent(spec.k_max);
  require_exponent(spec.l_min);

  std::vector<double> pts;
  if (spec.order == 1) {
    for (int k = spec.k_min; k <= spec.k_max; ++k)
      append_signed(pts, std::ldexp(1.0, k), spec.sign);
  } else if (spec.order == 2 && spec.difference_form) {
    require_exponent(spec.l_min - 1);
    for (int k = spec.k_min; k <= spec.k_max; ++k)
      for (int l = spec.l_min; l <= k - 1; ++l)
        append_signed(pts, std::ldexp(1.0, k) - std::ldexp(1.0, l), spec.sign);
  } else {
    tuple_sums(spec.k_min, spec.k_max, spec.l_min, spec.order, 0.0, spec.k_max, 0,
               spec.sign, pts);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw std::invalid_argument("lacunary window is empty");
  return pts;
}

IntervalCollection intervals_from_points(std::span<const double> points) {
  if (points.size() < 2) throw std::invalid_argument("need at least two points");
  std::vector<FrequencyInterval> intervals;
  intervals.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1]))
      throw std::invalid_argument("points must be strictly increasing");
    intervals.push_back({points[i], points[i + 1]});
  }
  return IntervalCollection{std::move(intervals)};
}

FrequencyInterval interval_Ikl(int k, int l, bool positive) {
  require_exponent(k);
  require_exponent(l - 1);
  if (l >= k) throw std::invalid_argument("I_{k,l} requires l < k");
  const double pk = std::ldexp(1.0, k);
  const double pl = std::ldexp(1.0, l);
  const double plm = std::ldexp(1.0, l - 1);
  if (positive) return {pk - pl, pk - plm};
  return {-pk + plm, -pk + pl};
}

std::vector<LabeledInterval> enumerate_Ikl_labeled(int k_min, int k_max, int l_min,
                                                   SignMode sign,
                                                   bool include_tail_stubs) {
  if (k_max < k_min) throw std::invalid_argument("empty k range");
  if (l_min > k_min - 1) throw std::invalid_argument("l_min must be <= k_min - 1");
  std::vector<LabeledInterval> out;
  auto emit = [&](bool positive) {
    const int s = positive ? +1 : -1;
    for (int k = k_min; k <= k_max; ++k) {
      for (int l = l_min; l <= k - 1; ++l)
        out.push_back({k, l, s, false, interval_Ikl(k, l, positive)});
      if (include_tail_stubs && k < k_max) {
        const double pk = std::ldexp(1.0, k);
        const double plm = std::ldexp(1.0, l_min - 1);
        FrequencyInterval stub =
            positive ? FrequencyInterval{pk - plm, pk} : FrequencyInterval{-pk, -pk + plm};
        out.push_back({k, l_min - 1, s, true, stub});
      }
    }
  };
  if (sign != SignMode::negative) emit(true);
  if (sign != SignMode::positive) emit(false);
  std::sort(out.begin(), out.end(), [](const LabeledInterval& u, const LabeledInterval& v) {
    return u.interval.a < v.interval.a;
  });
  return out;
}

IntervalCollection enumerate_Ikl(int k_min, int k_max, int l_min, SignMode sign,
                                 bool include_tail_stubs) {
  std::vector<FrequencyInterval> intervals;
  for (const auto& item : enumerate_Ikl_labeled(k_min, k_max, l_min, sign, include_tail_stubs))
    intervals.push_back(item.interval);
  return make_collection(std::move(intervals));
}

}  // namespace lplab
