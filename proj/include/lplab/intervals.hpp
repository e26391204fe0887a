#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lplab {

// Half-open frequency band [a, b). Endpoints are expected to be dyadic
// rationals, so comparisons are exact in double precision.
struct FrequencyInterval {
  double a = 0.0;
  double b = 0.0;

  double length() const { return b - a; }
  bool contains(double x) const { return a <= x && x < b; }

  friend bool operator==(const FrequencyInterval& u, const FrequencyInterval& v) {
    return u.a == v.a && u.b == v.b;
  }
};

// Sorted family of pairwise disjoint half-open intervals.
struct IntervalCollection {
  std::vector<FrequencyInterval> intervals;

  std::size_t size() const { return intervals.size(); }
  bool empty() const { return intervals.empty(); }
  auto begin() const { return intervals.begin(); }
  auto end() const { return intervals.end(); }
};

// Validates sortedness/disjointness; throws std::invalid_argument otherwise.
IntervalCollection make_collection(std::vector<FrequencyInterval> intervals);

struct PartitionReport {
  bool disjoint = true;
  bool covering = true;                    // band covered up to the reported gaps
  std::vector<FrequencyInterval> gaps;     // uncovered parts of the band
  std::vector<FrequencyInterval> overlaps; // nonempty pairwise intersections
};

// Exact-arithmetic verdict on how `c` sits inside `band`.
PartitionReport verify_partition(const IntervalCollection& c, FrequencyInterval band);

}  // namespace lplab
