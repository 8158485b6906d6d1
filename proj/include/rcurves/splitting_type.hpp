#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "rcurves/errors.hpp"

namespace rcurves {

/// Splitting type of a vector bundle on the projective line: the multiset of
/// twists a_1 >= a_2 >= ... >= a_r in the decomposition into line bundles
/// O(a_1) + ... + O(a_r). Cohomology of twists is read off summand by
/// summand.
class SplittingType {
 public:
  SplittingType() = default;

  explicit SplittingType(std::vector<int> values) : a_(std::move(values)) {
    std::sort(a_.begin(), a_.end(), std::greater<int>());
  }

  const std::vector<int>& values() const { return a_; }
  int rank() const { return static_cast<int>(a_.size()); }
  long long degree() const { return std::accumulate(a_.begin(), a_.end(), 0LL); }

  /// dim H^0 of the bundle twisted by O(k): sum of max(0, a_i + k + 1).
  long long h0(int k = 0) const {
    long long n = 0;
    for (int a : a_) n += std::max(0, a + k + 1);
    return n;
  }

  /// dim H^1 of the bundle twisted by O(k): sum of max(0, -a_i - k - 1).
  long long h1(int k = 0) const {
    long long n = 0;
    for (int a : a_) n += std::max(0, -a - k - 1);
    return n;
  }

  int min_value() const {
    if (a_.empty()) throw ValidationError("EmptySplitting", "rank zero bundle has no parts");
    return a_.back();
  }

  bool operator==(const SplittingType& o) const { return a_ == o.a_; }
  bool operator!=(const SplittingType& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(a_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<int> a_;  // non-increasing
};

}  // namespace rcurves
