#pragma once

#include <cstddef>
#include <functional>

namespace pwh {

// Worker count: hardware concurrency, capped by PWH_THREADS and by
// set_thread_limit (0 restores the default).
unsigned thread_count();
void set_thread_limit(unsigned n);

// Runs body(i) for i in [0, n). Each index is handled exactly once; callers
// write results by index so the outcome does not depend on scheduling. The
// first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (abs(sum_) >= abs(v)) comp_ += (sum_ - t) + v;
    else comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  static double abs(double v) { return v < 0 ? -v : v; }
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace pwh
