#pragma once

#include "pwh/abscissa.hpp"
#include "pwh/special.hpp"

namespace pwh {

struct HypParams {
  Complex a;
  Complex b;
  Complex c;
};

// If a or b is a non-positive integer (within kPoleTolerance), stores the
// degree and returns true.
bool is_terminating(const HypParams& hp, int* degree = nullptr);

struct SeriesSum {
  Complex value;
  double abs_sum = 0.0;  // Σ|term|, for the cancellation estimate
  int terms = 0;
};

SeriesSum f21_series_sum(const HypParams& hp, Complex x);
Complex f21_series(const HypParams& hp, Complex x);

// (1-x)^{c-a-b} F[c-a, c-b; c; x]
Complex euler_transform(const HypParams& hp, Complex x);

// Two-term expansion in powers of w = 1 - z and w^{c-a-b}.
Complex connect_at_1(const HypParams& hp, Complex z);
Complex connect_at_1_offset(const HypParams& hp, Complex w);

// F[a,b;c;1/x] for x > 1 through the expansion in (1 - x) with factors x^a.
Complex connect_1_over_x(const HypParams& hp, double x);
Complex connect_1_over_x(const HypParams& hp, const Abscissa& pt);

// F[a,b;c;1] by the Gauss sum.
Complex gauss_sum(const HypParams& hp);

// F(x) for x < 1, with 1 - x taken from the abscissa.
Complex f21_at(const HypParams& hp, const Abscissa& pt);
// F(1/x) for x > 1.
Complex f21_at_inverse(const HypParams& hp, const Abscissa& pt);

// Dispatcher over the real line. For x > 1 a terminating series is summed
// directly; otherwise the boundary value F(x + i0) is returned, built from
// the expansion in 1/x (a - b must not be an integer).
Complex f21_eval(const HypParams& hp, double x);

}  // namespace pwh
