#pragma once

namespace pwh {

// A real point x > 0 carried together with x - 1 and 1/x, each computed from
// whichever of the three is known exactly. Quadrature nodes near x = 1 or
// near infinity keep their full relative precision this way.
struct Abscissa {
  double x = 0.0;
  double xm1 = -1.0;
  double inv = 0.0;

  static Abscissa at(double x) { return {x, x - 1.0, 1.0 / x}; }
  static Abscissa from_offset(double d) { return {1.0 + d, d, 1.0 / (1.0 + d)}; }
  static Abscissa from_inverse(double t) { return {1.0 / t, (1.0 - t) / t, t}; }

  double one_minus_x() const { return -xm1; }
  bool left() const { return xm1 < 0.0; }
};

}  // namespace pwh
