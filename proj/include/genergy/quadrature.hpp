#pragma once

#include <cstddef>
#include <stdexcept>

namespace genergy {

/// Composite Simpson rule on [a, b] with `panels` subintervals (rounded up to
/// even).
template <typename F>
double simpson(F&& f, double a, double b, std::size_t panels) {
  if (panels < 2) panels = 2;
  if (panels % 2) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < panels; ++i) {
    const double x = a + static_cast<double>(i) * h;
    (i % 2 ? odd : even) += f(x);
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace genergy
