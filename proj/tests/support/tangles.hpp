#pragma once

#include <random>

#include "foxkit/diagram.hpp"

namespace tangles {

using foxkit::Diagram;

// Random classical tangle with n endpoint pairs: crossings on a wider trivial tangle, then cups.
inline Diagram random_tangle(int n, std::mt19937& rng) {
  int extra = static_cast<int>(rng() % 2);
  Diagram t = foxkit::trivial_tangle(n + extra);
  int width = 2 * (n + extra);
  for (int step = 0; step < 6; ++step) t = foxkit::add_boundary_crossing(t, 1 + static_cast<int>(rng() % width), rng() % 2 ? 1 : -1);
  for (int c = 0; c < extra; ++c) {
    t = foxkit::add_cup(t, 1 + static_cast<int>(rng() % (width - 1)));
    width -= 2;
    for (int step = 0; step < 3; ++step) t = foxkit::add_boundary_crossing(t, 1 + static_cast<int>(rng() % width), rng() % 2 ? 1 : -1);
  }
  return t;
}

}  // namespace tangles
