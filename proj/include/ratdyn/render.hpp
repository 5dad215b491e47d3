#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "ratdyn/dynamics.hpp"
#include "ratdyn/kernels.hpp"

namespace ratdyn {

struct RenderConfig {
  int width = 800;
  int height = 800;
  double x_min = -2.0, x_max = 2.0;
  double y_min = -2.0, y_max = 2.0;
  int max_iter = 10;
  /// Chordal distance at which an orbit counts as captured by an attractor.
  double threshold = 1e-3;
};

struct Image {
  int width = 0;
  int height = 0;
  int max_iter = 0;
  std::vector<std::int32_t> iterations;  // row-major, top row first
  std::vector<std::uint8_t> rgb;

  /// Centre of pixel (col, row) in the complex plane.
  Complex pixel_center(int col, int row, const RenderConfig& cfg) const;
};

kernels::HomogeneousMap homogeneous_map(const RationalMap& r);

/// Attracting and super-attracting cycle points of a scan.
std::vector<SpherePoint> attractors_of(const CycleScan& cycles);

/// Attraction-time image. Pixels that reach no attractor within max_iter
/// iterations are black; the rest are shaded by capture time.
Image render_julia(const RationalMap& r, const std::vector<SpherePoint>& attractors, const RenderConfig& cfg);

/// Binary PPM: "P6\n<width> <height>\n255\n" followed by width*height RGB triples.
void write_ppm(const Image& img, std::ostream& out);

}  // namespace ratdyn
