#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ratdyn::kernels {

/// Instruction-set variants of the data-parallel inner loops. Every variant
/// produces bit-identical results to the scalar reference (no FMA contraction,
/// identical operation order).
enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
/// Best supported variant unless overridden with force_isa().
Isa active_isa();
/// Test hook; throws std::invalid_argument for an unsupported ISA.
void force_isa(Isa isa);
void reset_isa();

/// Evaluates p and p' at n points. Coefficients lowest-degree first, split
/// into real/imaginary arrays of equal length.
struct HornerBatch {
  std::span<const double> c_re, c_im;
  std::span<const double> z_re, z_im;
  std::span<double> p_re, p_im, dp_re, dp_im;
};
void horner_eval(const HornerBatch& batch);

/// Homogeneous coefficients of a rational map (P : Q) of degree `degree`,
/// lowest degree first, each padded to degree + 1 entries.
struct HomogeneousMap {
  int degree = 0;
  std::vector<double> p_re, p_im, q_re, q_im;
};

/// Attracting target in unit-normalized homogeneous coordinates.
struct Attractor {
  double z_re, z_im, w_re, w_im;
};

/// For each finite start point, the first iteration index at which the
/// iterate lies within chordal distance `threshold` of some attractor, or
/// `max_iter` when none is reached.
struct AttractionBatch {
  const HomogeneousMap* map = nullptr;
  std::span<const Attractor> attractors;
  std::span<const double> z_re, z_im;
  int max_iter = 0;
  double threshold = 0.0;
  std::span<std::int32_t> out;
};
void attraction_time(const AttractionBatch& batch);

}  // namespace ratdyn::kernels
