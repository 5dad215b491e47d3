#pragma once

// Deterministic random corpus of exact maps with small Gaussian-integer
// coefficients.

#include <optional>
#include <random>
#include <vector>

#include "ratdyn/errors.hpp"
#include "ratdyn/rational_map.hpp"

namespace corpus {

inline ratdyn::Scalar gaussian(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  return ratdyn::Scalar::exact(u(rng), u(rng));
}

inline ratdyn::Polynomial random_poly(std::mt19937_64& rng, int degree, int bound) {
  std::vector<ratdyn::Scalar> c;
  for (int k = 0; k <= degree; ++k) c.push_back(gaussian(rng, bound));
  while (c.back().is_zero()) c.back() = gaussian(rng, bound);
  return ratdyn::Polynomial(c);
}

// One map of exact degree d; about a quarter are polynomials.
inline ratdyn::RationalMap random_map(std::mt19937_64& rng, int d) {
  for (;;) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> lower(0, d);
    const int k = kind(rng);
    int dp = d, dq = d;
    if (k == 0) dq = 0;
    else if (k == 1) dp = lower(rng);
    else if (k == 2) dq = lower(rng);
    try {
      ratdyn::RationalMap r(random_poly(rng, dp, 3), random_poly(rng, dq, 3));
      if (r.degree() == d) return r;
    } catch (const ratdyn::Error&) {
    }
  }
}

inline std::vector<ratdyn::RationalMap> maps(std::size_t count, std::uint64_t seed = 20261015) {
  std::mt19937_64 rng(seed);
  std::vector<ratdyn::RationalMap> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_map(rng, 2 + static_cast<int>(i % 5)));
  return out;
}

inline ratdyn::SpherePoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
  return ratdyn::SpherePoint(ratdyn::Scalar::exact(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))));
}

}  // namespace corpus
