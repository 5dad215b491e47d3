#pragma once

// Random algebra expression trees for normalizer tests.

#include <algorithm>
#include <random>

#include "ratdyn/algebra.hpp"

namespace trees {

namespace al = ratdyn::algebra;

// Finite-dimensional leaves only when `finite` is set, so the block oracle applies.
inline al::Expr random_tree(std::mt19937_64& rng, int depth, bool finite) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int k = depth <= 0 ? pick(rng) % 5 : pick(rng);
  std::uniform_int_distribution<int> small(1, 4);
  switch (k) {
    case 0: return al::matrix(small(rng));
    case 1: return al::scalars();
    case 2: return finite ? al::zero() : al::circle();
    case 3: return finite ? al::matrix(small(rng)) : al::compacts();
    case 4: return finite ? al::compacts_on("crit:0", small(rng)) : al::bunce_deddens(small(rng) + 1);
    case 5: return al::finite_power(random_tree(rng, depth - 1, finite), small(rng) - 1);
    case 6:
    case 7: {
      std::vector<al::Expr> kids;
      for (int i = small(rng) % 3 + 1; i > 0; --i) kids.push_back(random_tree(rng, depth - 1, finite));
      return al::tensor(std::move(kids));
    }
    default: {
      std::vector<al::Expr> kids;
      for (int i = small(rng) % 3 + 1; i > 0; --i) kids.push_back(random_tree(rng, depth - 1, finite));
      return al::direct_sum(std::move(kids));
    }
  }
}

// Same tree with the children of every tensor and sum permuted.
inline al::Expr shuffled(const al::Expr& e, std::mt19937_64& rng) {
  al::Expr out = e;
  for (auto& c : out.children) c = shuffled(c, rng);
  if (out.kind == al::Kind::Tensor || out.kind == al::Kind::DirectSum)
    std::shuffle(out.children.begin(), out.children.end(), rng);
  return out;
}

}  // namespace trees
