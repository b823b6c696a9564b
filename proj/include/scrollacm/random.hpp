#pragma once

#include "scrollacm/pencil.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace scrollacm {

/// Seed from SCROLL_ACM_SEED when set (decimal), `fallback` otherwise.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// Product of random elementary integer operations; determinant +-1.
Matrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 0);

struct BlockSampler {
  std::size_t max_blocks = 4;
  std::size_t max_size = 3;     // u, v, n
  std::size_t max_total = 12;   // cap on rows and on cols
  bool allow_infinity = true;
  bool allow_companion = true;  // one quadratic companion at most
};

/// Random multiset of blocks. Points are drawn from {-2,-1,0,1/2,1,3} and infinity;
/// the companion block, when present, uses t^2 - 2 or t^2 + 1.
std::vector<KWBlock> random_blocks(std::mt19937_64& rng, const BlockSampler& opts);

/// Random 1 x 2 / 2 x 2 / ... pencil with small integer entries.
MatrixPencil random_pencil(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int spread = 2);

}  // namespace scrollacm
