#include "scrollacm/random.hpp"

#include <cstdlib>
#include <string>

namespace scrollacm {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("SCROLL_ACM_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    return fallback;
  }
}

Matrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps) {
  Matrix m = Matrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) m(0, 0) = -1;
    return m;
  }
  if (steps <= 0) steps = static_cast<int>(3 * n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int c = coef(rng);
    if (c == 0) {
      m.swap_rows(i, j);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);  // row_i += c row_j
  }
  return m;
}

std::vector<KWBlock> random_blocks(std::mt19937_64& rng, const BlockSampler& opts) {
  static const Rational points[] = {Rational(-2), Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(3)};
  std::uniform_int_distribution<std::size_t> count(1, opts.max_blocks);
  std::uniform_int_distribution<std::size_t> size(1, opts.max_size);
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(points) - 1);
  std::vector<KWBlock> out;
  std::size_t rows = 0, cols = 0;
  bool companion_used = false;
  const std::size_t want = count(rng);
  for (std::size_t tries = 0; out.size() < want && tries < 50; ++tries) {
    KWBlock b;
    const std::size_t n = size(rng);
    switch (kind(rng)) {
      case 0: b = KWBlock::C(n); break;
      case 1: b = KWBlock::B(n); break;
      case 2: b = KWBlock::J(points[pick(rng)], n); break;
      case 3:
        if (!opts.allow_infinity) continue;
        b = KWBlock::J_infinity(n);
        break;
      case 4: {
        if (!opts.allow_companion || companion_used) continue;
        const bool sqrt2 = rng() % 2 == 0;
        b = KWBlock::Companion(Polynomial({Rational(sqrt2 ? -2 : 1), Rational(0), Rational(1)}), 1 + rng() % 2);
        companion_used = true;
        break;
      }
      default: b = rng() % 2 ? KWBlock::Zero(1, 0) : KWBlock::Zero(0, 1); break;
    }
    if (rows + b.rows() > opts.max_total || cols + b.cols() > opts.max_total) continue;
    rows += b.rows();
    cols += b.cols();
    out.push_back(b);
  }
  return out;
}

MatrixPencil random_pencil(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  Matrix m1(rows, cols), m2(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      m1(r, c) = entry(rng);
      m2(r, c) = entry(rng);
    }
  return {m1, m2};
}

}  // namespace scrollacm
