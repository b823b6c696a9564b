#include "scrollacm/pencil.hpp"

#include "scrollacm/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace scrollacm {

MatrixPencil::MatrixPencil(Matrix m1, Matrix m2) : m1_(std::move(m1)), m2_(std::move(m2)) {
  if (m1_.rows() != m2_.rows() || m1_.cols() != m2_.cols())
    throw ShapeMismatch("pencil matrices have different shapes");
}

Matrix MatrixPencil::at(const Rational& x, const Rational& y) const { return x * m1_ + y * m2_; }

std::string MatrixPencil::to_string() const { return "x*" + m1_.to_string() + " + y*" + m2_.to_string(); }

// ---------------------------------------------------------------- blocks

KWBlock KWBlock::C(std::size_t u, std::size_t mult) {
  if (u == 0) throw std::invalid_argument("C(0) is a zero row; use Zero(1,0)");
  KWBlock b;
  b.kind = BlockKind::C;
  b.size = u;
  b.multiplicity = mult;
  return b;
}

KWBlock KWBlock::B(std::size_t v, std::size_t mult) {
  if (v == 0) throw std::invalid_argument("B(0) is a zero column; use Zero(0,1)");
  KWBlock b;
  b.kind = BlockKind::B;
  b.size = v;
  b.multiplicity = mult;
  return b;
}

KWBlock KWBlock::J(const Rational& u, std::size_t n, std::size_t mult) {
  if (n == 0) throw std::invalid_argument("Jordan block needs n >= 1");
  KWBlock b;
  b.kind = BlockKind::J;
  b.size = n;
  b.point = u;
  b.multiplicity = mult;
  return b;
}

KWBlock KWBlock::J_infinity(std::size_t n, std::size_t mult) {
  if (n == 0) throw std::invalid_argument("Jordan block needs n >= 1");
  KWBlock b;
  b.kind = BlockKind::J;
  b.size = n;
  b.multiplicity = mult;
  return b;
}

KWBlock KWBlock::Companion(const Polynomial& p, std::size_t n, std::size_t mult) {
  if (n == 0) throw std::invalid_argument("companion block needs n >= 1");
  if (p.degree() < 2) throw std::invalid_argument("companion blocks need degree >= 2; use J");
  KWBlock b;
  b.kind = BlockKind::Companion;
  b.size = n;
  b.poly = p.monic();
  b.multiplicity = mult;
  return b;
}

KWBlock KWBlock::Zero(std::size_t a0, std::size_t b0) {
  KWBlock b;
  b.kind = BlockKind::Zero;
  b.a0 = a0;
  b.b0 = b0;
  return b;
}

std::size_t KWBlock::rows() const {
  switch (kind) {
    case BlockKind::C: return size + 1;
    case BlockKind::B: return size;
    case BlockKind::J: return size;
    case BlockKind::Companion: return size * static_cast<std::size_t>(poly.degree());
    case BlockKind::Zero: return a0;
  }
  return 0;
}

std::size_t KWBlock::cols() const {
  switch (kind) {
    case BlockKind::C: return size;
    case BlockKind::B: return size + 1;
    case BlockKind::J: return size;
    case BlockKind::Companion: return size * static_cast<std::size_t>(poly.degree());
    case BlockKind::Zero: return b0;
  }
  return 0;
}

namespace {

Matrix shifted_identity(std::size_t rows, std::size_t cols, std::size_t row_off, std::size_t col_off, std::size_t n) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < n; ++i) m(row_off + i, col_off + i) = 1;
  return m;
}

// Frobenius companion of a monic q: ones below the diagonal, -coefficients in the last column.
Matrix companion_matrix(const Polynomial& q) {
  const std::size_t m = static_cast<std::size_t>(q.degree());
  Matrix c(m, m);
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = -q.coeff(i);
  return c;
}

}  // namespace

MatrixPencil KWBlock::pencil() const {
  const std::size_t r = rows(), c = cols();
  switch (kind) {
    case BlockKind::B: return {shifted_identity(r, c, 0, 0, size), shifted_identity(r, c, 0, 1, size)};
    case BlockKind::C: return {shifted_identity(r, c, 0, 0, size), shifted_identity(r, c, 1, 0, size)};
    case BlockKind::J: {
      Matrix nil = shifted_identity(size, size, 0, 1, size - 1);
      if (!point) return {nil, Matrix::identity(size)};
      Matrix jd = nil;
      for (std::size_t i = 0; i < size; ++i) jd(i, i) = *point;
      return {Matrix::identity(size), jd};
    }
    case BlockKind::Companion:
      return {Matrix::identity(r), companion_matrix(poly.pow(static_cast<unsigned>(size)))};
    case BlockKind::Zero: return MatrixPencil::zero(r, c);
  }
  return {};
}

std::string KWBlock::to_string() const {
  std::string out;
  switch (kind) {
    case BlockKind::C: out = "C(" + std::to_string(size) + ")"; break;
    case BlockKind::B: out = "B(" + std::to_string(size) + ")"; break;
    case BlockKind::J:
      out = "J(" + (point ? scrollacm::to_string(*point) : std::string("inf")) + "," + std::to_string(size) + ")";
      break;
    case BlockKind::Companion: out = "Comp(" + poly.to_string() + "," + std::to_string(size) + ")"; break;
    case BlockKind::Zero: out = "Zero(" + std::to_string(a0) + "," + std::to_string(b0) + ")"; break;
  }
  if (multiplicity != 1) out += "^" + std::to_string(multiplicity);
  return out;
}

bool KWBlock::same_type(const KWBlock& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case BlockKind::C:
    case BlockKind::B: return size == o.size;
    case BlockKind::J: return size == o.size && point == o.point;
    case BlockKind::Companion: return size == o.size && poly == o.poly;
    case BlockKind::Zero: return a0 == o.a0 && b0 == o.b0;
  }
  return false;
}

namespace {

int kind_rank(const KWBlock& b) {
  switch (b.kind) {
    case BlockKind::C: return 0;
    case BlockKind::B: return 1;
    case BlockKind::J: return b.point ? 2 : 3;
    case BlockKind::Companion: return 4;
    case BlockKind::Zero: return 5;
  }
  return 6;
}

}  // namespace

bool canonical_less(const KWBlock& a, const KWBlock& b) {
  const int ra = kind_rank(a), rb = kind_rank(b);
  if (ra != rb) return ra < rb;
  switch (ra) {
    case 2:
      if (*a.point != *b.point) return *a.point < *b.point;
      return a.size < b.size;
    case 4:
      if (a.poly != b.poly) return a.poly < b.poly;
      return a.size < b.size;
    case 5: return std::tie(a.a0, a.b0) < std::tie(b.a0, b.b0);
    default: return a.size < b.size;
  }
}

std::vector<KWBlock> normalize_blocks(std::vector<KWBlock> blocks) {
  std::size_t za = 0, zb = 0;
  std::vector<KWBlock> rest;
  for (auto& b : blocks) {
    if (b.multiplicity == 0) continue;
    if (b.kind == BlockKind::Zero) {
      za += b.a0 * b.multiplicity;
      zb += b.b0 * b.multiplicity;
    } else {
      rest.push_back(std::move(b));
    }
  }
  std::stable_sort(rest.begin(), rest.end(), canonical_less);
  std::vector<KWBlock> out;
  for (auto& b : rest) {
    if (!out.empty() && out.back().same_type(b)) out.back().multiplicity += b.multiplicity;
    else out.push_back(std::move(b));
  }
  if (za + zb > 0) out.push_back(KWBlock::Zero(za, zb));
  return out;
}

MatrixPencil kw_assemble(const std::vector<KWBlock>& blocks) {
  const auto norm = normalize_blocks(blocks);
  std::size_t rows = 0, cols = 0;
  for (const auto& b : norm) {
    rows += b.rows() * b.multiplicity;
    cols += b.cols() * b.multiplicity;
  }
  Matrix m1(rows, cols), m2(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : norm) {
    const MatrixPencil p = b.pencil();
    for (std::size_t i = 0; i < b.multiplicity; ++i) {
      m1.set_block(r, c, p.M1());
      m2.set_block(r, c, p.M2());
      r += p.rows();
      c += p.cols();
    }
  }
  return {m1, m2};
}

std::size_t normal_rank(const MatrixPencil& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // A nonzero maximal minor is a binary form of degree <= min(a,b), so it
  // cannot vanish at min(a,b)+1 distinct points of P^1.
  const std::size_t pts = std::min(m.rows(), m.cols()) + 1;
  std::size_t best = rank(m.M2());
  for (std::size_t t = 0; t < pts && best < std::min(m.rows(), m.cols()); ++t)
    best = std::max(best, rank(m.M1() + Rational(static_cast<unsigned long>(t)) * m.M2()));
  return best;
}

// ---------------------------------------------------------------- decomposition

namespace {

Matrix column_space_basis(const Matrix& m) {
  const auto ech = rref(m);
  std::vector<std::vector<Rational>> cols;
  for (auto p : ech.pivots) cols.push_back(m.column_vector(p));
  return Matrix::from_columns(m.rows(), cols);
}

Matrix block_diag(const std::vector<Matrix>& parts) {
  Matrix out;
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

struct Reduction {
  Matrix P;  // left transform of the remainder
  Matrix Q;  // right transform of the remainder
  std::vector<KWBlock> blocks;
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;
  MatrixPencil rest;
};

// Finds the smallest right minimal index eps of m and splits off B(eps)
// (a zero column when eps = 0): P m Q = diag(B(eps), rest).
std::optional<Reduction> split_right_block(const MatrixPencil& m) {
  const std::size_t a = m.rows(), b = m.cols();
  if (b == 0 || normal_rank(m) == b) return std::nullopt;
  for (std::size_t eps = 0; eps <= b; ++eps) {
    // unknowns q_0..q_eps; rows: M2 q0 = 0, M1 q_{j-1} - M2 q_j = 0, M1 q_eps = 0
    Matrix t((eps + 2) * a, (eps + 1) * b);
    t.set_block(0, 0, m.M2());
    for (std::size_t j = 1; j <= eps; ++j) {
      t.set_block(j * a, (j - 1) * b, m.M1());
      t.set_block(j * a, j * b, Rational(-1) * m.M2());
    }
    t.set_block((eps + 1) * a, eps * b, m.M1());
    const Matrix ker = kernel(t);
    if (ker.cols() == 0) continue;

    const std::vector<Rational> z = ker.column_vector(0);
    std::vector<std::vector<Rational>> qs(eps + 1, std::vector<Rational>(b));
    for (std::size_t j = 0; j <= eps; ++j)
      for (std::size_t i = 0; i < b; ++i) qs[j][i] = z[j * b + i];
    std::vector<std::vector<Rational>> rs;
    for (std::size_t j = 0; j < eps; ++j) rs.push_back(m.M1().apply(qs[j]));

    const Matrix qfull = complete_basis(Matrix::from_columns(b, qs));
    const Matrix pinv = complete_basis(Matrix::from_columns(a, rs));
    const Matrix p = inverse(pinv);
    const MatrixPencil x = m.transformed(p, qfull);

    const std::size_t ra = a - eps, rb = b - eps - 1;
    const Matrix m1r = x.M1().block(eps, eps + 1, ra, rb);
    const Matrix m2r = x.M2().block(eps, eps + 1, ra, rb);
    Matrix pl = p, ql = qfull;
    if (eps > 0 && rb > 0) {
      const Matrix d1 = x.M1().block(0, eps + 1, eps, rb);
      const Matrix d2 = x.M2().block(0, eps + 1, eps, rb);
      // X_i M'1 - X_{i-1} M'2 = D2_{i-1} - D1_i for i = 1..eps-1, unknown rows X_0..X_{eps-1}
      Matrix sys((eps - 1) * rb, eps * ra);
      Matrix rhs((eps - 1) * rb, 1);
      for (std::size_t i = 1; i < eps; ++i) {
        for (std::size_t c = 0; c < rb; ++c) {
          const std::size_t row = (i - 1) * rb + c;
          for (std::size_t k = 0; k < ra; ++k) {
            sys(row, i * ra + k) += m1r(k, c);
            sys(row, (i - 1) * ra + k) -= m2r(k, c);
          }
          rhs(row, 0) = d2(i - 1, c) - d1(i, c);
        }
      }
      Matrix xs(eps, ra);
      if (sys.rows() > 0) {
        auto sol = solve(sys, rhs);
        if (!sol) throw std::logic_error("decoupling system for B(" + std::to_string(eps) + ") is inconsistent");
        for (std::size_t i = 0; i < eps; ++i)
          for (std::size_t k = 0; k < ra; ++k) xs(i, k) = (*sol)(i * ra + k, 0);
      }
      Matrix ys(eps + 1, rb);
      const Matrix xm1 = xs * m1r, xm2 = xs * m2r;
      for (std::size_t i = 0; i < eps; ++i)
        for (std::size_t c = 0; c < rb; ++c) ys(i, c) = -d1(i, c) - xm1(i, c);
      for (std::size_t c = 0; c < rb; ++c) ys(eps, c) = -d2(eps - 1, c) - xm2(eps - 1, c);

      Matrix left = Matrix::identity(a);
      left.set_block(0, eps, xs);
      Matrix right = Matrix::identity(b);
      right.set_block(0, eps + 1, ys);
      pl = left * pl;
      ql = ql * right;
    }
    Reduction red;
    red.P = pl;
    red.Q = ql;
    red.block_rows = eps;
    red.block_cols = eps + 1;
    red.blocks.push_back(eps == 0 ? KWBlock::Zero(0, 1) : KWBlock::B(eps));
    red.rest = MatrixPencil(m1r, m2r);
    const MatrixPencil expect{direct_sum(red.blocks[0].pencil().M1(), m1r), direct_sum(red.blocks[0].pencil().M2(), m2r)};
    if (m.transformed(pl, ql) != expect) throw std::logic_error("right minimal index reduction failed to decouple");
    return red;
  }
  throw std::logic_error("pencil has a right kernel but no minimal index was found");
}

std::optional<Reduction> split_left_block(const MatrixPencil& m) {
  auto red = split_right_block(m.transpose());
  if (!red) return std::nullopt;
  Reduction out;
  out.P = red->Q.transpose();
  out.Q = red->P.transpose();
  const KWBlock& blk = red->blocks[0];
  out.blocks.push_back(blk.kind == BlockKind::Zero ? KWBlock::Zero(1, 0) : KWBlock::C(blk.size));
  out.block_rows = red->block_cols;
  out.block_cols = red->block_rows;
  out.rest = red->rest.transpose();
  return out;
}

// Similarity S with S^-1 C S block diagonal: J_{u,n} blocks for rational
// eigenvalues, companions of p^n otherwise. Blocks come out in canonical order.
struct SimilarityForm {
  Matrix S;
  std::vector<KWBlock> blocks;
};

SimilarityForm similarity_form(const Matrix& c) {
  const std::size_t n = c.rows();
  SimilarityForm out;
  if (n == 0) return out;
  auto factors = factor(characteristic_polynomial(c));
  std::stable_sort(factors.begin(), factors.end(), [](const IrreducibleFactor& x, const IrreducibleFactor& y) {
    const bool lx = x.factor.degree() == 1, ly = y.factor.degree() == 1;
    if (lx != ly) return lx;
    if (lx) return -x.factor.coeff(0) < -y.factor.coeff(0);
    return x.factor < y.factor;
  });

  std::vector<std::vector<Rational>> basis;
  for (const auto& f : factors) {
    const Polynomial& p = f.factor;
    const std::size_t d = static_cast<std::size_t>(p.degree());
    const Matrix t = p.evaluate(c);
    // kernels of T^j, j = 0..mult+1
    std::vector<Matrix> ker{Matrix(n, 0)};
    Matrix tp = Matrix::identity(n);
    for (unsigned j = 1; j <= f.multiplicity + 1; ++j) {
      tp = tp * t;
      ker.push_back(kernel(tp));
    }
    std::size_t top = 0;
    for (std::size_t j = 1; j < ker.size(); ++j)
      if (ker[j].cols() > ker[j - 1].cols()) top = j;

    std::vector<std::pair<std::size_t, std::vector<Rational>>> gens;  // (level, generator)
    for (std::size_t j = top; j >= 1; --j) {
      const Matrix& kj = ker[j];
      const Matrix above = j + 1 < ker.size() ? ker[j + 1] : ker[j];
      Matrix span = hstack(ker[j - 1], t * above);
      std::size_t r = rank(span);
      for (std::size_t col = 0; col < kj.cols() && r < kj.cols(); ++col) {
        const std::vector<Rational> v = kj.column_vector(col);
        Matrix trial = hstack(span, Matrix::column(v));
        if (rank(trial) == r) continue;
        // the field F[t]/p acts on the quotient: add the whole orbit v, Cv, ..., C^{d-1} v
        std::vector<Rational> w = v;
        for (std::size_t i = 0; i < d; ++i) {
          span = hstack(span, Matrix::column(w));
          w = c.apply(w);
        }
        r = rank(span);
        gens.emplace_back(j, v);
      }
      if (r != kj.cols()) throw std::logic_error("cyclic generator search did not span ker p(C)^j");
    }
    std::stable_sort(gens.begin(), gens.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [level, v] : gens) {
      if (d == 1) {
        // Jordan chain: s_level = v, s_{i-1} = (C - u) s_i
        std::vector<std::vector<Rational>> chain(level);
        chain[level - 1] = v;
        for (std::size_t i = level - 1; i >= 1; --i) chain[i - 1] = t.apply(chain[i]);
        for (auto& s : chain) basis.push_back(std::move(s));
        out.blocks.push_back(KWBlock::J(-p.coeff(0), level));
      } else {
        std::vector<Rational> w = v;
        for (std::size_t i = 0; i < d * level; ++i) {
          basis.push_back(w);
          w = c.apply(w);
        }
        out.blocks.push_back(KWBlock::Companion(p, level));
      }
    }
  }
  if (basis.size() != n) throw std::logic_error("similarity basis has the wrong size");
  out.S = Matrix::from_columns(n, basis);
  std::vector<Matrix> parts;
  for (const auto& b : out.blocks) parts.push_back(b.pencil().M2());
  if (inverse(out.S) * c * out.S != block_diag(parts)) throw std::logic_error("similarity form check failed");
  return out;
}

// Regular square pencil: P m Q = diag(J(inf) blocks, finite J and companion blocks).
Reduction split_regular(const MatrixPencil& m) {
  const std::size_t n = m.rows();
  Reduction red;
  red.rest = MatrixPencil::zero(0, 0);
  red.block_rows = red.block_cols = n;
  if (n == 0) {
    red.P = red.Q = Matrix();
    return red;
  }
  // G = lambda M1 + M2 invertible; x M1 + y M2 = (x - lambda y) M1 + y G
  Rational lambda = 0;
  for (long i = 0;; ++i) {
    lambda = (i % 2 == 0) ? Rational(i / 2) : Rational(-(i + 1) / 2);
    if (rank(lambda * m.M1() + m.M2()) == n) break;
    if (i > static_cast<long>(2 * n + 4)) throw std::logic_error("regular pencil has no invertible specialization");
  }
  const Matrix ginv = inverse(lambda * m.M1() + m.M2());
  const Matrix k = ginv * m.M1();
  // Fitting decomposition of K: ker K^n (nilpotent part) + im K^n (invertible part)
  Matrix kn = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) kn = kn * k;
  const Matrix nil_basis = kernel(kn);
  const Matrix inv_basis = column_space_basis(kn);
  const Matrix z = hstack(nil_basis, inv_basis);
  const Matrix zinv = inverse(z);
  const Matrix kz = zinv * k * z;
  const std::size_t n0 = nil_basis.cols(), n1 = inv_basis.cols();
  const Matrix nil = kz.block(0, 0, n0, n0);
  const Matrix ki = kz.block(n0, n0, n1, n1);

  // nilpotent part: (I - lambda N)^-1 ((x - lambda y) N + y I) = y I + x N'
  const Matrix u = inverse(Matrix::identity(n0) - lambda * nil);
  const SimilarityForm inf_form = similarity_form(u * nil);
  // invertible part: Ki^-1 ((x - lambda y) Ki + y I) = x I + y (Ki^-1 - lambda I)
  const Matrix kiinv = inverse(ki);
  const SimilarityForm fin_form = similarity_form(kiinv - lambda * Matrix::identity(n1));

  const Matrix left = direct_sum(inverse(inf_form.S) * u, inverse(fin_form.S) * kiinv);
  red.P = left * zinv * ginv;
  red.Q = z * direct_sum(inf_form.S, fin_form.S);
  for (const auto& b : inf_form.blocks) red.blocks.push_back(KWBlock::J_infinity(b.size));
  for (const auto& b : fin_form.blocks) red.blocks.push_back(b);
  return red;
}

}  // namespace

KWDecomposition kw_decompose(const MatrixPencil& m) {
  const std::size_t a = m.rows(), b = m.cols();
  Matrix p = Matrix::identity(a), q = Matrix::identity(b);
  struct Placed {
    KWBlock block;
    std::size_t row, col;
  };
  std::vector<Placed> placed;
  std::size_t ro = 0, co = 0;
  MatrixPencil rest = m;

  auto apply = [&](const Reduction& red) {
    p = direct_sum(Matrix::identity(ro), red.P) * p;
    q = q * direct_sum(Matrix::identity(co), red.Q);
    std::size_t r = ro, c = co;
    for (const auto& blk : red.blocks) {
      placed.push_back({blk, r, c});
      r += blk.rows();
      c += blk.cols();
    }
    ro += red.block_rows;
    co += red.block_cols;
    rest = red.rest;
  };

  while (auto red = split_right_block(rest)) apply(*red);
  while (auto red = split_left_block(rest)) apply(*red);
  if (rest.rows() != rest.cols()) throw std::logic_error("remaining pencil after minimal indices is not square");
  apply(split_regular(rest));

  // reorder blocks canonically by permuting rows and columns
  std::vector<std::size_t> order(placed.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return canonical_less(placed[i].block, placed[j].block); });
  std::vector<std::size_t> row_perm, col_perm;
  std::vector<KWBlock> blocks;
  for (auto i : order) {
    const auto& pl = placed[i];
    for (std::size_t r = 0; r < pl.block.rows(); ++r) row_perm.push_back(pl.row + r);
    for (std::size_t c = 0; c < pl.block.cols(); ++c) col_perm.push_back(pl.col + c);
    blocks.push_back(pl.block);
  }
  Matrix pr(a, a), qc(b, b);
  for (std::size_t i = 0; i < a; ++i) pr(i, row_perm[i]) = 1;
  for (std::size_t j = 0; j < b; ++j) qc(col_perm[j], j) = 1;

  KWDecomposition dec{normalize_blocks(blocks), pr * p, q * qc};
  if (!verify_equivalence(dec, m)) throw std::logic_error("Kronecker-Weierstrass witnesses do not verify");
  return dec;
}

bool verify_equivalence(const KWDecomposition& dec, const MatrixPencil& m) {
  if (dec.P.rows() != m.rows() || dec.P.cols() != m.rows() || dec.Q.rows() != m.cols() || dec.Q.cols() != m.cols())
    throw ShapeMismatch("witness matrices do not match the pencil shape");
  const MatrixPencil canon = kw_assemble(dec.blocks);
  if (canon.rows() != m.rows() || canon.cols() != m.cols()) return false;
  if (rank(dec.P) != m.rows() || rank(dec.Q) != m.cols()) return false;
  return m.transformed(dec.P, dec.Q) == canon;
}

bool is_indecomposable(const MatrixPencil& m) {
  const auto dec = kw_decompose(m);
  if (dec.blocks.size() != 1 || dec.blocks[0].multiplicity != 1) return false;
  const KWBlock& b = dec.blocks[0];
  return b.kind != BlockKind::Zero || b.a0 + b.b0 == 1;
}

}  // namespace scrollacm
