#include "scrollacm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace scrollacm {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = 1;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational lc = leading();
  for (auto& c : p.coeffs_) c /= lc;
  return p;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  if (m.rows() != m.cols()) throw std::invalid_argument("polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool show_coeff = i == 0 || mag != 1;
    if (show_coeff) out += scrollacm::to_string(mag);
    if (i > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
  const Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[i] / lb;
    quot[i - db] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

/// Integer polynomial with content 1 and positive leading coefficient, same roots as p.
std::vector<Integer> primitive_integer(const Polynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

Polynomial from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> r(c.begin(), c.end());
  return Polynomial(std::move(r));
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> divs{1};
  if (n <= 1) return divs;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  if (n > 1) {
    const std::size_t base = divs.size();
    for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * n);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Squarefree decomposition (Yun): returns (factor, multiplicity) pairs with monic factors.
std::vector<std::pair<Polynomial, unsigned>> squarefree(const Polynomial& p) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(f.derivative(), a).first;
  Polynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  auto ints = primitive_integer(p);
  // strip zero roots
  std::size_t shift = 0;
  while (shift < ints.size() && ints[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  std::vector<Integer> trimmed(ints.begin() + static_cast<long>(shift), ints.end());
  if (trimmed.size() <= 1) return roots;
  const Polynomial q = from_integers(trimmed);
  for (const auto& num : positive_divisors(trimmed.front())) {
    for (const auto& den : positive_divisors(trimmed.back())) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) continue;
      for (int s : {1, -1}) {
        Rational cand = make_rational(num * s, den);
        if (q.evaluate(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Polynomial lagrange(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  Polynomial acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial term = Polynomial::constant(Rational(ys[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      term = term * Polynomial({Rational(-xs[j]), Rational(1)});
      term = term * Polynomial::constant(make_rational(1, xs[i] - xs[j]));
    }
    acc += term;
  }
  return acc;
}

bool has_integer_coeffs(const Polynomial& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

/// Kronecker's method: finds a proper factor of degree `d` of the primitive integer
/// polynomial g, or returns the zero polynomial.
Polynomial kronecker_factor_of_degree(const Polynomial& g, int d) {
  // Choose d+1 evaluation points with the fewest divisor candidates.
  std::vector<std::pair<std::size_t, Integer>> pts;
  for (long x = -12; x <= 12; ++x) {
    const Rational v = g.evaluate(Rational(x));
    if (v == 0) continue;  // caller has already removed rational roots
    pts.emplace_back(positive_divisors(v.get_num()).size(), Integer(x));
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (pts.size() < static_cast<std::size_t>(d + 1)) return {};
  pts.resize(d + 1);
  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> cands;
  for (const auto& [count, x] : pts) {
    xs.push_back(x);
    const Integer v = g.evaluate(Rational(x)).get_num();
    std::vector<Integer> c;
    for (const auto& dv : positive_divisors(v)) {
      c.push_back(dv);
      c.push_back(-dv);
    }
    cands.push_back(std::move(c));
  }
  // The first value is taken positive: factors are determined up to sign.
  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    std::vector<Integer> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = cands[i][idx[i]];
    if (ys[0] > 0) {
      Polynomial h = lagrange(xs, ys);
      if (h.degree() == d && has_integer_coeffs(h)) {
        auto [q, r] = divmod(g, h);
        if (r.is_zero() && has_integer_coeffs(q)) return h;
      }
    }
    std::size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < cands[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
  }
  return {};
}

void split_squarefree(const Polynomial& f, std::vector<Polynomial>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(f.monic());
    return;
  }
  const auto roots = rational_roots(f);
  if (!roots.empty()) {
    Polynomial rest = f;
    for (const auto& r : roots) {
      out.push_back(Polynomial::linear_root(r));
      rest = divmod(rest, Polynomial::linear_root(r)).first;
    }
    split_squarefree(rest, out);
    return;
  }
  // No linear factors: degrees 2 and 3 are irreducible.
  const Polynomial g = from_integers(primitive_integer(f));
  for (int d = 2; d <= g.degree() / 2; ++d) {
    const Polynomial h = kronecker_factor_of_degree(g, d);
    if (h.is_zero()) continue;
    split_squarefree(h, out);
    split_squarefree(divmod(g, h).first, out);
    return;
  }
  out.push_back(f.monic());
}

}  // namespace

std::vector<IrreducibleFactor> factor(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("factor: zero polynomial");
  std::vector<IrreducibleFactor> out;
  for (const auto& [part, mult] : squarefree(p)) {
    std::vector<Polynomial> pieces;
    split_squarefree(part, pieces);
    for (auto& q : pieces) out.push_back({q.monic(), mult});
  }
  std::sort(out.begin(), out.end(),
            [](const IrreducibleFactor& a, const IrreducibleFactor& b) { return a.factor < b.factor; });
  return out;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const Matrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<unsigned long>(k);
  }
  return Polynomial(std::move(c));
}

}  // namespace scrollacm
