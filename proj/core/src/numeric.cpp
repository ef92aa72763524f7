#include "mqlat/numeric.hpp"

#include "mqlat/errors.hpp"

namespace mqlat {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw Error("ParseError", "empty rational literal");
  Rat x;
  if (x.set_str(s, 10) != 0)
    throw Error("ParseError", "bad rational literal: " + s);
  if (x.get_den() == 0)
    throw Error("ParseError", "zero denominator in: " + s);
  x.canonicalize();
  return x;
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n, Int* root) {
  if (sgn(n) < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root) *root = isqrt(n);
  return true;
}

bool rat_is_square(const Rat& x, Rat* root) {
  Int rn, rd;
  if (!is_square(x.get_num(), &rn)) return false;
  if (!is_square(x.get_den(), &rd)) return false;
  if (root) *root = Rat(rn, rd);
  return true;
}

Int floor_affine_sqrt(const Int& a, int sgn_root, const Int& n, const Int& b) {
  // value = (a + sgn*sqrt(n)) / b.  Start from the integer-sqrt estimate and
  // correct with exact comparisons; at most one step in either direction.
  Int s = isqrt(n);
  Int est = a + (sgn_root >= 0 ? s : -(s + 1));
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), est.get_mpz_t(), b.get_mpz_t());
  auto leq_value = [&](const Int& m) {
    // m <= (a + sgn*sqrt(n))/b  <=>  m*b - a <= sgn*sqrt(n)
    Int t = m * b - a;
    if (sgn_root >= 0) {
      if (sgn(t) <= 0) return true;
      return t * t <= n;
    }
    if (sgn(t) > 0) return false;
    return t * t >= n;
  };
  while (leq_value(f + 1)) f += 1;
  while (!leq_value(f)) f -= 1;
  return f;
}

Int floor_plus_sqrt(const Rat& c, const Rat& t) {
  // floor(p/q + sqrt(u/v)) = floor((p*v + sqrt(u*v*q^2)) / (q*v)), q,v > 0
  const Int &p = c.get_num(), &q = c.get_den();
  const Int &u = t.get_num(), &v = t.get_den();
  return floor_affine_sqrt(p * v, +1, u * v * q * q, q * v);
}

Int ceil_minus_sqrt(const Rat& c, const Rat& t) {
  // ceil(x) = -floor(-x); -(c - sqrt(t)) = -c + sqrt(t)
  return -floor_plus_sqrt(Rat(-c), t);
}

Int det_bareiss(std::vector<Int> m, int n) {
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  auto at = [&](int i, int j) -> Int& { return m[i * n + j]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return Int(0);
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Int d = at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

}  // namespace mqlat
