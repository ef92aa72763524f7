#include "mqlat/element.hpp"

#include <bit>
#include <string>

#include "mqlat/errors.hpp"

namespace mqlat {

Element::Element(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->r)
    throw Error("WrongBasisSize",
                "expected " + std::to_string(field_->r) + " coefficients, got " +
                    std::to_string(coeffs_.size()));
  for (auto& c : coeffs_) c.canonicalize();
}

Element Element::zero(FieldPtr f) {
  std::vector<Rat> c(static_cast<size_t>(f->r), Rat(0));
  return Element(std::move(f), std::move(c));
}

Element Element::one(FieldPtr f) { return rational(std::move(f), Rat(1)); }

Element Element::rational(FieldPtr f, const Rat& x) {
  std::vector<Rat> c(static_cast<size_t>(f->r), Rat(0));
  c[0] = x;
  return Element(std::move(f), std::move(c));
}

Element Element::radical(FieldPtr f, unsigned mask, const Rat& x) {
  if (mask >= static_cast<unsigned>(f->r))
    throw Error("IndexOutOfRange", "radical mask " + std::to_string(mask));
  std::vector<Rat> c(static_cast<size_t>(f->r), Rat(0));
  c[mask] = x;
  return Element(std::move(f), std::move(c));
}

bool Element::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Element::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

int Element::nonzero_count() const {
  int k = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++k;
  return k;
}

void Element::check_same_field(const Element& o) const {
  if (field_ == o.field_) return;
  if (!field_->same_as(*o.field_))
    throw Error("FieldMismatch", "elements live in different fields");
}

Element Element::operator+(const Element& o) const {
  check_same_field(o);
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Element(field_, std::move(c));
}

Element Element::operator-(const Element& o) const {
  check_same_field(o);
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Element(field_, std::move(c));
}

Element Element::operator-() const {
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x = -x;
  return Element(field_, std::move(c));
}

Element Element::scalar_mul(const Rat& t) const {
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x *= t;
  return Element(field_, std::move(c));
}

Element Element::operator*(const Element& o) const {
  // sqrt(d_S) * sqrt(d_T) = d_{S&T} * sqrt(d_{S^T})
  check_same_field(o);
  const unsigned r = static_cast<unsigned>(field_->r);
  std::vector<Rat> c(static_cast<size_t>(r), Rat(0));
  for (unsigned s = 0; s < r; ++s) {
    if (coeffs_[s] == 0) continue;
    for (unsigned t = 0; t < r; ++t) {
      if (o.coeffs_[t] == 0) continue;
      Rat term = coeffs_[s] * o.coeffs_[t];
      term *= Rat(field_->subset_product[s & t]);
      c[s ^ t] += term;
    }
  }
  return Element(field_, std::move(c));
}

bool Element::operator==(const Element& o) const {
  if (!field_->same_as(*o.field_)) return false;
  return coeffs_ == o.coeffs_;
}

Element Element::conjugate(unsigned k) const {
  if (k >= static_cast<unsigned>(field_->r))
    throw Error("IndexOutOfRange", "conjugate index " + std::to_string(k));
  std::vector<Rat> c(coeffs_);
  for (unsigned s = 1; s < c.size(); ++s)
    if (std::popcount(s & k) & 1) c[s] = -c[s];
  return Element(field_, std::move(c));
}

Rat Element::trace() const { return Rat(field_->r) * coeffs_[0]; }

std::vector<Rat> Element::multiplication_matrix() const {
  // column T holds the coefficients of s * sqrt(d_T):
  // M[S][T] = c_{S^T} * d_{(S^T) & T}
  const unsigned r = static_cast<unsigned>(field_->r);
  std::vector<Rat> m(static_cast<size_t>(r) * r, Rat(0));
  for (unsigned t = 0; t < r; ++t)
    for (unsigned u = 0; u < r; ++u) {
      if (coeffs_[u] == 0) continue;
      unsigned s = u ^ t;
      m[static_cast<size_t>(s) * r + t] = coeffs_[u] * Rat(field_->subset_product[u & t]);
    }
  return m;
}

Rat Element::norm() const {
  const int r = field_->r;
  std::vector<Rat> m = multiplication_matrix();
  // clear denominators and run integer Bareiss
  Int den(1);
  for (const auto& x : m) den = lcm(den, x.get_den());
  std::vector<Int> mi(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    Rat scaled = m[i] * Rat(den);
    mi[i] = scaled.get_num();  // exact integer after scaling
  }
  Int det = det_bareiss(std::move(mi), r);
  Rat out(det);
  Int dp;
  mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(r));
  out /= Rat(dp);
  return out;
}

Element Element::inverse() const {
  if (is_zero()) throw Error("ZeroElement", "inverse of zero");
  // product of all nontrivial conjugates divided by the norm
  Element acc = one(field_);
  for (unsigned k = 1; k < static_cast<unsigned>(field_->r); ++k)
    acc = acc * conjugate(k);
  Rat nm = (*this * acc).coeff(0);  // = norm(s), the remaining masks vanish
  return acc.scalar_mul(Rat(1) / nm);
}

Interval Element::embed_interval(unsigned k, mpfr_prec_t prec) const {
  if (k >= static_cast<unsigned>(field_->r))
    throw Error("IndexOutOfRange", "embedding index " + std::to_string(k));
  if (!field_->totally_real)
    throw Error("NotTotallyReal", "numeric embeddings need all d_i > 0");
  Interval acc = Interval::of(Rat(0), prec);
  for (unsigned s = 0; s < static_cast<unsigned>(field_->r); ++s) {
    if (coeffs_[s] == 0) continue;
    int sign = (std::popcount(s & k) & 1) ? -1 : 1;
    Interval c = Interval::of(sign > 0 ? coeffs_[s] : Rat(-coeffs_[s]), prec);
    Interval root = Interval::of(Rat(field_->subset_product[s]), prec).sqrt_();
    acc = acc + c * root;
  }
  return acc;
}

Real Element::embed_numeric(unsigned k, mpfr_prec_t precision_bits) const {
  if (precision_bits < 64)
    throw Error("DomainError", "precision_bits must be at least 64");
  if (is_zero()) {
    if (!field_->totally_real)
      throw Error("NotTotallyReal", "numeric embeddings need all d_i > 0");
    return Real::of(0L, precision_bits);
  }
  // refine until the enclosure certifies the requested relative error;
  // sigma_k is injective, so the value is nonzero and this terminates
  mpfr_prec_t work = precision_bits + 32;
  for (;;) {
    Interval v = embed_interval(k, work);
    if (!v.contains_zero()) {
      Real w = v.width();
      Real m = abs(v.lo);
      // width / |value| <= 2^-(p-8) guaranteed when width*2^(p-8) <= |lo|
      Real scaled(w);
      mpfr_mul_2ui(scaled.raw(), w.raw(), static_cast<unsigned long>(precision_bits - 8), MPFR_RNDU);
      if (scaled <= m) {
        Real mid = div(add(v.lo, v.hi), Real::of(2L, work));
        Real out(precision_bits);
        mpfr_set(out.raw(), mid.raw(), MPFR_RNDN);
        return out;
      }
    }
    work *= 2;
  }
}

int Element::sign_at(unsigned k) const {
  if (is_zero()) return 0;
  for (mpfr_prec_t work = 96;; work *= 2) {
    Interval v = embed_interval(k, work);
    if (v.positive()) return 1;
    if (v.negative()) return -1;
  }
}

bool Element::totally_positive() const {
  for (unsigned k = 0; k < static_cast<unsigned>(field_->r); ++k)
    if (sign_at(k) <= 0) return false;
  return true;
}

Element Element::canonical_sign() const {
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    return c > 0 ? *this : -*this;
  }
  return *this;
}

bool Element::lex_less(const Element& a, const Element& b) {
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace mqlat
