#include "mqlat/petersson.hpp"

#include <string>

#include "mqlat/errors.hpp"

namespace mqlat {

long WeightVector::k0() const {
  long m = k[0];
  for (long v : k) m = std::min(m, v);
  return m;
}

WeightVector WeightVector::of(std::vector<long> k, int r) {
  if (static_cast<int>(k.size()) != r)
    throw Error("WrongBasisSize", "need exactly " + std::to_string(r) + " weights");
  for (long v : k)
    if (v <= 2) throw Error("DomainError", "all weights must exceed 2");
  return WeightVector{std::move(k)};
}

DeltaInfo delta_of(const IdealLattice& lat, mpfr_prec_t prec) {
  DeltaInfo d{shortest_vectors(lat).min_sq, Real(prec)};
  d.delta = sqrt(Real::of(d.min_sq, prec));
  return d;
}

std::vector<Element> a_set(const IdealLattice& lat, BoundMode mode) {
  Rat min_sq = shortest_vectors(lat).min_sq;
  if (mode == BoundMode::proof) {
    // |sigma_j(s)| <= delta/sqrt(r) for all j together with ||sigma(s)|| >=
    // delta forces equality everywhere, i.e. a single nonzero coefficient
    std::vector<Element> sphere = lattice_points_with_norm_sq(lat, min_sq);
    std::vector<Element> out;
    for (auto& e : sphere)
      if (e.nonzero_count() == 1) out.push_back(e);
    return out;
  }
  // display mode: |sigma_j(s)|^2 <= 4 delta^2 per coordinate, inside the ball
  // ||sigma(s)||^2 <= 4 r delta^2
  Rat bound_sq = Rat(4) * min_sq;
  Rat ball = Rat(lat.spec().r) * bound_sq;
  std::vector<Element> cand = lattice_points_with_norm_sq_upto(lat, ball);
  std::vector<Element> out;
  for (auto& e : cand) {
    Element sq = e * e;
    bool ok = true;
    for (unsigned j = 0; j < static_cast<unsigned>(lat.spec().r) && ok; ++j) {
      // sigma_j(s)^2 <= 4 delta^2, decided exactly on the conjugate of s^2
      Element diff = Element::rational(lat.field(), bound_sq) - sq.conjugate(j);
      if (diff.sign_at(0) < 0) ok = false;
    }
    if (ok) out.push_back(e);
  }
  return out;
}

std::vector<bool> weight_window_check(const WeightVector& k,
                                      const std::vector<Real>& m1m2_sigma,
                                      const std::vector<Real>& gamma,
                                      const Real& delta_tilde) {
  const size_t r = k.k.size();
  if (m1m2_sigma.size() != r || gamma.size() != r)
    throw Error("WrongBasisSize", "need one sigma and gamma per weight");
  std::vector<bool> out(r, false);
  for (size_t j = 0; j < r; ++j) {
    mpfr_prec_t prec = std::max<mpfr_prec_t>(
        {delta_tilde.prec(), gamma[j].prec(), m1m2_sigma[j].prec(), 96});
    Interval two_pi = Interval::of(Rat(2), prec) * Interval::pi(prec);
    Interval value = two_pi * Interval::point(gamma[j]) *
                     Interval::point(m1m2_sigma[j]).sqrt_() /
                     Interval::point(delta_tilde);
    long km1 = k.k[j] - 1;
    Interval upper = Interval::of(Rat(km1), prec);
    Interval cbrt{rootn(Real::of(Rat(km1), prec, MPFR_RNDD), 3, MPFR_RNDD),
                  rootn(Real::of(Rat(km1), prec, MPFR_RNDU), 3, MPFR_RNDU)};
    Interval lower = upper - cbrt;
    out[j] = lower.strictly_below(value) && value.strictly_below(upper);
  }
  return out;
}

int hat_t_check(const Element& m1, const Element& m2, const Element& s_cand,
                const IdealLattice& n_lattice) {
  if (s_cand.is_zero()) throw Error("ZeroCandidate", "hat-T candidate must be nonzero");
  Element s_inv = s_cand.inverse();
  Element q1 = m1 * s_inv;
  Element q2 = m2 * s_inv;
  auto integral = [](const Element& e) {
    for (const auto& c : e.coeffs())
      if (c.get_den() != 1) return false;
    return true;
  };
  if (!integral(q1) || !integral(q2)) return 0;
  Element w = q1 * q2;  // m1 m2 / s^2
  if (w.is_zero()) return 0;
  IdealLattice w_lattice = principal_lattice(s_cand.field(), w);
  for (const auto& b : w_lattice.basis())
    if (!member(n_lattice, b)) return 0;
  for (const auto& b : n_lattice.basis())
    if (!member(w_lattice, b)) return 0;
  return 1;
}

Rat psi_of_level(const LevelData& level) {
  Rat acc = level.norm;
  for (const auto& p : level.prime_norms) acc *= Rat(1) + Rat(1) / p;
  return acc;
}

namespace {

Cplx cplx_zero(mpfr_prec_t prec) { return Cplx{Real::of(0L, prec), Real::of(0L, prec)}; }

Cplx cplx_mul(const Cplx& a, const Cplx& b) {
  return Cplx{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cplx cplx_scale(const Cplx& a, const Real& t) { return Cplx{a.re * t, a.im * t}; }

Cplx cplx_add(const Cplx& a, const Cplx& b) { return Cplx{a.re + b.re, a.im + b.im}; }

// 1 / i^{sum k_j} = i^{(4 - sum mod 4) mod 4}, exact
Cplx inverse_i_power(long ksum, mpfr_prec_t prec) {
  int p = static_cast<int>(((4 - (ksum % 4)) % 4 + 4) % 4);
  Real one = Real::of(1L, prec), zero = Real::of(0L, prec);
  switch (p) {
    case 0: return Cplx{one, zero};
    case 1: return Cplx{zero, one};
    case 2: return Cplx{neg(one), zero};
    default: return Cplx{zero, neg(one)};
  }
}

}  // namespace

GeomSideReport geometric_side(const GeomInputs& in, const WeightVector& k,
                              mpfr_prec_t prec, SPrimeNorm norm_mode) {
  const FieldSpec& f = *in.field;
  const int r = f.r;
  WeightVector::of(k.k, r);  // validate
  mpfr_prec_t work = prec + 48;

  GeomSideReport rep;
  rep.main_term = cplx_zero(prec);
  rep.a_term = cplx_zero(work);
  rep.remainder_scale = Real::of(1L, prec);

  // order discriminant: det of the canonical Gram 2^n diag(d_S)
  rep.order_disc = Rat(1);
  for (unsigned m = 0; m < static_cast<unsigned>(r); ++m)
    rep.order_disc *= Rat(r) * Rat(f.subset_product[m]);

  // N(n) from the covolume ratio of the supplied n-lattice
  Int det_n = det_bareiss(in.n_lattice.working_coeffs(), r);
  Int scale_pow;
  mpz_pow_ui(scale_pow.get_mpz_t(), in.n_lattice.scale_den().get_mpz_t(),
             static_cast<unsigned long>(r));
  rep.n_norm = abs(Rat(det_n) / Rat(scale_pow));

  // main term
  if (in.hat_t_candidate)
    rep.hat_t = hat_t_check(in.m1, in.m2, *in.hat_t_candidate, in.n_lattice);
  if (rep.hat_t != 0) {
    Real df = sqrt(Real::of(rep.order_disc * rep.n_norm, work));
    rep.main_term = Cplx{Real(prec), Real::of(0L, prec)};
    mpfr_set(rep.main_term.re.raw(), df.raw(), MPFR_RNDN);
  }

  if (!in.m1.totally_positive() || !in.m2.totally_positive())
    throw Error("DomainError", "m1 and m2 must be totally positive");

  // remainder scale prod (k_j - 1)^(-1/3)
  for (long kj : k.k) {
    Real cbrt = rootn(Real::of(kj - 1, prec), 3);
    rep.remainder_scale = rep.remainder_scale / cbrt;
  }

  // admissible units per class and gamma_j enclosures
  std::vector<std::vector<Element>> admissible(in.classes.size());
  std::vector<Interval> gamma;
  for (int j = 0; j < r; ++j) gamma.push_back(Interval::of(Rat(0), work));
  bool any_admissible = false;
  for (size_t i = 0; i < in.classes.size(); ++i) {
    for (const auto& u : in.units) {
      Element eta_u = in.classes[i].eta * u;
      if (!eta_u.totally_positive()) continue;
      admissible[i].push_back(eta_u);
      any_admissible = true;
      for (int j = 0; j < r; ++j) {
        // componentwise max keeps a valid enclosure of max_j over candidates
        Interval g = eta_u.embed_interval(static_cast<unsigned>(j), work).sqrt_();
        if (gamma[static_cast<size_t>(j)].lo < g.lo) gamma[static_cast<size_t>(j)].lo = g.lo;
        if (gamma[static_cast<size_t>(j)].hi < g.hi) gamma[static_cast<size_t>(j)].hi = g.hi;
      }
    }
  }
  (void)any_admissible;

  Element m1m2 = in.m1 * in.m2;
  Cplx phase = inverse_i_power([&] {
    long s = 0;
    for (long kj : k.k) s += kj;
    return s;
  }(), work);
  Real two_pi = Real::of(2L, work) * Real::pi(work);
  Real two_pi_pow = Real::of(1L, work);
  for (int j = 0; j < r; ++j) two_pi_pow = two_pi_pow * two_pi;

  bool any_term = false;
  for (size_t i = 0; i < in.classes.size(); ++i) {
    const ClassData& cls = in.classes[i];
    ClassReport cr;
    DichotomyVerdict verdict = dichotomy(cls.lattice);
    cr.collapsed = verdict.collapsed;
    cr.multiple_witnesses = verdict.multiple_witnesses;
    cr.min_sq = shortest_vectors(cls.lattice).min_sq;
    cr.s_prime = verdict.collapsed ? verdict.element : Element::zero(in.field);
    // printed normalization: min / (2^(n-1) sqrt(d~))
    Real delta = sqrt(Real::of(cr.min_sq, work));
    cr.s_prime_printed = Real::of(0L, prec);
    if (verdict.collapsed) {
      Real dd = sqrt(Real::of(Rat(f.subset_product[verdict.subset_mask]), work));
      Real denom = Real::of(static_cast<long>(1L << (f.n - 1)), work) * dd;
      Real printed = delta / denom;
      mpfr_set(cr.s_prime_printed.raw(), printed.raw(), MPFR_RNDN);
    }

    // weight window, advisory: delta_tilde = delta / (2 sqrt(r))
    Interval delta_tilde = Interval::of(cr.min_sq, work).sqrt_() /
                           (Interval::of(Rat(2), work) * Interval::of(Rat(r), work).sqrt_());
    cr.window_ok.assign(static_cast<size_t>(r), false);
    for (int j = 0; j < r; ++j) {
      Interval sig = m1m2.embed_interval(static_cast<unsigned>(j), work);
      Interval value = (Interval::of(Rat(2), work) * Interval::pi(work)) *
                       gamma[static_cast<size_t>(j)] * sig.sqrt_() / delta_tilde;
      long km1 = k.k[static_cast<size_t>(j)] - 1;
      Interval upper = Interval::of(Rat(km1), work);
      Interval cbrt{rootn(Real::of(Rat(km1), work, MPFR_RNDD), 3, MPFR_RNDD),
                    rootn(Real::of(Rat(km1), work, MPFR_RNDU), 3, MPFR_RNDU)};
      Interval lower = upper - cbrt;
      cr.window_ok[static_cast<size_t>(j)] =
          lower.strictly_below(value) && value.strictly_below(upper);
      if (!cr.window_ok[static_cast<size_t>(j)]) rep.windows_ok = false;
    }

    if (verdict.collapsed) {
      if (cls.b_norm != 1 && !cls.injected_kloosterman)
        throw Error("Unsupported",
                    "non-trivial class modulus needs injected Kloosterman values");
      // residue system for the collapsed modulus, shared across units
      std::optional<ResidueSystem> rs;
      if (!cls.injected_kloosterman)
        rs.emplace(residue_units(in.field, cr.s_prime));

      // N(s') and |sigma_j(s')| under the chosen normalization
      Rat nm_lemma = cr.s_prime.norm();
      if (nm_lemma < 0) nm_lemma = -nm_lemma;
      Real n_sprime = norm_mode == SPrimeNorm::lemma
                          ? Real::of(nm_lemma, work)
                          : [&] {
                              Real acc = Real::of(1L, work);
                              for (int j = 0; j < r; ++j) acc = acc * cr.s_prime_printed;
                              return acc;
                            }();

      for (size_t a = 0; a < admissible[i].size(); ++a) {
        const Element& eta_u = admissible[i][a];
        UTermReport ut{eta_u, cplx_zero(prec), {}, {}, cplx_zero(work)};
        if (cls.injected_kloosterman) {
          if (a >= cls.injected_kloosterman->size())
            throw Error("WrongBasisSize", "injected Kloosterman list too short");
          ut.kloosterman_value = (*cls.injected_kloosterman)[a];
        } else {
          ut.kloosterman_value = kloosterman(*rs, in.m1, in.m2, eta_u, work);
        }
        Rat nm_eta = eta_u.norm();
        if (nm_eta < 0) nm_eta = -nm_eta;
        Real sqrt_n_eta = sqrt(Real::of(nm_eta, work));

        Cplx term = cplx_scale(ut.kloosterman_value, sqrt_n_eta / n_sprime);
        term = cplx_mul(term, phase);
        term = cplx_scale(term, two_pi_pow);
        Element arg_elt = eta_u * m1m2;
        for (int j = 0; j < r; ++j) {
          Real sig = arg_elt.embed_numeric(static_cast<unsigned>(j), work);
          Real abs_sigma_sprime =
              norm_mode == SPrimeNorm::lemma
                  ? abs(cr.s_prime.embed_numeric(static_cast<unsigned>(j), work))
                  : cr.s_prime_printed;
          Real arg = Real::of(4L, work) * Real::pi(work) * sqrt(sig) / abs_sigma_sprime;
          Real jv = bessel_j(static_cast<unsigned long>(k.k[static_cast<size_t>(j)] - 1),
                             arg, work);
          ut.bessel_args.push_back(arg);
          ut.bessel_values.push_back(jv);
          term = cplx_scale(term, jv);
        }
        ut.term = term;
        rep.a_term = cplx_add(rep.a_term, term);
        any_term = true;
        cr.u_terms.push_back(std::move(ut));
      }
    }
    rep.classes.push_back(std::move(cr));
  }

  rep.a_term_exact_zero = !any_term;
  if (in.level) rep.psi_level = psi_of_level(*in.level);

  Cplx out = cplx_zero(prec);
  mpfr_set(out.re.raw(), rep.a_term.re.raw(), MPFR_RNDN);
  mpfr_set(out.im.raw(), rep.a_term.im.raw(), MPFR_RNDN);
  rep.a_term = out;
  return rep;
}

}  // namespace mqlat
