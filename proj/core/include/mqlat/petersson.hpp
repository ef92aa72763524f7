#pragma once

#include <optional>
#include <vector>

#include "mqlat/bessel.hpp"
#include "mqlat/diophantine.hpp"
#include "mqlat/kloosterman.hpp"
#include "mqlat/lattice.hpp"

namespace mqlat {

/// Weights (k_1..k_r), all k_j > 2; k_0 is the minimum.
struct WeightVector {
  std::vector<long> k;

  long k0() const;
  static WeightVector of(std::vector<long> k, int r);
};

struct DeltaInfo {
  Rat min_sq;   // exact delta^2
  Real delta;   // numeric delta at the requested precision
};

DeltaInfo delta_of(const IdealLattice& lat, mpfr_prec_t prec);

/// Which per-coordinate bound defines the small-embedding set: the displayed
/// 2*delta or the delta/sqrt(r) the collapse argument actually uses.
enum class BoundMode { proof, display };

/// All s in L (mod +-) with |sigma_j(s)| <= B for every j, where B is
/// delta/sqrt(r) in proof mode and 2*delta in display mode.  Exact.
std::vector<Element> a_set(const IdealLattice& lat, BoundMode mode);

/// Per-j test: 2 pi gamma_j sqrt(sigma_j(m1 m2)) / delta_tilde inside the open
/// interval ((k_j-1) - (k_j-1)^(1/3), k_j-1), decided with outward-rounded
/// intervals; borderline-unprovable cases return false.
std::vector<bool> weight_window_check(const WeightVector& k,
                                      const std::vector<Real>& m1m2_sigma,
                                      const std::vector<Real>& gamma,
                                      const Real& delta_tilde);

/// 1 iff m1/s and m2/s lie in the canonical order and (m1 m2 / s^2) O equals
/// the supplied n-lattice.  Error ZeroCandidate.
int hat_t_check(const Element& m1, const Element& m2, const Element& s_cand,
                const IdealLattice& n_lattice);

/// Which normalization of the collapsed modulus feeds the N(s') and
/// |sigma_j(s')| factors: the collapsed lattice element itself (lemma), or
/// min(b_i N)/(2^(n-1) sqrt(d~)) as printed (a scalar; differs unless n = 2).
enum class SPrimeNorm { lemma, printed };

struct ClassData {
  IdealLattice lattice;  // b_i N
  Element eta;           // generator of b_i^2 n
  Rat b_norm = Rat(1);   // N(b_i)
  /// Caller-supplied Kloosterman values per admissible unit, making the
  /// assembly auditable and covering non-principal class moduli.
  std::optional<std::vector<Cplx>> injected_kloosterman;
};

struct LevelData {
  Rat norm;                     // N(N)
  std::vector<Rat> prime_norms; // N(p) over p | N, user-factored
};

struct GeomInputs {
  FieldPtr field;
  std::vector<ClassData> classes;
  std::vector<Element> units;  // representatives of O^x / (O^x)^2
  Element m1, m2;              // totally positive elements of the dual lattice
  IdealLattice n_lattice;      // the Hecke ideal n
  std::optional<Element> hat_t_candidate;
  std::optional<LevelData> level;
};

struct UTermReport {
  Element eta_u;
  Cplx kloosterman_value;
  std::vector<Real> bessel_args;
  std::vector<Real> bessel_values;
  Cplx term;
};

struct ClassReport {
  bool collapsed = false;
  bool multiple_witnesses = false;
  Rat min_sq;
  Element s_prime;            // collapsed element (meaningful iff collapsed)
  Real s_prime_printed;       // printed-normalization magnitude
  std::vector<bool> window_ok;
  std::vector<UTermReport> u_terms;
};

struct GeomSideReport {
  int hat_t = 0;
  Cplx main_term;   // hat_T * sqrt(d_F N(n)); trivial character denominator 1
  Cplx a_term;      // exactly 0 when every class is Empty
  bool a_term_exact_zero = false;
  Real remainder_scale;  // prod (k_j - 1)^(-1/3)
  bool windows_ok = true;
  Rat order_disc;   // Gram determinant of the canonical-order basis
  Rat n_norm;       // N(n)
  std::optional<Rat> psi_level;
  std::vector<ClassReport> classes;
};

/// Assembles the collapsed geometric side: main term plus, for every class
/// with a trivial solution, the double sum over admissible units of
/// Kloosterman x norm factors x prod_j (2 pi / i^{k_j}) J_{k_j-1}(...).
/// Advisory flag windows_ok reports the weight-window hypothesis.
GeomSideReport geometric_side(const GeomInputs& in, const WeightVector& k,
                              mpfr_prec_t prec,
                              SPrimeNorm norm_mode = SPrimeNorm::lemma);

/// psi(N) = N(N) prod (1 + 1/N(p)) for a user-factored level.
Rat psi_of_level(const LevelData& level);

}  // namespace mqlat
