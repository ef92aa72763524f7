#include "mqlat/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>

#include "mqlat/errors.hpp"

namespace mqlat {

namespace {

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  if (const char* env = std::getenv("MQLAT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Exact Gram-based LLL, delta = 99/100.  Operates on an integer Gram matrix
// and tracks the unimodular transform; GSO data (mu, B*) kept as rationals.
// ---------------------------------------------------------------------------
class GramLLL {
 public:
  GramLLL(std::vector<Int> gram, int r) : r_(r), g_(std::move(gram)) {
    u_.assign(static_cast<size_t>(r_) * r_, Int(0));
    for (int i = 0; i < r_; ++i) u(i, i) = 1;
    mu_.assign(static_cast<size_t>(r_) * r_, Rat(0));
    b_.assign(static_cast<size_t>(r_), Rat(0));
  }

  void run() {
    for (int i = 0; i < r_; ++i) gso_row(i);
    int k = 1;
    while (k < r_) {
      size_reduce(k);
      // Lovasz condition with delta = 99/100
      Rat lhs = b_[static_cast<size_t>(k)];
      Rat mu2 = mu(k, k - 1) * mu(k, k - 1);
      Rat rhs = (Rat(99, 100) - mu2) * b_[static_cast<size_t>(k - 1)];
      if (lhs >= rhs) {
        ++k;
      } else {
        swap_rows(k);
        k = std::max(k - 1, 1);
      }
    }
  }

  bool reduced() {
    for (int i = 0; i < r_; ++i) gso_row(i);
    for (int k = 1; k < r_; ++k) {
      for (int j = 0; j < k; ++j) {
        Rat m = mu(k, j);
        if (m > Rat(1, 2) || m < Rat(-1, 2)) return false;
      }
      Rat mu2 = mu(k, k - 1) * mu(k, k - 1);
      if (b_[static_cast<size_t>(k)] <
          (Rat(99, 100) - mu2) * b_[static_cast<size_t>(k - 1)])
        return false;
    }
    return true;
  }

  const std::vector<Int>& gram() const { return g_; }
  const std::vector<Int>& transform() const { return u_; }

 private:
  Int& g(int i, int j) { return g_[static_cast<size_t>(i) * r_ + j]; }
  Int& u(int i, int j) { return u_[static_cast<size_t>(i) * r_ + j]; }
  Rat& mu(int i, int j) { return mu_[static_cast<size_t>(i) * r_ + j]; }

  void gso_row(int i) {
    for (int j = 0; j < i; ++j) {
      Rat acc(g(i, j));
      for (int t = 0; t < j; ++t)
        acc -= mu(i, t) * mu(j, t) * b_[static_cast<size_t>(t)];
      if (b_[static_cast<size_t>(j)] == 0)
        throw Error("RankDeficient", "Gram matrix is singular");
      mu(i, j) = acc / b_[static_cast<size_t>(j)];
    }
    Rat acc(g(i, i));
    for (int t = 0; t < i; ++t)
      acc -= mu(i, t) * mu(i, t) * b_[static_cast<size_t>(t)];
    if (acc <= 0) throw Error("RankDeficient", "Gram matrix is not positive definite");
    b_[static_cast<size_t>(i)] = acc;
  }

  // row_k -= q * row_j on the transform and on the Gram (rows and columns)
  void row_op(int k, int j, const Int& q) {
    if (q == 0) return;
    for (int t = 0; t < r_; ++t) u(k, t) -= q * u(j, t);
    for (int t = 0; t < r_; ++t) g(k, t) -= q * g(j, t);
    for (int t = 0; t < r_; ++t) g(t, k) -= q * g(t, j);
  }

  void size_reduce(int k) {
    // row ops on row k leave the GSO of rows < k untouched
    for (int j = k - 1; j >= 0; --j) {
      Rat m = mu(k, j);
      if (m > Rat(1, 2) || m < Rat(-1, 2)) {
        Rat shifted = m + Rat(1, 2);  // nearest integer
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(),
                   shifted.get_den().get_mpz_t());
        row_op(k, j, q);
        gso_row(k);
      }
    }
  }

  void swap_rows(int k) {
    for (int t = 0; t < r_; ++t) std::swap(u(k - 1, t), u(k, t));
    for (int t = 0; t < r_; ++t) std::swap(g(k - 1, t), g(k, t));
    for (int t = 0; t < r_; ++t) std::swap(g(t, k - 1), g(t, k));
    for (int t = k - 1; t < r_; ++t) gso_row(t);
  }

  int r_;
  std::vector<Int> g_;
  std::vector<Int> u_;
  std::vector<Rat> mu_;
  std::vector<Rat> b_;
};

// ---------------------------------------------------------------------------
// Exact Fincke-Pohst enumeration on an integer Gram matrix.  The LDL^T data
// is rational; coordinate ranges at each level come from exact integer
// square-root bounds, and every reported value is the exact x^T G x.
// One representative per +- pair: the trailing nonzero coordinate is positive.
// ---------------------------------------------------------------------------
struct EnumHit {
  std::vector<long> x;
  Int value;
};

class GramEnumerator {
 public:
  GramEnumerator(const std::vector<Int>& gram, int r) : r_(r) {
    // LDL^T: Q(x) = sum_i D_i (x_i + sum_{j>i} L_{ji} x_j)^2
    l_.assign(static_cast<size_t>(r_) * r_, Rat(0));
    d_.assign(static_cast<size_t>(r_), Rat(0));
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j <= i; ++j) {
        Rat acc(gram[static_cast<size_t>(i) * r_ + j]);
        for (int t = 0; t < j; ++t)
          acc -= l(i, t) * l(j, t) * d_[static_cast<size_t>(t)];
        if (j < i) {
          if (d_[static_cast<size_t>(j)] == 0)
            throw Error("RankDeficient", "Gram matrix is singular");
          l(i, j) = acc / d_[static_cast<size_t>(j)];
        } else {
          if (acc <= 0)
            throw Error("RankDeficient", "Gram matrix is not positive definite");
          d_[static_cast<size_t>(i)] = acc;
        }
      }
    }
  }

  /// All x != 0 (mod +-) with x^T G x <= radius; when track_min is set the
  /// radius shrinks to the best value seen and only minima are kept.
  std::vector<EnumHit> enumerate(const Int& radius, bool track_min, int workers) {
    int top = r_ - 1;
    // top-level range (trailing coordinate >= 0 picks one of each +- pair)
    Rat t_over_d = Rat(radius) / d_[static_cast<size_t>(top)];
    Int hi_z = floor_plus_sqrt(Rat(0), t_over_d);
    long hi = hi_z.fits_slong_p() ? hi_z.get_si() : 0;
    workers = std::min<long>(workers, hi + 1);
    if (workers <= 1) {
      Ctx ctx{Rat(radius), track_min, {}};
      std::vector<long> x(static_cast<size_t>(r_), 0);
      recurse(top, x, ctx);
      return finalize(std::move(ctx), track_min);
    }
    // split the top coordinate range across workers (strided), merge after
    std::vector<std::future<Ctx>> futs;
    for (int wkr = 0; wkr < workers; ++wkr) {
      futs.push_back(std::async(std::launch::async, [this, wkr, workers, hi,
                                                     radius, track_min]() {
        Ctx local{Rat(radius), track_min, {}};
        std::vector<long> lx(static_cast<size_t>(r_), 0);
        for (long v = wkr; v <= hi; v += workers) {
          lx[static_cast<size_t>(r_ - 1)] = v;
          Rat used = d_[static_cast<size_t>(r_ - 1)] * Rat(v) * Rat(v);
          if (used > local.budget) continue;
          recurse(r_ - 2, lx, local);
        }
        return local;
      }));
    }
    Ctx merged{Rat(radius), track_min, {}};
    for (auto& f : futs) {
      Ctx part = f.get();
      for (auto& h : part.hits) merged.hits.push_back(std::move(h));
    }
    return finalize(std::move(merged), track_min);
  }

 private:
  struct Ctx {
    Rat budget;  // current enumeration radius (shrinks in track_min mode)
    bool track_min;
    std::vector<EnumHit> hits;
  };

  Rat& l(int i, int j) { return l_[static_cast<size_t>(i) * r_ + j]; }

  // level i: x_j fixed for j > i; budgets recomputed from the (possibly
  // shrunken) ctx.budget so stale subtree bounds only over-enumerate
  void recurse(int i, std::vector<long>& x, Ctx& ctx) {
    if (i < 0) {
      bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
      if (zero) return;
      Rat val = value_of(x);
      if (val > ctx.budget) return;
      if (ctx.track_min) {
        if (!ctx.hits.empty() && val < Rat(ctx.hits[0].value)) ctx.hits.clear();
        ctx.budget = val;  // shrink: only minima survive
      }
      ctx.hits.push_back(EnumHit{x, val.get_num()});
      return;
    }
    Rat spent = budget_spent(x, i + 1);
    if (spent > ctx.budget) return;
    Rat budget = ctx.budget - spent;
    // center c_i = sum_{j>i} L_{ji} x_j
    Rat c(0);
    for (int j = i + 1; j < r_; ++j)
      if (x[static_cast<size_t>(j)] != 0)
        c += l(j, i) * Rat(x[static_cast<size_t>(j)]);
    Rat t_over_d = budget / d_[static_cast<size_t>(i)];
    long lo = static_cast<long>(ceil_minus_sqrt(-c, t_over_d).get_si());
    long hi = static_cast<long>(floor_plus_sqrt(-c, t_over_d).get_si());
    bool tail_zero = true;
    for (int j = i + 1; j < r_; ++j)
      if (x[static_cast<size_t>(j)] != 0) { tail_zero = false; break; }
    if (tail_zero && lo < 0) lo = 0;
    for (long v = lo; v <= hi; ++v) {
      x[static_cast<size_t>(i)] = v;
      recurse(i - 1, x, ctx);
    }
    x[static_cast<size_t>(i)] = 0;
  }

  Rat budget_spent(const std::vector<long>& x, int from) const {
    Rat acc(0);
    for (int i = from; i < r_; ++i) {
      Rat y(x[static_cast<size_t>(i)]);
      for (int j = i + 1; j < r_; ++j)
        if (x[static_cast<size_t>(j)] != 0)
          y += l_[static_cast<size_t>(j) * r_ + i] * Rat(x[static_cast<size_t>(j)]);
      if (y != 0) acc += d_[static_cast<size_t>(i)] * y * y;
    }
    return acc;
  }

  Rat value_of(const std::vector<long>& x) const { return budget_spent(x, 0); }

  std::vector<EnumHit> finalize(Ctx ctx, bool track_min) {
    if (track_min && !ctx.hits.empty()) {
      Int best = ctx.hits[0].value;
      for (const auto& h : ctx.hits) best = std::min(best, h.value);
      std::vector<EnumHit> kept;
      for (auto& h : ctx.hits)
        if (h.value == best) kept.push_back(std::move(h));
      return kept;
    }
    return ctx.hits;
  }

  int r_;
  std::vector<Rat> l_;
  std::vector<Rat> d_;
};

std::vector<Int> integer_gram(const FieldSpec& f, const std::vector<Int>& w) {
  const int r = f.r;
  std::vector<Int> g(static_cast<size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Int acc(0);
      for (int m = 0; m < r; ++m) {
        const Int& wi = w[static_cast<size_t>(i) * r + m];
        const Int& wj = w[static_cast<size_t>(j) * r + m];
        if (wi == 0 || wj == 0) continue;
        acc += wi * wj * f.subset_product[static_cast<size_t>(m)];
      }
      acc *= r;
      g[static_cast<size_t>(i) * r + j] = acc;
      g[static_cast<size_t>(j) * r + i] = acc;
    }
  return g;
}

Element element_from_coords(const IdealLattice& lat, const std::vector<long>& x) {
  const int r = lat.spec().r;
  std::vector<Rat> coeffs(static_cast<size_t>(r), Rat(0));
  const std::vector<Int>& w = lat.working_coeffs();
  for (int m = 0; m < r; ++m) {
    Int acc(0);
    for (int i = 0; i < r; ++i) {
      if (x[static_cast<size_t>(i)] == 0) continue;
      acc += Int(x[static_cast<size_t>(i)]) * w[static_cast<size_t>(i) * r + m];
    }
    Rat c(acc, lat.scale_den());
    c.canonicalize();
    coeffs[static_cast<size_t>(m)] = c;
  }
  return Element(lat.field(), std::move(coeffs)).canonical_sign();
}

void sort_canonical(std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), Element::lex_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Element& a, const Element& b) { return a == b; }),
          v.end());
}

}  // namespace

IdealLattice::IdealLattice(FieldPtr f, std::vector<Element> basis, Provenance prov,
                           std::optional<Element> gen)
    : field_(std::move(f)), basis_(std::move(basis)), prov_(prov), gen_(std::move(gen)) {
  const FieldSpec& spec = *field_;
  if (!spec.totally_real)
    throw Error("NotTotallyReal", "ideal lattices need a totally real field");
  if (static_cast<int>(basis_.size()) != spec.r)
    throw Error("WrongBasisSize", "expected " + std::to_string(spec.r) +
                                      " basis elements");
  scale_den_ = 1;
  for (const auto& e : basis_)
    for (const auto& c : e.coeffs()) scale_den_ = lcm(scale_den_, c.get_den());
  const int r = spec.r;
  w_.assign(static_cast<size_t>(r) * r, Int(0));
  for (int i = 0; i < r; ++i)
    for (int m = 0; m < r; ++m) {
      Rat scaled = basis_[static_cast<size_t>(i)].coeff(static_cast<unsigned>(m)) *
                   Rat(scale_den_);
      w_[static_cast<size_t>(i) * r + m] = scaled.get_num();
    }
  if (det_bareiss(w_, r) == 0)
    throw Error("RankDeficient", "basis does not span the field");
  gram_ = integer_gram(spec, w_);
}

IdealLattice principal_lattice(FieldPtr f, const Element& gen) {
  if (gen.is_zero()) throw Error("ZeroGenerator", "principal ideal needs gen != 0");
  std::vector<Element> basis;
  basis.reserve(static_cast<size_t>(f->r));
  for (unsigned m = 0; m < static_cast<unsigned>(f->r); ++m)
    basis.push_back(gen * Element::radical(f, m));
  return IdealLattice(f, std::move(basis), Provenance::principal, gen);
}

IdealLattice from_basis(FieldPtr f, std::vector<Element> elems) {
  return IdealLattice(std::move(f), std::move(elems), Provenance::user_supplied,
                      std::nullopt);
}

IdealLattice canonical_order(FieldPtr f) {
  std::vector<Element> basis;
  basis.reserve(static_cast<size_t>(f->r));
  for (unsigned m = 0; m < static_cast<unsigned>(f->r); ++m)
    basis.push_back(Element::radical(f, m));
  return IdealLattice(f, std::move(basis), Provenance::canonical_order,
                      Element::one(f));
}

bool member(const IdealLattice& lat, const Element& x) {
  if (!lat.spec().same_as(x.spec()))
    throw Error("FieldMismatch", "element lives in a different field");
  // solve y * W = l * coeffs(x) over Q, then test integrality
  const int r = lat.spec().r;
  std::vector<Rat> m(static_cast<size_t>(r) * (r + 1));
  // build W^T | rhs as an augmented system: W^T y^T = l * x^T
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j)
      m[static_cast<size_t>(i) * (r + 1) + j] =
          Rat(lat.working_coeffs()[static_cast<size_t>(j) * r + i]);
    m[static_cast<size_t>(i) * (r + 1) + r] =
        x.coeff(static_cast<unsigned>(i)) * Rat(lat.scale_den());
  }
  // Gaussian elimination with exact rationals
  int row = 0;
  std::vector<int> pivot_col(static_cast<size_t>(r), -1);
  for (int col = 0; col < r && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (m[static_cast<size_t>(i) * (r + 1) + col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j <= r; ++j)
      std::swap(m[static_cast<size_t>(piv) * (r + 1) + j],
                m[static_cast<size_t>(row) * (r + 1) + j]);
    Rat inv = Rat(1) / m[static_cast<size_t>(row) * (r + 1) + col];
    for (int j = col; j <= r; ++j) m[static_cast<size_t>(row) * (r + 1) + j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row) continue;
      Rat factor = m[static_cast<size_t>(i) * (r + 1) + col];
      if (factor == 0) continue;
      for (int j = col; j <= r; ++j)
        m[static_cast<size_t>(i) * (r + 1) + j] -=
            factor * m[static_cast<size_t>(row) * (r + 1) + j];
    }
    pivot_col[static_cast<size_t>(row)] = col;
    ++row;
  }
  // full rank is guaranteed by construction, so row == r
  for (int i = 0; i < r; ++i) {
    const Rat& y = m[static_cast<size_t>(i) * (r + 1) + r];
    if (y.get_den() != 1) return false;
  }
  return true;
}

IdealLattice lll_reduce(const IdealLattice& lat) {
  const int r = lat.spec().r;
  GramLLL lll(lat.working_gram(), r);
  lll.run();
  const std::vector<Int>& u = lll.transform();
  std::vector<Element> new_basis;
  new_basis.reserve(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    Element acc = Element::zero(lat.field());
    for (int j = 0; j < r; ++j) {
      const Int& q = u[static_cast<size_t>(i) * r + j];
      if (q == 0) continue;
      acc = acc + lat.basis()[static_cast<size_t>(j)].scalar_mul(Rat(q));
    }
    new_basis.push_back(std::move(acc));
  }
  return IdealLattice(lat.field(), std::move(new_basis), lat.provenance(),
                      lat.generator());
}

bool is_lll_reduced(const IdealLattice& lat) {
  GramLLL lll(lat.working_gram(), lat.spec().r);
  return lll.reduced();
}

std::vector<Element> ShortestSet::expanded() const {
  std::vector<Element> out;
  out.reserve(vectors.size() * 2);
  for (const auto& v : vectors) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

ShortestSet shortest_vectors(const IdealLattice& lat, int workers) {
  workers = resolve_workers(workers);
  IdealLattice reduced = lll_reduce(lat);
  const int r = reduced.spec().r;
  const std::vector<Int>& g = reduced.working_gram();
  Int radius = g[0];
  for (int i = 1; i < r; ++i)
    radius = std::min(radius, g[static_cast<size_t>(i) * r + i]);
  GramEnumerator en(g, r);
  std::vector<EnumHit> hits = en.enumerate(radius, /*track_min=*/true, workers);
  ShortestSet out;
  if (hits.empty()) throw Error("RankDeficient", "no nonzero lattice point found");
  Int best = hits[0].value;
  for (const auto& h : hits) best = std::min(best, h.value);
  out.min_sq = Rat(best) / Rat(reduced.scale_den() * reduced.scale_den());
  for (const auto& h : hits)
    out.vectors.push_back(element_from_coords(reduced, h.x));
  sort_canonical(out.vectors);
  return out;
}

long certified_box_radius(const IdealLattice& lat) {
  const int r = lat.spec().r;
  const std::vector<Int>& g = lat.working_gram();
  Int c0 = g[0];
  for (int i = 1; i < r; ++i) c0 = std::min(c0, g[static_cast<size_t>(i) * r + i]);
  Int det_g = det_bareiss(g, r);
  long best = 0;
  for (int i = 0; i < r; ++i) {
    // minor with row/col i removed
    std::vector<Int> minor(static_cast<size_t>(r - 1) * (r - 1));
    int ri = 0;
    for (int a = 0; a < r; ++a) {
      if (a == i) continue;
      int cj = 0;
      for (int b = 0; b < r; ++b) {
        if (b == i) continue;
        minor[static_cast<size_t>(ri) * (r - 1) + cj] = g[static_cast<size_t>(a) * r + b];
        ++cj;
      }
      ++ri;
    }
    Int mi = det_bareiss(std::move(minor), r - 1);
    // |x_i| <= sqrt(c0 * (G^{-1})_{ii}) = sqrt(c0 * minor_ii / det)
    Rat q = Rat(c0 * mi) / Rat(det_g);
    Int bound = floor_plus_sqrt(Rat(0), q);
    if (!bound.fits_slong_p())
      throw Error("BoxTooSmall", "certified box radius does not fit a machine word");
    best = std::max(best, static_cast<long>(bound.get_si()));
  }
  return best;
}

ShortestSet brute_force_shortest(const IdealLattice& lat, long box_radius) {
  const int r = lat.spec().r;
  long needed = certified_box_radius(lat);
  if (box_radius < needed)
    throw Error("BoxTooSmall", "box radius " + std::to_string(box_radius) +
                                   " below certified bound " + std::to_string(needed))
        .with("needed", std::to_string(needed));
  const std::vector<Int>& g = lat.working_gram();

  // fast path: machine integers when the worst-case value cannot overflow
  bool fits = true;
  {
    Int max_abs(0);
    for (const auto& v : g) { Int a = abs(v); if (a > max_abs) max_abs = a; }
    Int bound = max_abs * Int(r) * Int(r) * Int(box_radius) * Int(box_radius);
    if (!bound.fits_slong_p() || bound.get_si() > (1LL << 61)) fits = false;
  }

  std::vector<long> x(static_cast<size_t>(r), 0);
  std::vector<EnumHit> hits;

  if (fits) {
    std::vector<long long> gi(g.size());
    for (size_t i = 0; i < g.size(); ++i) gi[i] = g[i].get_si();
    std::vector<long long> t(static_cast<size_t>(r), 0);  // t_j = sum_i x_i G_ij
    long long best = -1;
    // depth-first over [-R, R]^r, first nonzero coordinate positive
    auto rec = [&](auto&& self, int i, bool lead_zero) -> void {
      if (i == r) {
        long long val = 0;
        for (int j = 0; j < r; ++j) val += x[static_cast<size_t>(j)] * t[static_cast<size_t>(j)];
        if (val == 0 && lead_zero) return;  // the zero vector
        if (best < 0 || val < best) {
          best = val;
          hits.clear();
        }
        if (val == best) {
          EnumHit h;
          h.x = x;
          h.value = Int(val);
          hits.push_back(std::move(h));
        }
        return;
      }
      long lo = lead_zero ? 0 : -box_radius;
      x[static_cast<size_t>(i)] = lo;
      for (int j = 0; j < r; ++j)
        t[static_cast<size_t>(j)] += lo * gi[static_cast<size_t>(i) * r + j];
      for (long v = lo;; ++v) {
        self(self, i + 1, lead_zero && v == 0);
        if (v == box_radius) break;
        for (int j = 0; j < r; ++j)
          t[static_cast<size_t>(j)] += gi[static_cast<size_t>(i) * r + j];
        x[static_cast<size_t>(i)] = v + 1;
      }
      for (int j = 0; j < r; ++j)
        t[static_cast<size_t>(j)] -= x[static_cast<size_t>(i)] * gi[static_cast<size_t>(i) * r + j];
      x[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, true);
  } else {
    Int best(-1);
    auto rec = [&](auto&& self, int i, bool lead_zero) -> void {
      if (i == r) {
        Int val(0);
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b)
            val += Int(x[static_cast<size_t>(a)]) * Int(x[static_cast<size_t>(b)]) *
                   g[static_cast<size_t>(a) * r + b];
        if (lead_zero && val == 0) return;
        if (best < 0 || val < best) {
          best = val;
          hits.clear();
        }
        if (val == best) hits.push_back(EnumHit{x, val});
        return;
      }
      long lo = lead_zero ? 0 : -box_radius;
      for (long v = lo; v <= box_radius; ++v) {
        x[static_cast<size_t>(i)] = v;
        self(self, i + 1, lead_zero && v == 0);
      }
      x[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, true);
  }

  ShortestSet out;
  if (hits.empty()) throw Error("RankDeficient", "box scan found nothing");
  out.min_sq = Rat(hits[0].value) / Rat(lat.scale_den() * lat.scale_den());
  for (const auto& h : hits) out.vectors.push_back(element_from_coords(lat, h.x));
  sort_canonical(out.vectors);
  return out;
}

std::vector<Element> lattice_points_with_norm_sq(const IdealLattice& lat,
                                                 const Rat& value, int workers) {
  workers = resolve_workers(workers);
  if (value <= 0) return {};
  Rat target = value * Rat(lat.scale_den() * lat.scale_den());
  if (target.get_den() != 1) return {};  // integer Gram cannot attain it
  IdealLattice reduced = lll_reduce(lat);
  GramEnumerator en(reduced.working_gram(), lat.spec().r);
  std::vector<EnumHit> hits =
      en.enumerate(target.get_num(), /*track_min=*/false, workers);
  std::vector<Element> out;
  for (const auto& h : hits)
    if (h.value == target.get_num())
      out.push_back(element_from_coords(reduced, h.x));
  sort_canonical(out);
  return out;
}

std::vector<Element> lattice_points_with_norm_sq_upto(const IdealLattice& lat,
                                                      const Rat& bound,
                                                      int workers) {
  workers = resolve_workers(workers);
  if (bound <= 0) return {};
  Rat target = bound * Rat(lat.scale_den() * lat.scale_den());
  Int radius;
  mpz_fdiv_q(radius.get_mpz_t(), target.get_num().get_mpz_t(),
             target.get_den().get_mpz_t());
  if (radius <= 0) return {};
  IdealLattice reduced = lll_reduce(lat);
  GramEnumerator en(reduced.working_gram(), lat.spec().r);
  std::vector<EnumHit> hits = en.enumerate(radius, /*track_min=*/false, workers);
  std::vector<Element> out;
  for (const auto& h : hits)
    out.push_back(element_from_coords(reduced, h.x));
  sort_canonical(out);
  return out;
}

}  // namespace mqlat
