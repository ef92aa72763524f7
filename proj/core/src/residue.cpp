#include "mqlat/residue.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mqlat/errors.hpp"

namespace mqlat {

namespace {

constexpr long kQuotientCap = 100000;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Int> a;
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

Mat identity(int n) {
  Mat m{n, n, std::vector<Int>(static_cast<size_t>(n) * n, Int(0))};
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

// Smith-style diagonalization of a square integer matrix.  Row operations are
// tracked in u and u_inv (u * M * V = D for some untracked unimodular V).
void smith_diagonalize(Mat& m, Mat& u, Mat& u_inv, std::vector<Int>& diag) {
  const int n = m.rows;
  u = identity(n);
  u_inv = identity(n);
  auto row_sub = [&](int i, int t, const Int& q) {
    // row_i -= q row_t; inverse transform gains column op col_t += q col_i
    for (int j = 0; j < n; ++j) m.at(i, j) -= q * m.at(t, j);
    for (int j = 0; j < n; ++j) u.at(i, j) -= q * u.at(t, j);
    for (int j = 0; j < n; ++j) u_inv.at(j, t) += q * u_inv.at(j, i);
  };
  auto row_swap = [&](int i, int t) {
    for (int j = 0; j < n; ++j) std::swap(m.at(i, j), m.at(t, j));
    for (int j = 0; j < n; ++j) std::swap(u.at(i, j), u.at(t, j));
    for (int j = 0; j < n; ++j) std::swap(u_inv.at(j, i), u_inv.at(j, t));
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = -m.at(i, j);
    for (int j = 0; j < n; ++j) u.at(i, j) = -u.at(i, j);
    for (int j = 0; j < n; ++j) u_inv.at(j, i) = -u_inv.at(j, i);
  };
  auto col_sub = [&](int j, int t, const Int& q) {
    for (int i = 0; i < n; ++i) m.at(i, j) -= q * m.at(i, t);
  };
  auto col_swap = [&](int j, int t) {
    for (int i = 0; i < n; ++i) std::swap(m.at(i, j), m.at(i, t));
  };

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // pick the smallest nonzero entry in the trailing block as pivot
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          if (m.at(i, j) == 0) continue;
          if (pi < 0 ||
              mpz_cmpabs(m.at(i, j).get_mpz_t(), m.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) throw Error("RankDeficient", "singular multiplication matrix");
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        row_sub(i, t, q);
        if (m.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        col_sub(j, t, q);
        if (m.at(t, j) != 0) clean = false;
      }
      if (clean) {
        bool zeroed = true;
        for (int i = t + 1; i < n && zeroed; ++i)
          if (m.at(i, t) != 0) zeroed = false;
        for (int j = t + 1; j < n && zeroed; ++j)
          if (m.at(t, j) != 0) zeroed = false;
        if (zeroed) break;
      }
    }
    if (m.at(t, t) < 0) row_neg(t);
  }
  diag.resize(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) diag[static_cast<size_t>(t)] = m.at(t, t);
}

std::vector<Int> integer_mult_matrix(const Element& x) {
  std::vector<Rat> m = x.multiplication_matrix();
  std::vector<Int> out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].get_den() != 1)
      throw Error("NotIntegral", "element is outside the canonical order");
    out[i] = m[i].get_num();
  }
  return out;
}

}  // namespace

std::optional<std::vector<Int>> solve_integer_column_system(
    const std::vector<Int>& a, int rows, int cols, const std::vector<Int>& b) {
  // column HNF with transform: A V = H, pivots strictly ordered by row; then
  // forward substitution (exact divisions) recovers h with H h = b, u = V h
  Mat m{rows, cols, a};
  Mat v = identity(cols);
  auto col_sub = [&](int j, int t, const Int& q) {
    for (int i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
    for (int i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, t);
  };
  auto col_swap = [&](int j, int t) {
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, j), m.at(i, t));
    for (int i = 0; i < cols; ++i) std::swap(v.at(i, j), v.at(i, t));
  };
  auto col_neg = [&](int j) {
    for (int i = 0; i < rows; ++i) m.at(i, j) = -m.at(i, j);
    for (int i = 0; i < cols; ++i) v.at(i, j) = -v.at(i, j);
  };
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  int lead = 0;
  for (int row = 0; row < rows && lead < cols; ++row) {
    for (;;) {
      int piv = -1;
      for (int j = lead; j < cols; ++j) {
        if (m.at(row, j) == 0) continue;
        if (piv < 0 ||
            mpz_cmpabs(m.at(row, j).get_mpz_t(), m.at(row, piv).get_mpz_t()) < 0)
          piv = j;
      }
      if (piv < 0) break;  // row is zero from lead on
      if (piv != lead) col_swap(piv, lead);
      bool done = true;
      for (int j = lead + 1; j < cols; ++j) {
        if (m.at(row, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(row, j).get_mpz_t(), m.at(row, lead).get_mpz_t());
        col_sub(j, lead, q);
        if (m.at(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (lead < cols && m.at(row, lead) != 0) {
      if (m.at(row, lead) < 0) col_neg(lead);
      pivots.emplace_back(row, lead);
      ++lead;
    }
  }
  std::vector<Int> h(static_cast<size_t>(cols), Int(0));
  std::vector<Int> rem = b;
  for (auto [prow, pcol] : pivots) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[static_cast<size_t>(prow)].get_mpz_t(),
                m.at(prow, pcol).get_mpz_t());
    if (r != 0) return std::nullopt;
    h[static_cast<size_t>(pcol)] = q;
    if (q != 0)
      for (int i = 0; i < rows; ++i) rem[static_cast<size_t>(i)] -= q * m.at(i, pcol);
  }
  for (int i = 0; i < rows; ++i)
    if (rem[static_cast<size_t>(i)] != 0) return std::nullopt;
  std::vector<Int> u(static_cast<size_t>(cols), Int(0));
  for (int i = 0; i < cols; ++i) {
    Int acc(0);
    for (int j = 0; j < cols; ++j)
      if (h[static_cast<size_t>(j)] != 0) acc += v.at(i, j) * h[static_cast<size_t>(j)];
    u[static_cast<size_t>(i)] = acc;
  }
  return u;
}

ResidueSystem residue_units(FieldPtr f, const Element& s) {
  if (s.is_zero()) throw Error("ZeroDivisor", "modulus must be nonzero");
  const int r = f->r;
  std::vector<Int> ms = integer_mult_matrix(s);
  Rat nm = s.norm();
  Int abs_nm = abs(nm.get_num());
  if (abs_nm > kQuotientCap)
    throw Error("QuotientTooLarge", "|Nm(s)| = " + abs_nm.get_str() +
                                        " exceeds the desk-scale cap");

  ResidueSystem rs(f, s);
  Mat m{r, r, ms};
  Mat u, u_inv;
  smith_diagonalize(m, u, u_inv, rs.diag_);
  rs.u_ = u.a;
  rs.u_inv_ = u_inv.a;
  rs.size_ = 1;
  for (const auto& d : rs.diag_) rs.size_ *= d;

  if (rs.size_ == 1) {
    // trivial quotient: single residue 0, no units listed
    rs.residues_.push_back(Element::zero(f));
    return rs;
  }

  // enumerate z in prod [0, diag_t); representative y = U^{-1} z
  std::vector<Int> z(static_cast<size_t>(r), Int(0));
  std::vector<Int> e0(static_cast<size_t>(r), Int(0));
  e0[0] = 1;
  for (;;) {
    std::vector<Rat> coeffs(static_cast<size_t>(r), Rat(0));
    for (int i = 0; i < r; ++i) {
      Int acc(0);
      for (int j = 0; j < r; ++j)
        acc += u_inv.at(i, j) * z[static_cast<size_t>(j)];
      coeffs[static_cast<size_t>(i)] = Rat(acc);
    }
    Element rep(f, std::move(coeffs));
    rs.residues_.push_back(rep);

    // unit test + inverse: solve M_x y + M_s t = e_0
    std::vector<Int> mx = integer_mult_matrix(rep);
    std::vector<Int> aug(static_cast<size_t>(r) * (2 * r));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        aug[static_cast<size_t>(i) * (2 * r) + j] = mx[static_cast<size_t>(i) * r + j];
        aug[static_cast<size_t>(i) * (2 * r) + r + j] = ms[static_cast<size_t>(i) * r + j];
      }
    }
    if (auto sol = solve_integer_column_system(aug, r, 2 * r, e0)) {
      std::vector<Rat> yc(static_cast<size_t>(r), Rat(0));
      for (int i = 0; i < r; ++i) yc[static_cast<size_t>(i)] = Rat((*sol)[static_cast<size_t>(i)]);
      rs.units_.push_back(rep);
      rs.unit_inverses_.push_back(Element(f, std::move(yc)));
    }

    int carry = 0;
    for (; carry < r; ++carry) {
      z[static_cast<size_t>(carry)] += 1;
      if (z[static_cast<size_t>(carry)] < rs.diag_[static_cast<size_t>(carry)]) break;
      z[static_cast<size_t>(carry)] = 0;
    }
    if (carry == r) break;
  }
  return rs;
}

Element ResidueSystem::canonical_rep(const Element& x) const {
  const int r = field_->r;
  std::vector<Int> w(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    const Rat& c = x.coeff(static_cast<unsigned>(i));
    if (c.get_den() != 1)
      throw Error("NotIntegral", "element is outside the canonical order");
    w[static_cast<size_t>(i)] = c.get_num();
  }
  // z = (U w) mod diag, then back through U^{-1}
  std::vector<Int> z(static_cast<size_t>(r), Int(0));
  for (int i = 0; i < r; ++i) {
    Int acc(0);
    for (int j = 0; j < r; ++j)
      acc += u_[static_cast<size_t>(i) * r + j] * w[static_cast<size_t>(j)];
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), diag_[static_cast<size_t>(i)].get_mpz_t());
    z[static_cast<size_t>(i)] = acc;
  }
  std::vector<Rat> coeffs(static_cast<size_t>(r), Rat(0));
  for (int i = 0; i < r; ++i) {
    Int acc(0);
    for (int j = 0; j < r; ++j)
      acc += u_inv_[static_cast<size_t>(i) * r + j] * z[static_cast<size_t>(j)];
    coeffs[static_cast<size_t>(i)] = Rat(acc);
  }
  return Element(field_, std::move(coeffs));
}

}  // namespace mqlat
