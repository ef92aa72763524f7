#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace mqlat {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p/q" or "p" (q > 0 after canonicalization). Throws ParseError.
Rat rat_from_string(const std::string& s);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_to_string(const Rat& x);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

/// True iff n is the square of an integer; optionally returns the root (>= 0).
bool is_square(const Int& n, Int* root = nullptr);

/// True iff x is the square of a rational; optionally returns the root (>= 0).
bool rat_is_square(const Rat& x, Rat* root = nullptr);

/// floor((a + sgn*sqrt(n)) / b) computed exactly, for n >= 0, b > 0, sgn = +-1.
Int floor_affine_sqrt(const Int& a, int sgn, const Int& n, const Int& b);

/// Exact floor(c + sqrt(t)) and ceil(c - sqrt(t)) for rational c and t >= 0.
Int floor_plus_sqrt(const Rat& c, const Rat& t);
Int ceil_minus_sqrt(const Rat& c, const Rat& t);

/// Exact determinant of a square integer matrix (row-major), Bareiss elimination.
Int det_bareiss(std::vector<Int> m, int n);

}  // namespace mqlat
