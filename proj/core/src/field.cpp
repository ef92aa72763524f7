#include "mqlat/field.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "mqlat/errors.hpp"

namespace mqlat {

namespace {

std::string subset_str(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

bool is_squarefree(long long d) {
  unsigned long long m = static_cast<unsigned long long>(d < 0 ? -d : d);
  if (m == 0) return false;
  for (unsigned long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

std::vector<Int> subset_products(const std::vector<long long>& d) {
  int n = static_cast<int>(d.size());
  std::vector<Int> prod(1u << n);
  prod[0] = 1;
  for (unsigned mask = 1; mask < prod.size(); ++mask) {
    unsigned low = mask & (mask - 1);
    int i = std::countr_zero(mask);
    prod[mask] = prod[low] * Int(d[static_cast<size_t>(i)]);
  }
  return prod;
}

FieldSpec build_spec(const std::vector<long long>& d) {
  FieldSpec f;
  f.n = static_cast<int>(d.size());
  f.d = d;
  f.r = 1 << f.n;
  f.totally_real = std::all_of(d.begin(), d.end(), [](long long x) { return x > 0; });
  f.subset_product = subset_products(d);
  return f;
}

}  // namespace

FieldSpec validate_field(const std::vector<long long>& d) {
  if (d.empty()) throw Error("Unsupported", "need at least one generator");
  if (d.size() > 6)
    throw Error("Unsupported", "at most 6 generators supported, got " +
                                   std::to_string(d.size()));
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0 || d[i] == 1)
      throw Error("NotSquarefree", "d_" + std::to_string(i + 1) +
                                       " = " + std::to_string(d[i]) +
                                       " must be squarefree and not 0 or 1")
          .with("index", std::to_string(i + 1));
    if (!is_squarefree(d[i]))
      throw Error("NotSquarefree", "d_" + std::to_string(i + 1) + " = " +
                                       std::to_string(d[i]) +
                                       " is not squarefree")
          .with("index", std::to_string(i + 1));
  }
  FieldSpec f = build_spec(d);
  for (unsigned mask = 1; mask < static_cast<unsigned>(f.r); ++mask) {
    if (is_square(f.subset_product[mask]))
      throw Error("DegenerateDegree",
                  "subset " + subset_str(mask) + " product " +
                      f.subset_product[mask].get_str() + " is square")
          .with("subset", subset_str(mask));
  }
  return f;
}

FieldPtr make_field(const std::vector<long long>& d) {
  return std::make_shared<const FieldSpec>(validate_field(d));
}

FieldPtr make_formal_field(const std::vector<long long>& d) {
  if (d.empty() || d.size() > 6)
    throw Error("Unsupported", "need 1..6 generators");
  return std::make_shared<const FieldSpec>(build_spec(d));
}

int mask_weight(unsigned mask) { return std::popcount(mask); }

std::vector<unsigned> paper_ordered_masks(int n) {
  // Numeric mask order does not match lexicographic tuple order within a
  // weight class (n=4: {2,3} -> 6 but {1,4} -> 9), so enumerate explicitly.
  std::vector<unsigned> out;
  out.reserve(1u << n);
  for (int w = 0; w <= n; ++w) {
    long count = 1;
    for (int i = 0; i < w; ++i) count = count * (n - i) / (i + 1);
    for (long j = 1; j <= count; ++j) out.push_back(mask_for_combination(n, w, j));
  }
  return out;
}

unsigned mask_for_combination(int n, int weight, long j) {
  if (weight == 0) {
    if (j != 1) throw Error("IndexOutOfRange", "combination index");
    return 0;
  }
  // walk lexicographic ascending tuples
  std::vector<int> c(static_cast<size_t>(weight));
  for (int i = 0; i < weight; ++i) c[static_cast<size_t>(i)] = i + 1;
  for (long step = 1; step < j; ++step) {
    int i = weight - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - (weight - 1 - i)) --i;
    if (i < 0) throw Error("IndexOutOfRange", "combination index too large");
    ++c[static_cast<size_t>(i)];
    for (int t = i + 1; t < weight; ++t)
      c[static_cast<size_t>(t)] = c[static_cast<size_t>(t - 1)] + 1;
  }
  unsigned mask = 0;
  for (int v : c) mask |= 1u << (v - 1);
  return mask;
}

std::pair<int, long> combination_index(int n, unsigned mask) {
  int w = mask_weight(mask);
  long count = 1;
  for (int i = 0; i < w; ++i) count = count * (n - i) / (i + 1);
  for (long j = 1; j <= count; ++j)
    if (mask_for_combination(n, w, j) == mask) return {w, j};
  throw Error("IndexOutOfRange", "mask outside field");
}

}  // namespace mqlat
