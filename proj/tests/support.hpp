#pragma once

// Random generators and independent reference computations for the tests.
// Nothing here calls into the library's algorithms; the oracles are
// deliberately naive so that they fail differently from the code under test.

#include "crosscap/linalg.hpp"
#include "crosscap/quadform.hpp"
#include "crosscap/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

namespace testing {

using crosscap::Integer;
using crosscap::IntMatrix;
using crosscap::Rational;
using crosscap::RatMatrix;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }

  IntMatrix matrix(long rows, long cols, long bound) {
    IntMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
    return m;
  }

  IntMatrix symmetric(long n, long bound) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(-bound, bound);
    return m;
  }

  // Product of random elementary row operations; determinant is +-1.
  IntMatrix unimodular(long n, int steps = 8, long bound = 2) {
    IntMatrix p = crosscap::identity<Integer>(n);
    for (int s = 0; s < steps; ++s) {
      const long i = uniform(0, n - 1);
      long j = uniform(0, n - 1);
      switch (uniform(0, 2)) {
        case 0:
          if (n > 1) {
            while (j == i) j = uniform(0, n - 1);
            p.row(i) += Integer(uniform(-bound, bound)) * p.row(j);
          }
          break;
        case 1:
          p.row(i).swap(p.row(j));
          break;
        default:
          p.row(i) = -p.row(i);
      }
    }
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

// Cofactor expansion along the first row.
inline Integer laplace_det(const IntMatrix& m) {
  const long n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (long j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (long r = 1; r < n; ++r)
      for (long c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline std::vector<std::vector<long>> subsets(long n, long k) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long start) -> void {
    if (static_cast<long>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (long i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1} where
// D_k is the gcd of all k x k minors. Trailing zeros pad to min(rows, cols).
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  const long r = std::min(a.rows(), a.cols());
  std::vector<Integer> divisors{1};
  for (long k = 1; k <= r; ++k) {
    Integer g = 0;
    for (const auto& rows : subsets(a.rows(), k))
      for (const auto& cols : subsets(a.cols(), k)) {
        IntMatrix sub(k, k);
        for (long i = 0; i < k; ++i)
          for (long j = 0; j < k; ++j) sub(i, j) = a(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        g = crosscap::gcd(g, laplace_det(sub));
      }
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (long k = 1; k <= r; ++k) {
    const Integer& prev = divisors[static_cast<std::size_t>(k - 1)];
    const Integer& cur = divisors[static_cast<std::size_t>(k)];
    out.push_back(prev == 0 ? Integer(0) : Integer(cur / prev));
  }
  return out;
}

// Characteristic polynomial by Faddeev-LeVerrier; coefficient i multiplies x^i.
inline std::vector<Rational> char_poly(const IntMatrix& a) {
  const long n = a.rows();
  const RatMatrix A = a.cast<Rational>();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  RatMatrix m = RatMatrix::Zero(n, n);
  for (long k = 1; k <= n; ++k) {
    m = A * m;
    for (long i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const RatMatrix am = A * m;
    Rational tr = 0;
    for (long i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Rational(k);
  }
  return c;
}

inline int sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0, last = 0;
  for (const auto& x : coeffs) {
    const int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// A real symmetric matrix has only real eigenvalues, so Descartes' rule of
// signs counts positive roots exactly once the root at 0 is divided out.
inline int signature_by_descartes(const IntMatrix& a) {
  std::vector<Rational> c = char_poly(a);
  std::size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  std::vector<Rational> p(c.begin() + static_cast<long>(lo), c.end());
  std::vector<Rational> q = p;
  for (std::size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];
  return sign_changes(p) - sign_changes(q);
}

using Triple = std::tuple<long, long, long>;

// Connected components of the congruence graph restricted to forms of the
// given determinant with entries bounded by `box`. The moves x -> x + y,
// x -> x - y, (x,y) -> (-y,x) and y -> -y generate GL2(Z).
struct CongruenceGraph {
  std::map<Triple, int> component;
  int count = 0;
};

inline CongruenceGraph congruence_components(long det, long box) {
  CongruenceGraph g;
  std::vector<Triple> nodes;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b) {
      if (a == 0) {
        if (-b * b == det)
          for (long c = -box; c <= box; ++c) nodes.emplace_back(a, b, c);
        continue;
      }
      if ((det + b * b) % a != 0) continue;
      const long c = (det + b * b) / a;
      if (c >= -box && c <= box) nodes.emplace_back(a, b, c);
    }
  std::map<Triple, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b, c] : nodes) {
    const std::array<Triple, 4> moves{Triple{a, a + b, a + 2 * b + c}, Triple{a, b - a, a - 2 * b + c}, Triple{c, -b, a},
                                      Triple{a, -b, c}};
    for (const auto& m : moves) {
      auto it = index.find(m);
      if (it != index.end()) parent[find(index[{a, b, c}])] = find(it->second);
    }
  }
  std::map<std::size_t, int> ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto root = find(i);
    if (!ids.count(root)) ids[root] = g.count++;
    g.component[nodes[i]] = ids[root];
  }
  return g;
}

inline Triple triple(const crosscap::BinaryForm& f) {
  return {crosscap::to_int64(f.a), crosscap::to_int64(f.b), crosscap::to_int64(f.c)};
}

// a/n and b/n agree as linking forms on Z/n, up to the overall sign fixed by
// the orientation convention, iff b = +-u^2 a mod n for a unit u.
inline bool linking_forms_isometric(long n, long a, long b) {
  if (n == 1) return true;
  for (long u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    const long t = (u * u % n) * a;
    if (((t - b) % n + n) % n == 0 || ((t + b) % n + n) % n == 0) return true;
  }
  return false;
}

}  // namespace testing
