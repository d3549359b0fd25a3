#include "crosscap/quadform.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <set>

namespace crosscap {
namespace {

constexpr int kMaxReductionSteps = 1'000'000;

Transform2 make_transform(long p, long q, long r, long s) {
  Transform2 t;
  t << Integer(p), Integer(q), Integer(r), Integer(s);
  return t;
}

Transform2 identity2() { return make_transform(1, 0, 0, 1); }

Transform2 inverse2(const Transform2& p) {
  const Integer d = p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0);
  Transform2 inv;
  inv << p(1, 1), -p(0, 1), -p(1, 0), p(0, 0);
  return inv * d;  // d = +-1 is its own inverse
}

void require_supported(const BinaryForm& f) {
  const Integer d = f.det();
  if (d == 0) throw Error(ErrorCode::ZeroDeterminant, "form " + to_string(f) + " is degenerate");
  if (d < 0 && is_square(f.disc()))
    throw Error(ErrorCode::SquareDiscriminant, "indefinite form " + to_string(f) + " has square discriminant");
}

Reduction reduce_positive(const BinaryForm& f) {
  BinaryForm g = f;
  Transform2 p = identity2();
  for (int step = 0;; ++step) {
    if (step > kMaxReductionSteps) throw Error(ErrorCode::InvariantViolation, "definite reduction did not terminate");
    // Translate so that -a < 2b <= a.
    Integer t = floor_div(2 * g.b + g.a, 2 * g.a);
    if (2 * (g.b - t * g.a) == -g.a) t -= 1;
    if (t != 0) {
      Transform2 m = identity2();
      m(0, 1) = -t;
      g = transform(g, m);
      p = p * m;
    }
    if (g.a > g.c) {
      const Transform2 m = make_transform(0, 1, 1, 0);
      g = transform(g, m);
      p = p * m;
      continue;
    }
    break;
  }
  if (g.b < 0) {
    const Transform2 m = make_transform(1, 0, 0, -1);
    g = transform(g, m);
    p = p * m;
  }
  return {g, p};
}

// One step of the classical reduction operator on indefinite forms.
Reduction rho(const BinaryForm& f) {
  const Integer d = f.disc();
  const Integer r = isqrt(d);
  const Integer ac = abs_value(f.c);
  Integer bp;
  // |c| > 2 sqrt(d): the classical |C| > sqrt(disc) with B = 2b.
  if (ac * ac > 4 * d) {
    // b' = -b mod c, with -|c| < 2b' <= |c|
    bp = mod_floor(-f.b, ac);
    if (2 * bp > ac) bp -= ac;
  } else {
    // b' = -b mod c, with r+1-|c| <= b' <= r
    const Integer lo = r + 1 - ac;
    bp = lo + mod_floor(-f.b - lo, ac);
  }
  const Integer s = (bp + f.b) / f.c;
  Transform2 m;
  m << Integer(0), Integer(-1), Integer(1), s;
  return {transform(f, m), m};
}

Reduction to_reduced_indefinite(const BinaryForm& f) {
  Reduction cur{f, identity2()};
  for (int step = 0; !is_indefinite_reduced(cur.form); ++step) {
    if (step > kMaxReductionSteps) throw Error(ErrorCode::InvariantViolation, "indefinite reduction did not terminate");
    const Reduction next = rho(cur.form);
    cur.form = next.form;
    cur.P = cur.P * next.P;
  }
  return cur;
}

Reduction reduce_indefinite(const BinaryForm& f) {
  const Transform2 flip = make_transform(1, 0, 0, -1);
  std::optional<Reduction> best;
  for (const Transform2& start : {identity2(), flip}) {
    const Reduction r0 = to_reduced_indefinite(transform(f, start));
    for (const Reduction& member : indefinite_cycle(r0.form)) {
      if (!best || member.form < best->form) best = Reduction{member.form, Transform2(start * r0.P * member.P)};
    }
  }
  return *best;
}

}  // namespace

BinaryForm BinaryForm::from_matrix(const SymIntMatrix& m) {
  if (m.dim() != 2) throw Error(ErrorCode::InvalidInput, "binary form needs a 2x2 matrix");
  return {m(0, 0), m(0, 1), m(1, 1)};
}

SymIntMatrix BinaryForm::matrix() const {
  IntMatrix m(2, 2);
  m << a, b, b, c;
  return SymIntMatrix(std::move(m));
}

std::string to_string(const BinaryForm& f) {
  return "(" + f.a.str() + "," + f.b.str() + "," + f.c.str() + ")";
}

BinaryForm transform(const BinaryForm& f, const Transform2& p) {
  const Integer &r = p(0, 0), &u = p(0, 1), &s = p(1, 0), &v = p(1, 1);
  return {f.value(r, s), f.bilinear(r, s, u, v), f.value(u, v)};
}

bool is_indefinite_reduced(const BinaryForm& f) {
  const Integer d = f.disc();
  if (d <= 0) return false;
  const Integer r = isqrt(d);
  const Integer aa = abs_value(f.a);
  return f.b > 0 && f.b <= r && aa + f.b >= r + 1 && aa - f.b <= r;
}

std::vector<Reduction> indefinite_cycle(const BinaryForm& reduced) {
  if (!is_indefinite_reduced(reduced))
    throw Error(ErrorCode::InvalidInput, "form " + to_string(reduced) + " is not a reduced indefinite form");
  std::vector<Reduction> cycle{{reduced, identity2()}};
  for (int step = 0;; ++step) {
    if (step > kMaxReductionSteps) throw Error(ErrorCode::InvariantViolation, "reduction cycle did not close");
    const Reduction next = rho(cycle.back().form);
    if (next.form == reduced) break;
    cycle.push_back({next.form, Transform2(cycle.back().P * next.P)});
  }
  return cycle;
}

Reduction reduce_with_transform(const BinaryForm& f) {
  require_supported(f);
  if (f.positive_definite()) return reduce_positive(f);
  if (f.negative_definite()) {
    Reduction r = reduce_positive(-f);
    r.form = -r.form;
    return r;
  }
  return reduce_indefinite(f);
}

FormClassSet enumerate_classes(const Integer& det, DefiniteSigns signs) {
  if (det == 0) throw Error(ErrorCode::ZeroDeterminant, "determinant must be nonzero");
  std::set<BinaryForm> reps;
  if (det > 0) {
    for (Integer a = 1; 3 * a * a <= 4 * det; ++a) {
      for (Integer b = 0; 2 * b <= a; ++b) {
        const Integer num = det + b * b;
        if (num % a != 0) continue;
        const Integer c = num / a;
        if (c < a) continue;
        reps.insert(BinaryForm{a, b, c});
        if (signs == DefiniteSigns::Both) reps.insert(BinaryForm{-a, -b, -c});
      }
    }
  } else {
    const Integer d = -det;
    if (is_square(d)) throw Error(ErrorCode::SquareDiscriminant, "determinant " + det.str() + " has square discriminant");
    const Integer r = isqrt(d);
    for (Integer b = 1; b <= r; ++b) {
      const Integer num = b * b - d;
      for (Integer m = r + 1 - b; m <= r + b; ++m) {
        if (m <= 0 || num % m != 0) continue;
        for (const Integer& a : {m, Integer(-m)}) {
          const BinaryForm f{a, b, num / a};
          if (is_indefinite_reduced(f)) reps.insert(reduce(f));
        }
      }
    }
  }
  return {det, std::vector<BinaryForm>(reps.begin(), reps.end())};
}

std::optional<Transform2> congruent(const BinaryForm& f, const BinaryForm& g) {
  if (f == g) return identity2();
  if (f.det() != g.det()) return std::nullopt;
  const Reduction rf = reduce_with_transform(f);
  const Reduction rg = reduce_with_transform(g);
  if (!(rf.form == rg.form)) return std::nullopt;
  return Transform2(rf.P * inverse2(rg.P));
}

RepresentResult represent(const BinaryForm& f, const Integer& n, long bound) {
  RepresentResult out;
  std::set<Point2> found;
  const Integer det = f.det();

  if (det > 0) {
    // a*q(x,y) = (a x + b y)^2 + det*y^2, so |y| is bounded when a*n >= 0.
    const Integer an = f.a * n;
    if (an < 0) return out;
    const Integer ymax = isqrt(an / det);
    for (Integer y = -ymax; y <= ymax; ++y) {
      Integer root;
      if (!is_square(an - det * y * y, &root)) continue;
      for (const Integer& t : {root, Integer(-root)}) {
        const Integer num = t - f.b * y;
        if (num % f.a == 0) found.insert({num / f.a, y});
      }
    }
  } else if (f.a != 0) {
    // (a x + b y)^2 - D y^2 = a n with D = b^2 - ac.
    out.complete = false;
    const Integer d = f.disc();
    const Integer an = f.a * n;
    const Integer bnd(bound);
    for (Integer y = -bnd; y <= bnd; ++y) {
      Integer root;
      if (!is_square(d * y * y + an, &root)) continue;
      for (const Integer& t : {root, Integer(-root)}) {
        const Integer num = t - f.b * y;
        if (num % f.a != 0) continue;
        const Integer x = num / f.a;
        if (abs_value(x) <= bnd) found.insert({x, y});
      }
    }
  } else {
    out.complete = false;
    const Integer bnd(bound);
    for (Integer x = -bnd; x <= bnd; ++x)
      for (Integer y = -bnd; y <= bnd; ++y)
        if (f.value(x, y) == n) found.insert({x, y});
  }
  out.solutions.assign(found.begin(), found.end());
  return out;
}

std::optional<long> local_obstruction(const BinaryForm& f, const Integer& n, long max_modulus) {
  for (long m = 2; m <= max_modulus; ++m) {
    const Integer mm(m);
    const long a = to_int64(mod_floor(f.a, mm));
    const long b2 = to_int64(mod_floor(2 * f.b, mm));
    const long c = to_int64(mod_floor(f.c, mm));
    const long target = to_int64(mod_floor(n, mm));
    bool solvable = false;
    for (long x = 0; x < m && !solvable; ++x)
      for (long y = 0; y < m; ++y)
        if ((a * x * x + b2 * x * y + c * y * y) % m == target) {
          solvable = true;
          break;
        }
    if (!solvable) return m;
  }
  return std::nullopt;
}

}  // namespace crosscap
