#include <cmath>
#include <numbers>
#include <set>

#include "hecke/epstein.hpp"
#include "hecke/error.hpp"
#include "hecke/sl2.hpp"

namespace hecke::sl2 {

namespace {

struct Form {
  BigInt A, B, C;
};

BigInt floor_div(const BigInt& x, const BigInt& y) {
  BigInt q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

// Proper reduction of a positive definite form: |B| <= A <= C, B >= 0 when
// |B| = A or A = C.
Form reduce(Form f) {
  for (;;) {
    if (f.B > f.A || f.B <= -f.A) {
      BigInt k = floor_div(f.A - f.B, 2 * f.A);
      f.C = f.A * k * k + f.B * k + f.C;
      f.B = f.B + 2 * f.A * k;
    } else if (f.A > f.C) {
      f = {f.C, -f.B, f.A};
    } else {
      break;
    }
  }
  if (f.A == f.C && f.B < 0) f.B = -f.B;
  return f;
}

long long to_ll(const BigInt& x) { return x.convert_to<long long>(); }

}  // namespace

IntegerMatrix elliptic_canonical(const IntegerMatrix& m) {
  if (classify_element(m).kind != ClassKind::elliptic)
    throw ValidationError("elliptic_canonical called on non-elliptic " + m.str());
  const int sgn = m.c > 0 ? 1 : -1;
  Form f = reduce({sgn * m.c, sgn * (m.d - m.a), -sgn * m.b});
  const BigInt t = m.trace();
  return {(t - sgn * f.B) / 2, -sgn * f.C, sgn * f.A, (t + sgn * f.B) / 2};
}

int centralizer_order(const IntegerMatrix& m) {
  int count = 0;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d) {
          if (a * d - b * c != 1) continue;
          IntegerMatrix g{a, b, c, d};
          if (g * m == m * g) ++count;
        }
  return count;
}

namespace {

std::set<IntegerMatrix> elliptic_reps(long long n, long long bound) {
  std::set<IntegerMatrix> reps;
  for (long long a = -bound; a <= bound; ++a)
    for (long long d = -bound; d <= bound; ++d) {
      if ((a + d) * (a + d) >= 4 * n) continue;
      long long p = a * d - n;  // = bc < 0
      for (long long b = -bound; b <= bound; ++b) {
        if (b == 0 || p % b != 0) continue;
        long long c = p / b;
        if (c < -bound || c > bound) continue;
        reps.insert(elliptic_canonical({a, b, c, d}));
      }
    }
  return reps;
}

std::vector<EllipticConjugacyClass> to_classes(const std::set<IntegerMatrix>& reps) {
  std::vector<EllipticConjugacyClass> out;
  for (const auto& r : reps) out.push_back({r, to_ll(r.trace()), centralizer_order(r)});
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.trace < y.trace; });
  return out;
}

}  // namespace

std::vector<EllipticConjugacyClass> elliptic_classes(long long n, long long bound) {
  if (n < 1) throw ValidationError("elliptic_classes requires n >= 1");
  if (bound <= 0) bound = n + 2;
  auto reps = elliptic_reps(n, bound);
  if (reps != elliptic_reps(n, 2 * bound))
    throw StabilizationError("elliptic class count did not stabilize at bound " +
                             std::to_string(bound) + "; increase bound");
  return to_classes(reps);
}

std::vector<EllipticTraceSummary> summarize_by_trace(const std::vector<EllipticConjugacyClass>& cls) {
  std::vector<EllipticTraceSummary> out;
  for (const auto& c : cls) {
    if (out.empty() || out.back().trace != c.trace) out.push_back({c.trace, 0, {}});
    out.back().class_count++;
    out.back().centralizer_orders.push_back(c.centralizer_order);
  }
  return out;
}

TorusElement elliptic_torus(const IntegerMatrix& m) {
  auto tag = classify_element(m);
  if (tag.kind != ClassKind::elliptic) throw ValidationError("elliptic_torus needs an elliptic matrix");
  const long long t = to_ll(tag.trace), n = to_ll(m.det());
  const int sgn = m.c > 0 ? 1 : -1;

  // cos(theta) = t / (2 sqrt n); rational angles for the square-root-free cases.
  Rational r(t * t, 4 * n);
  std::optional<Rational> turns;
  if (r.numerator() == 0) turns = Rational(1, 4);
  else if (r == Rational(1, 4)) turns = t > 0 ? Rational(1, 6) : Rational(1, 3);
  else if (r == Rational(1, 2)) turns = t > 0 ? Rational(1, 8) : Rational(3, 8);
  else if (r == Rational(3, 4)) turns = t > 0 ? Rational(1, 12) : Rational(5, 12);
  if (turns) {
    Rational q = *turns * sgn;
    return TorusElement::from_exact({q, -q});
  }
  double q = sgn * std::acos(t / (2.0 * std::sqrt(double(n)))) / (2.0 * std::numbers::pi);
  return TorusElement::from_angles({q, -q});
}

GeometryAccumulator::GeometryAccumulator(long long n) : n_(n) {
  if (n < 1) throw ValidationError("GeometryAccumulator requires n >= 1");
}

void GeometryAccumulator::add(const IntegerMatrix& m) {
  if (m.det() != n_)
    throw ValidationError("matrix " + m.str() + " does not have determinant " + std::to_string(n_));
  auto tag = classify_element(m);
  counts_[tag.kind]++;
  const int s = tag.trace > 0 ? 1 : -1;
  switch (tag.kind) {
    case ClassKind::central:
      if (std::find(central_signs_.begin(), central_signs_.end(), s) == central_signs_.end())
        central_signs_.push_back(s);
      break;
    case ClassKind::parabolic_nss:
      if (std::find(unipotent_signs_.begin(), unipotent_signs_.end(), s) == unipotent_signs_.end())
        unipotent_signs_.push_back(s);
      break;
    case ClassKind::elliptic: {
      auto rep = elliptic_canonical(m);
      if (!elliptic_.count(rep)) elliptic_[rep] = centralizer_order(rep);
      break;
    }
    case ClassKind::hyperbolic:
    case ClassKind::parabolic_ss:
      break;
  }
}

long long GeometryAccumulator::discarded_hyperbolic() const {
  auto it = counts_.find(ClassKind::hyperbolic);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<EllipticConjugacyClass> GeometryAccumulator::elliptic() const {
  std::set<IntegerMatrix> reps;
  for (const auto& [r, _] : elliptic_) reps.insert(r);
  return to_classes(reps);
}

namespace {

TorusElement sign_torus(int s) {
  if (s > 0) return TorusElement::identity(2);
  return TorusElement::from_exact({Rational(1, 2), Rational(-1, 2)});
}

}  // namespace

GeometricData GeometryAccumulator::finish() const {
  GeometricData g;
  g.total_vol = std::numbers::pi / 3.0;
  g.calibration = 1.0;

  auto signs = central_signs_;
  std::sort(signs.rbegin(), signs.rend());
  for (int s : signs) g.central_classes.push_back({sign_torus(s), {}});

  for (const auto& c : elliptic())
    g.elliptic_classes.push_back({elliptic_torus(c.rep), 1.0 / c.centralizer_order, 1.0});

  // Unipotent classes: the cusp zeta function runs over the translations
  // by m >= 1 on either side, each with the mass of M = {+-1}.
  EpsteinSpec spec;
  spec.lattice_vol = 1.0;
  spec.exponent_base = 1;
  spec.progressions.push_back({0.5, 1.0, 1.0});
  auto plus = zeta_constant_terms(spec);
  spec.sign = EpsteinSign::minus;
  auto minus = zeta_constant_terms(spec);

  auto usigns = unipotent_signs_;
  std::sort(usigns.rbegin(), usigns.rend());
  for (int s : usigns) {
    ParabolicIEntry p;
    p.delta_flag = true;
    p.c_eta_plus = -1.0;
    p.c_eta_minus = 1.0;
    p.C_eta_plus = plus.constant_term;
    p.C_eta_minus = minus.constant_term;
    p.dim_n_eta1 = 0;
    p.eta_torus = sign_torus(s);
    p.Z0_pairing = {{0.0, 0.0}, {0.0, 0.0}};
    g.parabolic_I.push_back(p);
  }

  // Split semisimple parts diag(a, d) / sqrt(n), ad = n, of both signs.
  for (long long a = 1; a <= n_; ++a) {
    if (n_ % a != 0) continue;
    const long long d = n_ / a;
    for (int s : {1, -1}) {
      ParabolicIIEntry p;
      p.vol_M = 0.5;
      p.det_Ad_n = double(a) / double(d);
      p.coset_index = a;
      p.eta_H.compact_part = sign_torus(s);
      p.eta_H.log_a = a == d ? 0.0 : 0.5 * std::log(double(a) / double(d));
      p.eta_H.chamber = a == d ? Chamber::boundary : (a > d ? Chamber::plus : Chamber::minus);
      g.parabolic_II.push_back(p);
    }
  }
  return g;
}

}  // namespace hecke::sl2
