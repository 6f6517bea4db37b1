#include "hecke/chars.hpp"

#include <cmath>
#include <numbers>

#include "hecke/error.hpp"

namespace hecke {

namespace {

constexpr double kOneTol = 1e-9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_phase(double turns) { return std::polar(1.0, kTwoPi * turns); }

double dot_double(const Weight& mu, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) s += to_double(mu.coords[i]) * q[i];
  return s;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

HCParameter HCParameter::from_mu(const RootSystem& rs, const Weight& mu) {
  auto cls = classify_weight(rs, mu);
  return {mu + rs.rho_k(), cls.regular, cls.witness};
}

HCParameter HCParameter::from_lambda(const RootSystem& rs, const Weight& lambda) {
  return from_mu(rs, lambda - rs.rho_k());
}

TorusElement TorusElement::from_exact(std::vector<Rational> q) {
  TorusElement t;
  for (const auto& x : q) t.angles.push_back(to_double(x));
  t.exact = std::move(q);
  return t;
}

TorusElement TorusElement::from_angles(std::vector<double> q) {
  TorusElement t;
  t.angles = std::move(q);
  return t;
}

TorusElement TorusElement::identity(std::size_t dim) {
  return from_exact(std::vector<Rational>(dim));
}

void validate_torus(const RootSystem& rs, const TorusElement& t) {
  if (t.dim() != rs.dim())
    throw ValidationError("torus element has " + std::to_string(t.dim()) + " angles, expected " +
                          std::to_string(rs.dim()));
  if (rs.descriptor().family != Family::su) return;
  if (t.exact) {
    Rational s(0);
    for (const auto& x : *t.exact) s += x;
    if (s.numerator() != 0) throw ValidationError("su(n,1) torus angles must sum to zero");
  } else {
    double s = 0.0;
    for (double x : t.angles) s += x;
    if (std::abs(s) > kOneTol) throw ValidationError("su(n,1) torus angles must sum to zero");
  }
}

Complex torus_exp(const Weight& mu, const TorusElement& t) {
  if (mu.dim() != t.dim()) throw ValidationError("dimension mismatch in torus evaluation");
  if (t.exact) return unit_phase(to_double(frac(dot(mu.coords, *t.exact))));
  return unit_phase(dot_double(mu, t.angles));
}

bool torus_exp_is_one(const Weight& mu, const TorusElement& t) {
  if (t.exact) return frac(dot(mu.coords, *t.exact)).numerator() == 0;
  return std::abs(torus_exp(mu, t) - 1.0) < kOneTol;
}

Complex weyl_denominator_T(const RootSystem& rs, const TorusElement& t) {
  validate_torus(rs, t);
  Complex d = 1.0;
  for (const auto& r : rs.positive_roots()) {
    Complex h = torus_exp(r.coords.scaled(Rational(1, 2)), t);
    d *= h - 1.0 / h;
  }
  return d;
}

CharacterValue ds_character_Treg(const RootSystem& rs, const HCParameter& lam,
                                 const TorusElement& t) {
  validate_torus(rs, t);
  if (!centralizer_roots(rs, t).empty())
    throw SingularError("singular torus element; use elliptic_orbital_term");
  Complex num = 0.0;
  for (const auto& w : weyl_group(rs, WeylSubgroup::compact))
    num += static_cast<double>(w.sign) * torus_exp(w.apply(lam.lambda), t);
  return {num / weyl_denominator_T(rs, t), true};
}

std::vector<Root> centralizer_roots(const RootSystem& rs, const TorusElement& xi) {
  std::vector<Root> out;
  for (const auto& r : rs.positive_roots())
    if (torus_exp_is_one(r.coords, xi)) out.push_back(r);
  return out;
}

Complex elliptic_orbital_term(const RootSystem& rs, const HCParameter& lam,
                              const TorusElement& xi) {
  validate_torus(rs, xi);
  auto rxi = centralizer_roots(rs, xi);

  std::vector<Weight> compact_gens;
  for (const auto& r : rxi)
    if (r.compact()) compact_gens.push_back(r.coords);
  const double wkxi = static_cast<double>(reflection_closure(rs.dim(), compact_gens).size());

  Complex num = 0.0;
  for (const auto& w : weyl_group(rs, WeylSubgroup::compact)) {
    Weight wl = w.apply(lam.lambda);
    double prod = 1.0;
    for (const auto& r : rxi) prod *= to_double(inner(rs, wl, r.coords));
    num += static_cast<double>(w.sign) * prod * torus_exp(wl, xi);
  }
  num /= wkxi;

  Complex den = torus_exp(rs.rho_g(), xi);
  for (const auto& r : rs.positive_roots()) {
    if (torus_exp_is_one(r.coords, xi)) continue;
    den *= 1.0 - torus_exp(-r.coords, xi);
  }
  const double sign = (rs.dim_p() / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * num / den;
}

double formal_degree(const RootSystem& rs, const HCParameter& lam) {
  if (!lam.regular) throw ValidationError("formal degree requires a regular parameter");
  double num = 1.0, den = 1.0;
  for (const auto& r : rs.positive_roots()) num *= to_double(inner(rs, lam.lambda, r.coords));
  for (const auto& r : rs.positive_compact_roots()) den *= to_double(inner(rs, rs.rho_k(), r.coords));
  const int q = rs.dim_p() / 2;
  return num / den / (std::pow(kTwoPi, q) * std::pow(2.0, (q - 1) / 2.0));
}

int c_sign(const RootSystem& rs, const Weight& mu, Chamber chamber) {
  int s = -sign_of(inner(rs, mu, rs.cayley_root()));
  return chamber == Chamber::minus ? -s : s;
}

Complex cayley_exp(const RootSystem& rs, const Weight& mu, const NoncompactCartanElement& h) {
  double v = to_double(coroot_pairing(rs, mu, rs.cayley_root()));
  return torus_exp(mu, h.compact_part) * std::exp(h.log_a * v);
}

namespace {

void validate_cartan(const RootSystem& rs, const NoncompactCartanElement& h) {
  validate_torus(rs, h.compact_part);
  if (!torus_exp_is_one(rs.cayley_root(), h.compact_part))
    throw ValidationError("compact part of a noncompact Cartan element must centralize the real root");
  bool ok = (h.chamber == Chamber::plus && h.log_a > 0) ||
            (h.chamber == Chamber::minus && h.log_a < 0) ||
            (h.chamber == Chamber::boundary && h.log_a == 0);
  if (!ok) throw ValidationError("chamber label inconsistent with log_a");
}

}  // namespace

// Only the exponentials bounded on the chamber survive; the others belong
// to the continuation from the opposite chamber.
Complex omega(const RootSystem& rs, const HCParameter& lam, const NoncompactCartanElement& h) {
  validate_cartan(rs, h);
  Complex total = 0.0;
  for (const auto& w : weyl_group(rs, WeylSubgroup::full)) {
    Weight wl = w.apply(lam.lambda);
    int p = sign_of(inner(rs, wl, rs.cayley_root()));
    bool bounded = h.chamber == Chamber::minus ? p >= 0 : p <= 0;
    if (!bounded) continue;
    int c = c_sign(rs, wl, h.chamber);
    if (c == 0) continue;
    total += static_cast<double>(w.sign * c) * cayley_exp(rs, wl, h);
  }
  return total;
}

Complex delta_H_phase(const RootSystem& rs, const NoncompactCartanElement& h) {
  validate_cartan(rs, h);
  const double side = h.chamber == Chamber::minus ? -1.0 : 1.0;
  Complex phase = 1.0;
  for (const auto& r : rs.positive_roots()) {
    Complex u = torus_exp(r.coords.scaled(Rational(1, 2)), h.compact_part);
    double c = to_double(coroot_pairing(rs, r.coords, rs.cayley_root())) / 2.0;
    Complex f = u * std::exp(c * h.log_a) - std::conj(u) * std::exp(-c * h.log_a);
    if (std::abs(f) > kOneTol) {
      phase *= std::conj(f / std::abs(f));
    } else if (c != 0.0) {
      phase *= std::conj(u) * (c > 0 ? side : -side);
    }
  }
  return phase;
}

Complex omega_weighted(const RootSystem& rs, const HCParameter& lam,
                       const NoncompactCartanElement& h) {
  Complex om = omega(rs, lam, h);
  if (std::abs(om) < 1e-14) return 0.0;
  return om * delta_H_phase(rs, h);
}

Complex central_character(const RootSystem& rs, const HCParameter& lam, const TorusElement& z) {
  validate_torus(rs, z);
  for (const auto& r : rs.positive_roots())
    if (!torus_exp_is_one(r.coords, z)) throw ValidationError("torus element is not central");
  return torus_exp(lam.lambda - rs.rho_g(), z);
}

}  // namespace hecke
