#pragma once

// Discrete-series characters on the compact and noncompact Cartan
// subgroups, formal degrees, central characters and the function Omega.

#include <complex>
#include <optional>
#include <vector>

#include "hecke/rootsys.hpp"

namespace hecke {

using Complex = std::complex<double>;

struct HCParameter {
  Weight lambda;  // mu + rho_k
  bool regular = true;
  std::optional<Weight> witness;

  static HCParameter from_mu(const RootSystem& rs, const Weight& mu);
  static HCParameter from_lambda(const RootSystem& rs, const Weight& lambda);
};

// t = exp(2 pi i q) in epsilon coordinates, so e^mu(t) = exp(2 pi i <mu . q>).
// Exact rational angles are kept when known; they make root-of-unity tests
// exact. For su(n,1) the angles must sum to zero.
struct TorusElement {
  std::vector<double> angles;
  std::optional<std::vector<Rational>> exact;

  static TorusElement from_exact(std::vector<Rational> q);
  static TorusElement from_angles(std::vector<double> q);
  static TorusElement identity(std::size_t dim);
  std::size_t dim() const { return angles.size(); }
};

enum class Chamber { plus, minus, boundary };

struct NoncompactCartanElement {
  TorusElement compact_part;  // must commute with the real root: e^beta = 1
  double log_a = 0.0;         // h = h_K exp(log_a H_beta)
  Chamber chamber = Chamber::boundary;
};

struct CharacterValue {
  Complex value;
  bool is_regular_point = true;
};

void validate_torus(const RootSystem& rs, const TorusElement& t);

Complex torus_exp(const Weight& mu, const TorusElement& t);
bool torus_exp_is_one(const Weight& mu, const TorusElement& t);

Complex weyl_denominator_T(const RootSystem& rs, const TorusElement& t);

// Throws SingularError when the Weyl denominator vanishes at t.
CharacterValue ds_character_Treg(const RootSystem& rs, const HCParameter& lam,
                                 const TorusElement& t);

// The d_xi-free elliptic orbital term; valid at singular xi as well.
Complex elliptic_orbital_term(const RootSystem& rs, const HCParameter& lam,
                              const TorusElement& xi);

// Roots alpha in R+(g,t) with e^alpha(xi) = 1.
std::vector<Root> centralizer_roots(const RootSystem& rs, const TorusElement& xi);

double formal_degree(const RootSystem& rs, const HCParameter& lam);

int c_sign(const RootSystem& rs, const Weight& mu, Chamber chamber);

// e^mu evaluated at the Cayley transform of h.
Complex cayley_exp(const RootSystem& rs, const Weight& mu, const NoncompactCartanElement& h);

Complex omega(const RootSystem& rs, const HCParameter& lam, const NoncompactCartanElement& h);

// Conjugate phase of the Weyl-product Delta_H at h (one-sided limit from
// the chamber side where a factor vanishes).
Complex delta_H_phase(const RootSystem& rs, const NoncompactCartanElement& h);

// Omega times delta_H_phase; the invariant numerator fed to the weighted term.
Complex omega_weighted(const RootSystem& rs, const HCParameter& lam,
                       const NoncompactCartanElement& h);

// z must be central: e^beta(z) = 1 for every root.
Complex central_character(const RootSystem& rs, const HCParameter& lam, const TorusElement& z);

}  // namespace hecke
