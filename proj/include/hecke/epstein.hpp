#pragma once

// Constant terms at z = 0 of the cusp zeta functions
//   zeta(z) = lattice_vol * sum_xi weight(xi) * ||log xi||^-(exponent_base + z),
// with the norms presented as finitely many scaled arithmetic progressions.

#include <complex>
#include <vector>

namespace hecke {

// Analytic continuation of sum_{m >= 0} (m + a)^-s. Throws SingularError at s = 1.
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);

enum class EpsteinSign { plus, minus };

struct EpsteinClass {
  double weight = 1.0;
  double norm = 1.0;
};

// Norms scale * (m + offset) for m = 0, 1, 2, ..., all with the same weight.
struct EpsteinProgression {
  double weight = 1.0;
  double scale = 1.0;
  double offset = 1.0;
};

struct EpsteinSpec {
  double lattice_vol = 1.0;
  int exponent_base = 1;
  EpsteinSign sign = EpsteinSign::plus;
  std::vector<EpsteinClass> classes;
  std::vector<EpsteinProgression> progressions;
  // Marks a class list cut off from an infinite family; such a list must
  // come with its progression form.
  bool truncated = false;
};

struct LaurentConstant {
  double constant_term = 0.0;
  int pole_order_at_0 = 0;
  double residue = 0.0;
};

LaurentConstant zeta_constant_terms(const EpsteinSpec& spec);

}  // namespace hecke
