#include "hecke/lefschetz.hpp"

#include <cmath>

#include "hecke/error.hpp"

namespace hecke {

namespace {

double parity_sign(int e) { return e % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

Complex Z0Pairing::operator()(const Weight& mu) const {
  if (re.size() != mu.dim() || im.size() != mu.dim())
    throw ValidationError("Z0_pairing dimension mismatch");
  double x = 0.0, y = 0.0;
  for (std::size_t i = 0; i < mu.dim(); ++i) {
    x += to_double(mu.coords[i]) * re[i];
    y += to_double(mu.coords[i]) * im[i];
  }
  return {x, y};
}

std::string to_string(PairingInterpretation p) {
  return p == PairingInterpretation::conjugate ? "conjugate" : "identity";
}

PairingInterpretation parse_interpretation(std::string_view s) {
  if (s == "conjugate") return PairingInterpretation::conjugate;
  if (s == "identity") return PairingInterpretation::identity;
  throw ValidationError("interpretation must be 'conjugate' or 'identity'");
}

Complex central_term(const RootSystem& rs, const HCParameter& lam, const GeometricData& geom) {
  if (geom.central_classes.empty()) return 0.0;
  bool trivial = true;
  for (const auto& cls : geom.central_classes) {
    Complex zeta = central_character(rs, lam, cls.z);
    for (const auto& t : cls.character_test_angles) {
      TorusElement zt = t;
      for (std::size_t i = 0; i < zt.dim(); ++i) zt.angles[i] += cls.z.angles[i];
      if (zt.exact && cls.z.exact)
        for (std::size_t i = 0; i < zt.dim(); ++i) (*zt.exact)[i] += (*cls.z.exact)[i];
      else
        zt.exact.reset();
      Complex lhs = ds_character_Treg(rs, lam, zt).value;
      Complex rhs = zeta * ds_character_Treg(rs, lam, t).value;
      if (std::abs(lhs - rhs) > 1e-9 * (1.0 + std::abs(rhs)))
        throw ValidationError("central class fails the character test Theta(zt) = zeta(z) Theta(t)");
    }
    if (std::abs(zeta - 1.0) > 1e-9) trivial = false;
  }
  if (!trivial) return 0.0;
  const double delta = static_cast<double>(geom.central_classes.size());
  return delta * geom.total_vol * formal_degree(rs, lam) * geom.calibration;
}

Complex elliptic_term(const RootSystem& rs, const HCParameter& lam, const GeometricData& geom) {
  Complex sum = 0.0;
  for (const auto& e : geom.elliptic_classes)
    sum += e.vol_quotient / e.d_xi * elliptic_orbital_term(rs, lam, e.rep);
  return sum;
}

Complex parabolic_I_term(const RootSystem& rs, const HCParameter& lam, const GeometricData& geom,
                         PairingInterpretation interp) {
  Complex sum = 0.0;
  const auto wk = weyl_group(rs, WeylSubgroup::compact);
  for (const auto& p : geom.parabolic_I) {
    if (p.dim_n_eta1 % 2 != 0) throw ValidationError("dim_n_eta1 must be even");
    if (!p.delta_flag) continue;
    const double pref = p.c_eta_plus * p.C_eta_plus + p.c_eta_minus * p.C_eta_minus;
    if (pref == 0.0) continue;
    validate_torus(rs, p.eta_torus);
    Complex ws = 0.0;
    for (const auto& w : wk) {
      Weight wl = w.apply(lam.lambda);
      Complex z = p.Z0_pairing(wl);
      if (interp == PairingInterpretation::conjugate) z = std::conj(z);
      Complex term = std::pow(z, p.dim_n_eta1 / 2);
      for (const auto& b : p.Rplus_xi0) term *= to_double(inner(rs, wl, b));
      ws += term * torus_exp(wl, p.eta_torus);
    }
    sum += pref * ws;
  }
  return parity_sign(rs.dim_p() / 2) * sum;
}

Complex parabolic_II_term(const RootSystem& rs, const HCParameter& lam, const GeometricData& geom) {
  Complex sum = 0.0;
  for (const auto& p : geom.parabolic_II) {
    if (!(p.det_Ad_n > 0)) throw ValidationError("det_Ad_n must be positive");
    sum += p.vol_M / std::sqrt(p.det_Ad_n) * static_cast<double>(p.coset_index) *
           omega_weighted(rs, lam, p.eta_H);
  }
  return parity_sign(rs.dim_p() / 2 + 1) / 2.0 * sum;
}

Complex residue_term(const GeometricData& geom) {
  if (!geom.residue_scalar) throw ValidationError("singular mu requires residue data");
  return -0.5 * *geom.residue_scalar;
}

LefschetzBreakdown assemble(const RootSystem& rs, const Weight& mu, const GeometricData& geom,
                            PairingInterpretation interp) {
  auto lam = HCParameter::from_mu(rs, mu);
  LefschetzBreakdown b;
  b.regular = lam.regular;
  b.interpretation = interp;
  b.elliptic = elliptic_term(rs, lam, geom);
  b.parabolic_I_conjugate = parabolic_I_term(rs, lam, geom, PairingInterpretation::conjugate);
  b.parabolic_I_identity = parabolic_I_term(rs, lam, geom, PairingInterpretation::identity);
  b.parabolic_I = interp == PairingInterpretation::conjugate ? b.parabolic_I_conjugate
                                                             : b.parabolic_I_identity;
  if (lam.regular) {
    b.central = central_term(rs, lam, geom);
    b.parabolic_II = parabolic_II_term(rs, lam, geom);
    b.residue = 0.0;
  } else {
    b.central = 0.0;
    b.parabolic_II = 0.0;
    b.residue = residue_term(geom);
  }
  b.total = b.central + b.elliptic + b.parabolic_I + b.parabolic_II + b.residue;
  b.rounded = std::llround(b.total.real());
  b.rounding_defect = std::abs(b.total - Complex(static_cast<double>(b.rounded), 0.0));
  return b;
}

}  // namespace hecke
