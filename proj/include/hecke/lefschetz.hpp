#pragma once

// Assembly of the Lefschetz number of a Hecke operator from its central,
// elliptic, unipotent (parabolic I), weighted (parabolic II) and residue
// contributions.

#include <optional>
#include <string>
#include <vector>

#include "hecke/chars.hpp"

namespace hecke {

struct CentralClass {
  TorusElement z;
  // Optional torus points at which Theta(z t) = zeta(z) Theta(t) is checked.
  std::vector<TorusElement> character_test_angles;
};

struct EllipticClass {
  TorusElement rep;
  double vol_quotient = 1.0;  // vol(Gamma_xi \ G_xi)
  double d_xi = 1.0;
};

// <mu, Z0> = mu . re + i mu . im
struct Z0Pairing {
  std::vector<double> re;
  std::vector<double> im;

  Complex operator()(const Weight& mu) const;
};

struct ParabolicIEntry {
  bool delta_flag = false;
  double c_eta_plus = 0.0, c_eta_minus = 0.0;
  double C_eta_plus = 0.0, C_eta_minus = 0.0;
  int dim_n_eta1 = 0;
  TorusElement eta_torus;
  std::vector<Weight> Rplus_xi0;
  Z0Pairing Z0_pairing;
};

struct ParabolicIIEntry {
  double vol_M = 1.0;
  double det_Ad_n = 1.0;
  long long coset_index = 1;
  NoncompactCartanElement eta_H;
};

struct GeometricData {
  double total_vol = 0.0;
  std::vector<CentralClass> central_classes;
  std::vector<EllipticClass> elliptic_classes;
  std::vector<ParabolicIEntry> parabolic_I;
  std::vector<ParabolicIIEntry> parabolic_II;
  std::optional<Complex> residue_scalar;
  double calibration = 1.0;
};

// Reading of the overlined pairing <w lambda, Z0> in the unipotent term.
enum class PairingInterpretation { conjugate, identity };

std::string to_string(PairingInterpretation p);
PairingInterpretation parse_interpretation(std::string_view s);

struct LefschetzBreakdown {
  Complex central, elliptic, parabolic_I, parabolic_II, residue;
  Complex total;
  long long rounded = 0;
  double rounding_defect = 0.0;
  bool regular = true;
  PairingInterpretation interpretation = PairingInterpretation::conjugate;
  Complex parabolic_I_conjugate, parabolic_I_identity;
};

Complex central_term(const RootSystem& rs, const HCParameter& lam, const GeometricData& geom);
Complex elliptic_term(const RootSystem& rs, const HCParameter& lam, const GeometricData& geom);
Complex parabolic_I_term(const RootSystem& rs, const HCParameter& lam, const GeometricData& geom,
                         PairingInterpretation interp);
Complex parabolic_II_term(const RootSystem& rs, const HCParameter& lam, const GeometricData& geom);
Complex residue_term(const GeometricData& geom);

LefschetzBreakdown assemble(const RootSystem& rs, const Weight& mu, const GeometricData& geom,
                            PairingInterpretation interp = PairingInterpretation::conjugate);

}  // namespace hecke
