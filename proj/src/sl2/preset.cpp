#include <cmath>

#include "hecke/error.hpp"
#include "hecke/sl2.hpp"

namespace hecke::sl2 {

RootSystem sl2_root_system() { return build_root_system({Family::su, 1}); }

Weight weight_k_parameter(int k) {
  validate_weight(k);
  Rational h(k - 1, 2);
  return Weight{{h, -h}};  // lambda = (k-1) alpha / 2, rho_k = 0
}

GeometricData build_geom_sl2z_uncalibrated(long long n) {
  if (n < 1) throw ValidationError("n must be positive");
  const long long bound = n + 2;
  auto classes = elliptic_classes(n, bound);
  GeometryAccumulator acc(n);
  for (const auto& m : enumerate_det(n, bound)) acc.add(m);
  auto seen = acc.elliptic();
  if (seen.size() != classes.size())
    throw StabilizationError("coset enumeration missed elliptic classes; increase bound");
  return acc.finish();
}

double calibrate_sl2z() {
  static const double value = [] {
    auto rs = sl2_root_system();
    auto geom = build_geom_sl2z_uncalibrated(1);
    auto lam = HCParameter::from_mu(rs, weight_k_parameter(12));
    Complex rest = elliptic_term(rs, lam, geom) +
                   parabolic_I_term(rs, lam, geom, PairingInterpretation::conjugate) +
                   parabolic_II_term(rs, lam, geom);
    double target = eichler_selberg(12, 1).convert_to<double>();
    double c = (target - rest.real()) / central_term(rs, lam, geom).real();
    if (!(c > 0)) throw Error("calibration on (k=12, n=1) is not positive");
    return c;
  }();
  return value;
}

GeometricData build_geom_sl2z(long long n) {
  auto g = build_geom_sl2z_uncalibrated(n);
  g.calibration = calibrate_sl2z();
  return g;
}

OracleReport compare(int k, long long n, PairingInterpretation interp, double tolerance) {
  validate_weight(k);
  auto rs = sl2_root_system();
  OracleReport r;
  r.k = k;
  r.n = n;
  r.tolerance = tolerance;
  r.breakdown = assemble(rs, weight_k_parameter(k), build_geom_sl2z(n), interp);
  r.lefschetz_value = r.breakdown.total;
  r.oracle_value = eichler_selberg(k, n);

  const double oracle = r.oracle_value.convert_to<double>();
  const double h = (k - 2) / 2.0;
  for (auto [rule, j] : {std::pair{"0", 0.0}, std::pair{"+(k-2)/2", h}, std::pair{"-(k-2)/2", -h}}) {
    ExponentCandidate c;
    c.rule = rule;
    c.exponent = j;
    c.scaled_oracle = std::pow(double(n), j) * oracle;
    // Compared on the oracle's scale, relative to max(1, |oracle|).
    double rescaled = r.lefschetz_value.real() * std::pow(double(n), -j);
    c.defect = (std::abs(rescaled - oracle) + std::abs(r.lefschetz_value.imag()) * std::pow(double(n), -j)) /
               std::max(1.0, std::abs(oracle));
    c.match = c.defect < tolerance;
    r.candidates.push_back(c);
    if (c.rule == kFrozenExponentRule) {
      r.exponent_rule = c.rule;
      r.match = c.match;
      r.defect = c.defect;
      r.rescaled_rounded = std::llround(rescaled);
    }
  }
  return r;
}

}  // namespace hecke::sl2
