#include "hecke/epstein.hpp"

#include <cmath>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include "hecke/error.hpp"

namespace hecke {

namespace {

constexpr int kDirectTerms = 30;
constexpr int kBernoulliTerms = 12;

}  // namespace

std::complex<double> hurwitz_zeta(std::complex<double> s, double a) {
  if (!(a > 0)) throw ValidationError("hurwitz_zeta requires a > 0");
  if (s == std::complex<double>(1.0, 0.0)) throw SingularError("hurwitz_zeta has a pole at s = 1");

  std::complex<double> sum = 0.0;
  for (int m = 0; m < kDirectTerms; ++m) sum += std::exp(-s * std::log(m + a));

  const double x = kDirectTerms + a;
  const double lx = std::log(x);
  sum += std::exp((1.0 - s) * lx) / (s - 1.0);
  sum += 0.5 * std::exp(-s * lx);

  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1)
  std::complex<double> rising = s;
  double fact = 2.0;
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    sum += boost::math::bernoulli_b2n<double>(j) / fact * rising *
           std::exp((-s - 2.0 * j + 1.0) * lx);
    rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return sum;
}

LaurentConstant zeta_constant_terms(const EpsteinSpec& spec) {
  if (spec.exponent_base < 1) throw ValidationError("exponent_base must be a positive integer");
  if (!(spec.lattice_vol > 0)) throw ValidationError("lattice_vol must be positive");
  if (spec.truncated && spec.progressions.empty())
    throw ValidationError("truncated class list: supply the arithmetic-progression form");

  const int d = spec.exponent_base;
  LaurentConstant out;
  double c0 = 0.0, res = 0.0;
  for (const auto& c : spec.classes) {
    if (!(c.norm > 0)) throw ValidationError("class norms must be positive");
    c0 += c.weight * std::pow(c.norm, -d);
  }
  for (const auto& p : spec.progressions) {
    if (!(p.scale > 0) || !(p.offset > 0))
      throw ValidationError("progression scale and offset must be positive");
    if (d == 1) {
      // c^-(1+z) * (1/z - psi(a) + O(z))
      c0 += p.weight / p.scale * (-boost::math::digamma(p.offset) - std::log(p.scale));
      res += p.weight / p.scale;
    } else {
      c0 += p.weight * std::pow(p.scale, -d) * hurwitz_zeta(double(d), p.offset).real();
    }
  }
  out.constant_term = spec.lattice_vol * c0;
  out.residue = spec.lattice_vol * res;
  out.pole_order_at_0 = out.residue != 0.0 ? 1 : 0;
  return out;
}

}  // namespace hecke
