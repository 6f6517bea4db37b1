#pragma once

// SL(2,R) / SL(2,Z): Hecke cosets, element classification, the geometric
// data of the level-one Hecke operators T_n, and the classical oracles
// (q-expansion of Delta, Eichler-Selberg trace) used to check them.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hecke/lefschetz.hpp"

namespace hecke::sl2 {

using BigInt = boost::multiprecision::cpp_int;

struct IntegerMatrix {
  BigInt a, b, c, d;

  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  IntegerMatrix operator*(const IntegerMatrix& o) const;
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
  friend bool operator<(const IntegerMatrix& x, const IntegerMatrix& y) {
    return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
  }
  std::string str() const;
};

struct HeckeCosetSet {
  long long n = 1;
  std::vector<IntegerMatrix> reps;
  std::size_t count() const { return reps.size(); }
};

// Upper-triangular representatives [[a,b],[0,d]], ad = n, 0 <= b < d.
HeckeCosetSet hecke_reps(long long n);

// Gamma x = Gamma y, i.e. x y^-1 in SL(2,Z).
bool same_left_coset(const IntegerMatrix& x, const IntegerMatrix& y);

enum class ClassKind { central, elliptic, hyperbolic, parabolic_ss, parabolic_nss };
std::string to_string(ClassKind k);

struct ClassTag {
  ClassKind kind = ClassKind::central;
  BigInt trace;
  BigInt disc;  // trace^2 - 4 det
};

ClassTag classify_element(const IntegerMatrix& m);

// Canonical representative of the SL(2,Z)-conjugacy class of an elliptic
// matrix, obtained by reducing its fixed-point quadratic form.
IntegerMatrix elliptic_canonical(const IntegerMatrix& m);

// Number of gamma in SL(2,Z) commuting with the elliptic matrix m.
int centralizer_order(const IntegerMatrix& m);

struct EllipticConjugacyClass {
  IntegerMatrix rep;
  long long trace = 0;
  int centralizer_order = 0;
};

// All elliptic classes of determinant n with a representative of entries
// bounded by `bound` (default n + 2). Throws StabilizationError when the
// list changes on doubling the bound.
std::vector<EllipticConjugacyClass> elliptic_classes(long long n, long long bound = 0);

struct EllipticTraceSummary {
  long long trace = 0;
  int class_count = 0;
  std::vector<int> centralizer_orders;
};
std::vector<EllipticTraceSummary> summarize_by_trace(const std::vector<EllipticConjugacyClass>& cls);

// Every integer matrix of determinant n with entries in [-bound, bound],
// in lexicographic order.
std::vector<IntegerMatrix> enumerate_det(long long n, long long bound);

// Routes elements of Xi_n to the slots of GeometricData. Hyperbolic
// elements have no slot; they are only counted.
class GeometryAccumulator {
 public:
  explicit GeometryAccumulator(long long n);

  void add(const IntegerMatrix& m);
  GeometricData finish() const;

  long long n() const { return n_; }
  const std::map<ClassKind, long long>& counts() const { return counts_; }
  long long discarded_hyperbolic() const;
  std::vector<EllipticConjugacyClass> elliptic() const;

 private:
  long long n_;
  std::map<ClassKind, long long> counts_;
  std::vector<int> central_signs_;
  std::vector<int> unipotent_signs_;
  std::map<IntegerMatrix, int> elliptic_;  // canonical rep -> centralizer order
};

// Conversions of integer matrices of determinant n, scaled into SL(2,R).
TorusElement elliptic_torus(const IntegerMatrix& m);

std::vector<BigInt> delta_coeffs(int N);  // tau(1..N)
int dim_cusp_forms(int k);
BigInt hurwitz_class_number_times_12(long long D);
BigInt eichler_selberg(int k, long long n);

RootSystem sl2_root_system();
Weight weight_k_parameter(int k);  // mu for the discrete series D_k

// Geometry of T_n with the calibration constant left at 1.
GeometricData build_geom_sl2z_uncalibrated(long long n);
// Solved once on (k = 12, n = 1) and frozen.
double calibrate_sl2z();
GeometricData build_geom_sl2z(long long n);

struct ExponentCandidate {
  std::string rule;  // "0", "+(k-2)/2", "-(k-2)/2"
  double exponent = 0.0;
  double scaled_oracle = 0.0;
  double defect = 0.0;
  bool match = false;
};

struct OracleReport {
  int k = 12;
  long long n = 1;
  Complex lefschetz_value;
  BigInt oracle_value;
  std::string exponent_rule;  // rule used for `match`
  bool match = false;
  double defect = 0.0;
  double tolerance = 1e-6;
  long long rescaled_rounded = 0;  // n^((k-2)/2) * lefschetz, rounded
  std::vector<ExponentCandidate> candidates;
  LefschetzBreakdown breakdown;
};

inline constexpr const char* kFrozenExponentRule = "-(k-2)/2";

void validate_weight(int k);

OracleReport compare(int k, long long n,
                     PairingInterpretation interp = PairingInterpretation::conjugate,
                     double tolerance = 1e-6);

}  // namespace hecke::sl2
