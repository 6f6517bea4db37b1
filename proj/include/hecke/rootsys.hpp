#pragma once

// Root data for the equal-rank, real-rank-one families su(n,1), so(2n,1)
// and sp(n,1). Roots and weights are exact rationals in the standard
// epsilon coordinates of each family.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

enum class Family { su, so, sp };

struct GroupDescriptor {
  Family family = Family::su;
  int n = 1;

  // Accepts "su(n,1)", "so(2n,1)", "sp(n,1)", "sl2r" (alias of su(1,1)).
  // so(2n+1,1) is rejected: it has no compact Cartan subgroup.
  static GroupDescriptor parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct Weight {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(const Rational& s) const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }

  static Weight zero(std::size_t dim) { return Weight{std::vector<Rational>(dim)}; }
  std::string str() const;
};

enum class RootKind { compact, noncompact };

struct Root {
  Weight coords;
  RootKind kind = RootKind::compact;
  bool positive = false;

  bool compact() const { return kind == RootKind::compact; }
};

// An element of a Weyl group acting on epsilon coordinates.
struct WeylElement {
  std::vector<Rational> matrix;  // row-major dim x dim
  std::size_t dim = 0;
  int sign = 1;                  // determinant

  Weight apply(const Weight& w) const;
  WeylElement operator*(const WeylElement& o) const;
  Rational determinant() const;
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.matrix == b.matrix;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.matrix < b.matrix;
  }
  static WeylElement identity(std::size_t dim);
  static WeylElement reflection(const Weight& root);
};

enum class WeylSubgroup { full, compact };

class RootSystem {
 public:
  const GroupDescriptor& descriptor() const { return descriptor_; }
  std::size_t dim() const { return dim_; }

  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> positive_roots() const;
  std::vector<Root> positive_compact_roots() const;
  std::vector<Root> positive_noncompact_roots() const;
  std::vector<Root> simple_roots() const;

  const Weight& rho_g() const { return rho_g_; }
  const Weight& rho_k() const { return rho_k_; }
  const Weight& rho_p() const { return rho_p_; }

  int dim_p() const { return dim_p_; }
  int dim_n1() const { return dim_n1_; }
  int dim_n2() const { return dim_n2_; }

  // Noncompact positive root used by the Cayley transform; its image is
  // the real root of the split Cartan subalgebra.
  const Weight& cayley_root() const { return cayley_root_; }

  // Scale s of the invariant form <a,b> = s * (P a . P b), chosen so the
  // short roots have squared length 2. P projects away the trace direction
  // for su(n,1).
  const Rational& form_scale() const { return form_scale_; }

  Weight project(const Weight& w) const;
  bool contains_root(const Weight& w) const;

 private:
  friend RootSystem build_root_system(const GroupDescriptor& desc);

  GroupDescriptor descriptor_;
  std::size_t dim_ = 0;
  std::vector<Root> roots_;
  Weight rho_g_, rho_k_, rho_p_;
  Weight cayley_root_;
  Rational form_scale_{1};
  int dim_p_ = 0, dim_n1_ = 0, dim_n2_ = 0;
};

RootSystem build_root_system(const GroupDescriptor& desc);

// Invariant form, normalized so the short roots have <a,a> = 2.
Rational inner(const RootSystem& rs, const Weight& a, const Weight& b);

// 2<w,a>/<a,a>.
Rational coroot_pairing(const RootSystem& rs, const Weight& w, const Weight& a);

// Closure of the reflections in the given roots under composition.
std::vector<WeylElement> reflection_closure(std::size_t dim, const std::vector<Weight>& generators);

// Full group: closure of simple reflections. Compact: closure of the
// reflections in the compact roots. Sorted lexicographically.
std::vector<WeylElement> weyl_group(const RootSystem& rs, WeylSubgroup sub);

bool is_integral(const RootSystem& rs, const Weight& mu);

struct WeightClass {
  bool regular = true;
  std::optional<Weight> witness;  // noncompact root with <mu + rho_k, witness> = 0
};

// Classifies mu through lambda = mu + rho_k. Rejects lambda that is not
// dominant for the compact positive roots, or that lies strictly outside
// the fixed chamber of R+(g,t).
WeightClass classify_weight(const RootSystem& rs, const Weight& mu);

// Half-spin dimensions of S_p^+ and S_p^-.
std::pair<std::int64_t, std::int64_t> spinor_dims(const RootSystem& rs);

}  // namespace hecke
