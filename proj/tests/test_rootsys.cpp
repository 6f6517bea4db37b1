#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hecke/error.hpp"
#include "hecke/rootsys.hpp"

using namespace hecke;

namespace {

// Roots of g_C read off from the weights of its defining representation V:
// sl(V) from differences, so(V) from Lambda^2 V, sp(V) from Sym^2 V. Each
// weight vector carries the eigenvalue of the Cartan involution; a root is
// compact when the product of the two eigenvalues is +1.
struct VectorWeight {
  Weight w;
  int theta;
};

using OracleRoot = std::pair<Weight, bool>;  // (coords, compact)

std::set<OracleRoot> oracle_roots(const GroupDescriptor& d) {
  std::vector<VectorWeight> v;
  std::size_t dim = 0;
  const auto n = static_cast<std::size_t>(d.n);
  auto e = [&](std::size_t i, int s) {
    Weight w = Weight::zero(dim);
    w.coords[i] = s;
    return w;
  };
  std::set<OracleRoot> out;
  switch (d.family) {
    case Family::su:
      dim = n + 1;
      for (std::size_t i = 0; i <= n; ++i) v.push_back({e(i, 1), i < n ? 1 : -1});
      for (const auto& a : v)
        for (const auto& b : v)
          if (!(a.w == b.w)) out.insert({a.w - b.w, a.theta * b.theta == 1});
      return out;
    case Family::so:
      dim = n;
      for (std::size_t i = 0; i < n; ++i) {
        v.push_back({e(i, 1), 1});
        v.push_back({e(i, -1), 1});
      }
      v.push_back({Weight::zero(dim), -1});
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          Weight s = v[i].w + v[j].w;
          if (!(s == Weight::zero(dim))) out.insert({s, v[i].theta * v[j].theta == 1});
        }
      return out;
    case Family::sp:
      dim = n + 1;
      for (std::size_t i = 0; i <= n; ++i) {
        v.push_back({e(i, 1), i < n ? 1 : -1});
        v.push_back({e(i, -1), i < n ? 1 : -1});
      }
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j) {
          Weight s = v[i].w + v[j].w;
          if (!(s == Weight::zero(dim))) out.insert({s, v[i].theta * v[j].theta == 1});
        }
      return out;
  }
  return out;
}

std::vector<GroupDescriptor> all_descriptors(int max_n) {
  std::vector<GroupDescriptor> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto f : {Family::su, Family::so, Family::sp}) out.push_back({f, n});
  return out;
}

// Signed permutation matrices (plain permutations for su) that preserve the
// root set, filtered to the Weyl group by the classical descriptions.
std::set<std::vector<Rational>> oracle_weyl(const GroupDescriptor& d, bool compact) {
  const std::size_t dim = d.family == Family::so ? d.n : d.n + 1;
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<Rational>> out;
  do {
    const int sign_masks = d.family == Family::su ? 1 : (1 << dim);
    for (int mask = 0; mask < sign_masks; ++mask) {
      if (compact) {
        if (d.family == Family::su && perm[dim - 1] != dim - 1) continue;
        if (d.family == Family::sp && perm[dim - 1] != dim - 1) continue;
        if (d.family == Family::so && __builtin_popcount(mask) % 2 != 0) continue;
      }
      std::vector<Rational> m(dim * dim, Rational(0));
      for (std::size_t i = 0; i < dim; ++i) m[perm[i] * dim + i] = (mask >> i) & 1 ? -1 : 1;
      out.insert(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("descriptor parsing") {
  CHECK(GroupDescriptor::parse("sl2r") == GroupDescriptor{Family::su, 1});
  CHECK(GroupDescriptor::parse("su(3,1)") == GroupDescriptor{Family::su, 3});
  CHECK(GroupDescriptor::parse(" SO(4, 1) ") == GroupDescriptor{Family::so, 2});
  CHECK(GroupDescriptor::parse("sp(2,1)") == GroupDescriptor{Family::sp, 2});
  CHECK(GroupDescriptor::parse("so(6,1)").name() == "so(6,1)");
  CHECK_THROWS_AS(GroupDescriptor::parse("so(3,1)"), ValidationError);
  CHECK_THROWS_AS(GroupDescriptor::parse("f4(-20)"), ValidationError);
  CHECK_THROWS_AS(GroupDescriptor::parse("su(0,1)"), ValidationError);
  CHECK_THROWS_AS(GroupDescriptor::parse("su(2,2)"), ValidationError);
}

TEST_CASE("roots agree with the representation-theoretic enumeration") {
  for (const auto& d : all_descriptors(3)) {
    CAPTURE(d.name());
    auto rs = build_root_system(d);
    std::set<OracleRoot> got;
    for (const auto& r : rs.roots()) got.insert({r.coords, r.compact()});
    CHECK(got == oracle_roots(d));
    CHECK(got.size() == rs.roots().size());
  }
}

TEST_CASE("spec examples for build_root_system") {
  auto su11 = build_root_system({Family::su, 1});
  CHECK(su11.positive_roots().size() == 1);
  CHECK(su11.positive_noncompact_roots().size() == 1);
  CHECK(su11.rho_k() == Weight::zero(2));
  CHECK(su11.dim_p() == 2);
  CHECK(su11.dim_n1() == 0);
  CHECK(su11.dim_n2() == 1);

  auto su21 = build_root_system({Family::su, 2});
  CHECK(su21.positive_roots().size() == 3);
  CHECK(su21.positive_compact_roots().size() == 1);
  CHECK(su21.positive_noncompact_roots().size() == 2);
  CHECK(su21.dim_p() == 4);
  CHECK(su21.dim_n1() == 2);
  CHECK(su21.dim_n2() == 1);

  auto so41 = build_root_system({Family::so, 2});
  CHECK(so41.dim() == 2);  // rank G = rank K = 2
  CHECK(so41.dim_p() == 4);
}

TEST_CASE("nilradical dimensions match rank-one hyperbolic geometry") {
  // dim p = dim a + dim n with dim a = 1, and g_{2 lambda} has the dimension
  // of the imaginary part of R, C or H.
  for (const auto& d : all_descriptors(3)) {
    CAPTURE(d.name());
    auto rs = build_root_system(d);
    int expected_n2 = d.family == Family::so ? 0 : (d.family == Family::su ? 1 : 3);
    int real_dim = d.family == Family::so ? 2 * d.n : (d.family == Family::su ? 2 * d.n : 4 * d.n);
    CHECK(rs.dim_p() == real_dim);
    CHECK(rs.dim_n2() == expected_n2);
    CHECK(rs.dim_n1() + rs.dim_n2() == rs.dim_p() - 1);
  }
}

TEST_CASE("rho vectors and positivity") {
  for (const auto& d : all_descriptors(3)) {
    CAPTURE(d.name());
    auto rs = build_root_system(d);
    CHECK(rs.rho_g() == rs.rho_k() + rs.rho_p());
    CHECK(rs.dim_p() % 2 == 0);

    // Positive system closed under addition inside the root set.
    auto pos = rs.positive_roots();
    for (const auto& a : pos)
      for (const auto& b : pos) {
        Weight s = a.coords + b.coords;
        if (rs.contains_root(s))
          CHECK(std::any_of(pos.begin(), pos.end(), [&](const Root& r) { return r.coords == s; }));
      }
    CHECK(pos.size() * 2 == rs.roots().size());
  }
}

TEST_CASE("inner product normalization") {
  for (const auto& d : all_descriptors(3)) {
    CAPTURE(d.name());
    auto rs = build_root_system(d);
    Rational shortest(1000);
    for (const auto& r : rs.roots()) shortest = std::min(shortest, inner(rs, r.coords, r.coords));
    CHECK(shortest == Rational(2));
    for (const auto& s : rs.simple_roots()) CHECK(coroot_pairing(rs, rs.rho_g(), s.coords) == Rational(1));
    CHECK(inner(rs, Weight::zero(rs.dim()), rs.rho_g()) == Rational(0));
    CHECK(inner(rs, rs.rho_g(), rs.rho_k()) == inner(rs, rs.rho_k(), rs.rho_g()));
  }
  auto rs = build_root_system({Family::su, 1});
  CHECK_THROWS_AS(inner(rs, Weight::zero(2), Weight::zero(3)), ValidationError);
}

TEST_CASE("Weyl groups match signed-permutation enumeration") {
  for (const auto& d : all_descriptors(3)) {
    CAPTURE(d.name());
    auto rs = build_root_system(d);
    for (bool compact : {false, true}) {
      CAPTURE(compact);
      auto w = weyl_group(rs, compact ? WeylSubgroup::compact : WeylSubgroup::full);
      std::set<std::vector<Rational>> got;
      for (const auto& e : w) got.insert(e.matrix);
      CHECK(got == oracle_weyl(d, compact));
    }
  }
  CHECK(weyl_group(build_root_system({Family::su, 1}), WeylSubgroup::full).size() == 2);
  CHECK(weyl_group(build_root_system({Family::su, 1}), WeylSubgroup::compact).size() == 1);
  CHECK(weyl_group(build_root_system({Family::su, 2}), WeylSubgroup::full).size() == 6);
  CHECK(weyl_group(build_root_system({Family::su, 2}), WeylSubgroup::compact).size() == 2);
  CHECK(weyl_group(build_root_system({Family::sp, 2}), WeylSubgroup::compact).size() == 16);
}

TEST_CASE("Weyl elements permute roots and carry their determinant") {
  for (const auto& d : all_descriptors(2)) {
    CAPTURE(d.name());
    auto rs = build_root_system(d);
    auto w = weyl_group(rs, WeylSubgroup::full);
    std::set<Weight> roots;
    for (const auto& r : rs.roots()) roots.insert(r.coords);
    for (const auto& e : w) {
      CHECK(e.determinant() == Rational(e.sign));
      std::set<Weight> image;
      for (const auto& r : rs.roots()) image.insert(e.apply(r.coords));
      CHECK(image == roots);
    }
    for (std::size_t i = 0; i < w.size(); i += 3)
      for (std::size_t j = 0; j < w.size(); j += 5) {
        auto p = w[i] * w[j];
        CHECK(p.sign == w[i].sign * w[j].sign);
        CHECK(p.determinant() == w[i].determinant() * w[j].determinant());
        CHECK(std::binary_search(w.begin(), w.end(), p));
      }
  }
}

TEST_CASE("classify_weight") {
  auto su11 = build_root_system({Family::su, 1});
  Rational h(11, 2);
  auto reg = classify_weight(su11, Weight{{h, -h}});
  CHECK(reg.regular);
  CHECK(coroot_pairing(su11, Weight{{h, -h}}, su11.positive_roots()[0].coords) == Rational(11));

  auto sing = classify_weight(su11, Weight::zero(2));
  CHECK_FALSE(sing.regular);
  REQUIRE(sing.witness);
  CHECK(*sing.witness == su11.positive_roots()[0].coords);

  CHECK_THROWS_AS(classify_weight(su11, Weight{{-h, h}}), ValidationError);

  // su(2,1), mu = 0: lambda = rho_k = (1/2, -1/2, 0) pairs to 1, 1/2, -1/2
  // with e1-e2, e1-e3, e2-e3, so it lies outside the fixed chamber.
  auto su21 = build_root_system({Family::su, 2});
  CHECK_THROWS_AS(classify_weight(su21, Weight::zero(3)), ValidationError);
  auto ok = classify_weight(su21, su21.rho_g() - su21.rho_k());
  CHECK(ok.regular);
  // lambda = (2/3, -1/3, -1/3) is dominant for k and singular on e2-e3.
  Weight wall{{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}};
  auto s21 = classify_weight(su21, wall - su21.rho_k());
  CHECK_FALSE(s21.regular);
  CHECK(*s21.witness == Weight{{Rational(0), Rational(1), Rational(-1)}});

  // Compact non-dominant input is rejected.
  CHECK_THROWS_AS(classify_weight(su21, Weight{{Rational(-1), Rational(1), Rational(0)}} - su21.rho_k()),
                  ValidationError);
}

TEST_CASE("regularity is preserved by compact Weyl elements that keep dominance") {
  for (const auto& d : all_descriptors(2)) {
    auto rs = build_root_system(d);
    Weight mu = rs.rho_g() + rs.rho_g() - rs.rho_k();
    REQUIRE(classify_weight(rs, mu).regular);
    for (const auto& w : weyl_group(rs, WeylSubgroup::compact)) {
      Weight lam = w.apply(mu + rs.rho_k());
      bool dominant = true;
      for (const auto& r : rs.positive_compact_roots()) dominant &= inner(rs, lam, r.coords) > 0;
      bool in_chamber = true;
      for (const auto& r : rs.positive_noncompact_roots()) in_chamber &= inner(rs, lam, r.coords) >= 0;
      if (dominant && in_chamber) CHECK(classify_weight(rs, lam - rs.rho_k()).regular);
    }
  }
}

TEST_CASE("integrality and spinor dimensions") {
  auto su11 = build_root_system({Family::su, 1});
  CHECK(is_integral(su11, Weight{{Rational(11, 2), Rational(-11, 2)}}));
  CHECK_FALSE(is_integral(su11, Weight{{Rational(1, 4), Rational(-1, 4)}}));
  CHECK(spinor_dims(su11) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK(spinor_dims(build_root_system({Family::su, 2})) == std::pair<std::int64_t, std::int64_t>{2, 2});
  auto sp11 = build_root_system({Family::sp, 1});
  std::int64_t half = std::int64_t{1} << (sp11.dim_p() / 2 - 1);
  CHECK(spinor_dims(sp11) == std::pair<std::int64_t, std::int64_t>{half, half});
  for (const auto& d : all_descriptors(3)) {
    auto [p, m] = spinor_dims(build_root_system(d));
    CHECK(p == m);
  }
}
