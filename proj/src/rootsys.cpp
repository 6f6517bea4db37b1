#include "hecke/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

GroupDescriptor GroupDescriptor::parse(std::string_view name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
  if (s == "sl2r" || s == "sl(2,r)") return {Family::su, 1};

  static const std::regex re(R"((su|so|sp)\((\d+),1\))");
  std::smatch m;
  if (!std::regex_match(s, m, re))
    throw ValidationError("unsupported group '" + std::string(name) +
                          "' (expected su(n,1), so(2n,1), sp(n,1) or sl2r)");
  int p = std::stoi(m[2].str());
  if (p < 1) throw ValidationError("group rank must be positive in '" + std::string(name) + "'");
  if (m[1] == "su") return {Family::su, p};
  if (m[1] == "sp") return {Family::sp, p};
  if (p % 2 != 0)
    throw ValidationError("so(" + std::to_string(p) +
                          ",1) has no compact Cartan subgroup; only so(2n,1) is supported");
  return {Family::so, p / 2};
}

std::string GroupDescriptor::name() const {
  switch (family) {
    case Family::su: return "su(" + std::to_string(n) + ",1)";
    case Family::so: return "so(" + std::to_string(2 * n) + ",1)";
    case Family::sp: return "sp(" + std::to_string(n) + ",1)";
  }
  return {};
}

Weight Weight::operator+(const Weight& o) const {
  if (dim() != o.dim()) throw ValidationError("dimension mismatch in weight sum");
  Weight r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight Weight::scaled(const Rational& s) const {
  Weight r = *this;
  for (auto& c : r.coords) c *= s;
  return r;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? ", " : "") << to_string(coords[i]);
  os << ')';
  return os.str();
}

Weight WeylElement::apply(const Weight& w) const {
  if (w.dim() != dim) throw ValidationError("dimension mismatch in Weyl action");
  Weight r = Weight::zero(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) r.coords[i] += matrix[i * dim + j] * w.coords[j];
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  r.dim = dim;
  r.sign = sign * o.sign;
  r.matrix.assign(dim * dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      if (matrix[i * dim + k].numerator() == 0) continue;
      for (std::size_t j = 0; j < dim; ++j)
        r.matrix[i * dim + j] += matrix[i * dim + k] * o.matrix[k * dim + j];
    }
  return r;
}

Rational WeylElement::determinant() const {
  // Gaussian elimination over the rationals.
  std::vector<Rational> a = matrix;
  Rational det(1);
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t p = c;
    while (p < dim && a[p * dim + c].numerator() == 0) ++p;
    if (p == dim) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < dim; ++j) std::swap(a[p * dim + j], a[c * dim + j]);
      det = -det;
    }
    det *= a[c * dim + c];
    for (std::size_t r = c + 1; r < dim; ++r) {
      Rational f = a[r * dim + c] / a[c * dim + c];
      if (f.numerator() == 0) continue;
      for (std::size_t j = c; j < dim; ++j) a[r * dim + j] -= f * a[c * dim + j];
    }
  }
  return det;
}

WeylElement WeylElement::identity(std::size_t dim) {
  WeylElement e;
  e.dim = dim;
  e.matrix.assign(dim * dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) e.matrix[i * dim + i] = 1;
  return e;
}

// The reflection only needs the form up to scale on the span of the roots,
// and every family uses a multiple of the coordinate dot product there.
WeylElement WeylElement::reflection(const Weight& root) {
  const std::size_t d = root.dim();
  WeylElement s = identity(d);
  Rational nn = dot(root.coords, root.coords);
  if (nn.numerator() == 0) throw ValidationError("cannot reflect in the zero vector");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      s.matrix[i * d + j] -= Rational(2) * root.coords[i] * root.coords[j] / nn;
  s.sign = -1;
  return s;
}

std::vector<Root> RootSystem::positive_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (r.positive) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::positive_compact_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (r.positive && r.compact()) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::positive_noncompact_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (r.positive && !r.compact()) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::simple_roots() const {
  auto pos = positive_roots();
  std::set<Weight> sums;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) sums.insert(pos[i].coords + pos[j].coords);
  std::vector<Root> out;
  for (const auto& r : pos)
    if (!sums.count(r.coords)) out.push_back(r);
  return out;
}

Weight RootSystem::project(const Weight& w) const {
  if (w.dim() != dim_) throw ValidationError("weight has dimension " + std::to_string(w.dim()) +
                                             ", expected " + std::to_string(dim_));
  if (descriptor_.family != Family::su) return w;
  Rational mean(0);
  for (const auto& c : w.coords) mean += c;
  mean /= Rational(static_cast<std::int64_t>(dim_));
  Weight r = w;
  for (auto& c : r.coords) c -= mean;
  return r;
}

bool RootSystem::contains_root(const Weight& w) const {
  return std::any_of(roots_.begin(), roots_.end(), [&](const Root& r) { return r.coords == w; });
}

namespace {

Weight unit(std::size_t dim, std::size_t i, std::int64_t c = 1) {
  Weight w = Weight::zero(dim);
  w.coords[i] = c;
  return w;
}

void add_pair(std::vector<Root>& roots, const Weight& pos, RootKind kind) {
  roots.push_back({pos, kind, true});
  roots.push_back({-pos, kind, false});
}

}  // namespace

RootSystem build_root_system(const GroupDescriptor& desc) {
  if (desc.n < 1) throw ValidationError("group rank must be positive");
  RootSystem rs;
  rs.descriptor_ = desc;
  const auto n = static_cast<std::size_t>(desc.n);

  switch (desc.family) {
    case Family::su: {
      // A_n on e_1..e_{n+1}; k = s(u(n) + u(1)) fixes e_{n+1}.
      rs.dim_ = n + 1;
      for (std::size_t i = 0; i < n + 1; ++i)
        for (std::size_t j = i + 1; j < n + 1; ++j)
          add_pair(rs.roots_, unit(n + 1, i) - unit(n + 1, j),
                   j < n ? RootKind::compact : RootKind::noncompact);
      rs.cayley_root_ = unit(n + 1, 0) - unit(n + 1, n);
      rs.form_scale_ = 1;
      break;
    }
    case Family::so: {
      // B_n on e_1..e_n; k = so(2n) carries the long roots.
      rs.dim_ = n;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          add_pair(rs.roots_, unit(n, i) - unit(n, j), RootKind::compact);
          add_pair(rs.roots_, unit(n, i) + unit(n, j), RootKind::compact);
        }
        add_pair(rs.roots_, unit(n, i), RootKind::noncompact);
      }
      rs.cayley_root_ = unit(n, 0);
      rs.form_scale_ = 2;
      break;
    }
    case Family::sp: {
      // C_{n+1} on e_1..e_{n+1}; k = sp(n) + sp(1), the sp(1) root is 2e_{n+1}.
      rs.dim_ = n + 1;
      for (std::size_t i = 0; i < n + 1; ++i) {
        for (std::size_t j = i + 1; j < n + 1; ++j) {
          auto kind = j < n ? RootKind::compact : RootKind::noncompact;
          add_pair(rs.roots_, unit(n + 1, i) - unit(n + 1, j), kind);
          add_pair(rs.roots_, unit(n + 1, i) + unit(n + 1, j), kind);
        }
        add_pair(rs.roots_, unit(n + 1, i, 2), RootKind::compact);
      }
      rs.cayley_root_ = unit(n + 1, 0) - unit(n + 1, n);
      rs.form_scale_ = 1;
      break;
    }
  }

  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    if (a.positive != b.positive) return a.positive;
    return b.coords < a.coords;
  });

  rs.rho_g_ = rs.rho_k_ = rs.rho_p_ = Weight::zero(rs.dim_);
  for (const auto& r : rs.roots_) {
    if (!r.positive) continue;
    auto half = r.coords.scaled(Rational(1, 2));
    rs.rho_g_ = rs.rho_g_ + half;
    if (r.compact()) rs.rho_k_ = rs.rho_k_ + half;
    else rs.rho_p_ = rs.rho_p_ + half;
    if (!r.compact()) rs.dim_p_ += 2;
  }

  // Restricted roots: a root g lands on the multiple <g, b^v>/2 of the real
  // root, where b is the Cayley root.
  std::map<Rational, int> counts;
  for (const auto& r : rs.roots_) {
    auto v = coroot_pairing(rs, r.coords, rs.cayley_root_);
    if (v > 0) counts[v]++;
  }
  if (counts.size() == 2) {
    rs.dim_n1_ = counts[Rational(1)];
    rs.dim_n2_ = counts[Rational(2)];
  } else if (desc.family == Family::so) {
    rs.dim_n1_ = counts.begin()->second;
  } else {
    rs.dim_n2_ = counts.begin()->second;
  }
  return rs;
}

Rational inner(const RootSystem& rs, const Weight& a, const Weight& b) {
  if (a.dim() != b.dim()) throw ValidationError("dimension mismatch in inner product");
  return rs.form_scale() * dot(rs.project(a).coords, rs.project(b).coords);
}

Rational coroot_pairing(const RootSystem& rs, const Weight& w, const Weight& a) {
  return Rational(2) * inner(rs, w, a) / inner(rs, a, a);
}

std::vector<WeylElement> reflection_closure(std::size_t dim, const std::vector<Weight>& generators) {
  std::vector<WeylElement> gens;
  for (const auto& g : generators) gens.push_back(WeylElement::reflection(g));
  std::set<WeylElement> seen{WeylElement::identity(dim)};
  std::vector<WeylElement> frontier{WeylElement::identity(dim)};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        auto ws = w * s;
        if (seen.insert(ws).second) next.push_back(ws);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, WeylSubgroup sub) {
  std::vector<Weight> gens;
  if (sub == WeylSubgroup::full) {
    for (const auto& r : rs.simple_roots()) gens.push_back(r.coords);
  } else {
    for (const auto& r : rs.positive_compact_roots()) gens.push_back(r.coords);
  }
  return reflection_closure(rs.dim(), gens);
}

bool is_integral(const RootSystem& rs, const Weight& mu) {
  for (const auto& r : rs.roots())
    if (coroot_pairing(rs, mu, r.coords).denominator() != 1) return false;
  return true;
}

WeightClass classify_weight(const RootSystem& rs, const Weight& mu) {
  Weight lambda = mu + rs.rho_k();
  for (const auto& r : rs.positive_compact_roots())
    if (inner(rs, lambda, r.coords) <= 0)
      throw ValidationError("mu + rho_k = " + lambda.str() +
                            " is not dominant regular for the compact root " + r.coords.str());
  WeightClass out;
  for (const auto& r : rs.positive_noncompact_roots()) {
    auto p = inner(rs, lambda, r.coords);
    if (p < 0)
      throw ValidationError("mu + rho_k = " + lambda.str() +
                            " lies outside the fixed chamber (negative on " + r.coords.str() + ")");
    if (p.numerator() == 0 && out.regular) {
      out.regular = false;
      out.witness = r.coords;
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> spinor_dims(const RootSystem& rs) {
  std::int64_t d = std::int64_t{1} << (rs.dim_p() / 2 - 1);
  return {d, d};
}

}  // namespace hecke
