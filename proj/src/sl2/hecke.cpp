#include <algorithm>
#include <sstream>

#include "hecke/error.hpp"
#include "hecke/sl2.hpp"

namespace hecke::sl2 {

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string IntegerMatrix::str() const {
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return os.str();
}

HeckeCosetSet hecke_reps(long long n) {
  if (n < 1) throw ValidationError("hecke_reps requires n >= 1");
  HeckeCosetSet out;
  out.n = n;
  for (long long a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    long long d = n / a;
    for (long long b = 0; b < d; ++b) out.reps.push_back({a, b, 0, d});
  }
  return out;
}

bool same_left_coset(const IntegerMatrix& x, const IntegerMatrix& y) {
  // x adj(y) / det(y) must be integral with determinant 1.
  BigInt n = y.det();
  if (n == 0 || x.det() != n) return false;
  IntegerMatrix adj{y.d, -y.b, -y.c, y.a};
  IntegerMatrix p = x * adj;
  for (const BigInt* e : {&p.a, &p.b, &p.c, &p.d})
    if (*e % n != 0) return false;
  return true;
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::central: return "central";
    case ClassKind::elliptic: return "elliptic";
    case ClassKind::hyperbolic: return "hyperbolic";
    case ClassKind::parabolic_ss: return "parabolic_ss";
    case ClassKind::parabolic_nss: return "parabolic_nss";
  }
  return {};
}

ClassTag classify_element(const IntegerMatrix& m) {
  BigInt n = m.det();
  if (n <= 0) throw ValidationError("classify_element requires positive determinant, got " + m.str());
  ClassTag tag;
  tag.trace = m.trace();
  tag.disc = tag.trace * tag.trace - 4 * n;
  if (m.b == 0 && m.c == 0 && m.a == m.d) tag.kind = ClassKind::central;
  else if (tag.disc < 0) tag.kind = ClassKind::elliptic;
  else if (tag.disc > 0) tag.kind = ClassKind::hyperbolic;
  else tag.kind = ClassKind::parabolic_nss;  // scalar matrices were caught above
  return tag;
}

std::vector<IntegerMatrix> enumerate_det(long long n, long long bound) {
  std::vector<IntegerMatrix> out;
  for (long long a = -bound; a <= bound; ++a)
    for (long long d = -bound; d <= bound; ++d) {
      long long p = a * d - n;  // = bc
      for (long long b = -bound; b <= bound; ++b) {
        if (b == 0) {
          if (p != 0) continue;
          for (long long c = -bound; c <= bound; ++c) out.push_back({a, 0, c, d});
          continue;
        }
        if (p % b != 0) continue;
        long long c = p / b;
        if (c < -bound || c > bound) continue;
        out.push_back({a, b, c, d});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hecke::sl2
