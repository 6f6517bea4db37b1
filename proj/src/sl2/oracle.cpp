#include "hecke/error.hpp"
#include "hecke/sl2.hpp"

namespace hecke::sl2 {

std::vector<BigInt> delta_coeffs(int N) {
  if (N < 1) throw ValidationError("delta_coeffs requires N >= 1");
  // prod_{m>=1} (1 - q^m)^24 up to q^(N-1), one factor (1 - q^m) at a time.
  std::vector<BigInt> p(N, 0);
  p[0] = 1;
  for (int m = 1; m < N; ++m)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = N - 1; i >= m; --i) p[i] -= p[i - m];
  return p;  // p[i] = tau(i + 1)
}

int dim_cusp_forms(int k) {
  if (k % 2 != 0) throw ValidationError("weight must be even, got " + std::to_string(k));
  if (k < 4) throw ValidationError("weight must be at least 4, got " + std::to_string(k));
  int count = 0;
  for (int a = 0; 4 * a <= k; ++a)
    if ((k - 4 * a) % 6 == 0) ++count;
  return count - 1;
}

BigInt hurwitz_class_number_times_12(long long D) {
  if (D == 0) return -1;
  if (D < 0) throw ValidationError("Hurwitz class number needs D >= 0");
  if (D % 4 == 1 || D % 4 == 2) return 0;
  // Reduced forms (a, b, c), b^2 - 4ac = -D, |b| <= a <= c, b >= 0 when |b| = a or a = c.
  BigInt total = 0;
  for (long long a = 1; 3 * a * a <= D; ++a)
    for (long long b = -a + 1; b <= a; ++b) {
      long long num = b * b + D;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (a == c && b == 0) total += 6;
      else if (a == b && b == c) total += 4;
      else total += 12;
    }
  return total;
}

BigInt eichler_selberg(int k, long long n) {
  validate_weight(k);
  if (n < 1) throw ValidationError("eichler_selberg requires n >= 1");
  // Tr T_n = -1/2 sum_t P_k(t,n) H(4n - t^2) - 1/2 sum_{dd'=n} min(d,d')^(k-1)
  BigInt s = 0;
  for (long long t = 0; t * t <= 4 * n; ++t) {
    BigInt u0 = 1, u1 = t;  // P_k(t,n) = u_{k-2}, u_{j+1} = t u_j - n u_{j-1}
    for (int j = 1; j < k - 2; ++j) {
      BigInt u2 = t * u1 - n * u0;
      u0 = u1;
      u1 = u2;
    }
    BigInt p = k == 2 ? u0 : u1;
    BigInt term = p * hurwitz_class_number_times_12(4 * n - t * t);
    s += t == 0 ? term : 2 * term;  // P_k is even in t for even k
  }
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    s += 12 * boost::multiprecision::pow(BigInt(std::min(d, n / d)), k - 1);
  }
  if (s % 24 != 0) throw Error("Eichler-Selberg sum is not integral");
  return -s / 24;
}

void validate_weight(int k) {
  if (k % 2 != 0) throw ValidationError("weight k must be even, got " + std::to_string(k));
  if (k < 4)
    throw ValidationError("weight k must be at least 4; k < 4 is not in the regular discrete series range");
}

}  // namespace hecke::sl2
