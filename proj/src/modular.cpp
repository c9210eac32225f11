#include "gwa/modular.hpp"

#include <map>
#include <mutex>

namespace gwa::modular {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

namespace {

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    out.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) out.push_back(m);
  return out;
}

SplitPrime find_split_prime(int order) {
  const std::uint64_t m = static_cast<std::uint64_t>(order);
  std::uint64_t k = (std::uint64_t{1} << 61) / m;
  while (!is_prime(k * m + 1)) ++k;
  SplitPrime sp;
  sp.p = k * m + 1;
  const auto factors = prime_factors(m);
  for (std::uint64_t g = 2;; ++g) {
    const std::uint64_t z = pow_mod(g, (sp.p - 1) / m, sp.p);
    bool primitive = true;
    for (auto q : factors)
      if (pow_mod(z, m / q, sp.p) == 1) primitive = false;
    if (primitive) {
      sp.zeta = z;
      return sp;
    }
  }
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

}  // namespace

const SplitPrime& split_prime(int order) {
  static std::mutex mu;
  static std::map<int, SplitPrime> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, find_split_prime(order)).first;
  return it->second;
}

std::optional<std::uint64_t> reduce(const Rational& r, std::uint64_t p) {
  const std::uint64_t d = mpz_fdiv_ui(r.get_den_mpz_t(), p);
  if (d == 0) return std::nullopt;
  const std::uint64_t n = mpz_fdiv_ui(r.get_num_mpz_t(), p);
  return mul_mod(n, inv_mod(d, p), p);
}

std::optional<std::uint64_t> reduce(const Cyclotomic& c, const SplitPrime& sp) {
  std::uint64_t acc = 0, power = 1;
  for (const auto& q : c.coeffs()) {
    if (q != 0) {
      const auto v = reduce(q, sp.p);
      if (!v) return std::nullopt;
      acc = (acc + mul_mod(*v, power, sp.p)) % sp.p;
    }
    power = mul_mod(power, sp.zeta, sp.p);
  }
  return acc;
}

int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t li = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), li, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mul_mod(f, b[i], p)) % p;
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace gwa::modular
