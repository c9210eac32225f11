#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gwa/cyclotomic.hpp"

namespace gwa::modular {

/// A prime p = 1 (mod m) below 2^62 together with a primitive m-th root of unity mod p,
/// i.e. a degree-one prime of Q(zeta_m).
struct SplitPrime {
  std::uint64_t p = 0;
  std::uint64_t zeta = 1;
};

const SplitPrime& split_prime(int order);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Image under zeta -> sp.zeta; empty when a denominator vanishes mod p.
std::optional<std::uint64_t> reduce(const Rational& r, std::uint64_t p);
std::optional<std::uint64_t> reduce(const Cyclotomic& c, const SplitPrime& sp);

/// Degree of the gcd of two dense polynomials over F_p (index = degree, nonzero leading terms).
int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p);

}  // namespace gwa::modular
