#include "gwa/reflection_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gwa {

namespace {

int mod(long a, int m) {
  const long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

ReflectionGroupElement::ReflectionGroupElement(int m, std::vector<int> diag, std::vector<std::size_t> perm)
    : m_(m), diag_(std::move(diag)), perm_(std::move(perm)) {
  if (m < 1) throw std::invalid_argument("reflection group order m must be >= 1");
  if (diag_.size() != perm_.size()) throw std::invalid_argument("diagonal and permutation lengths differ");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t x : perm_) {
    if (x >= perm_.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
  for (auto& c : diag_) c = mod(c, m_);
}

ReflectionGroupElement ReflectionGroupElement::identity(int m, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return ReflectionGroupElement(m, std::vector<int>(n, 0), std::move(p));
}

ReflectionGroupElement ReflectionGroupElement::transposition(int m, std::size_t n, std::size_t i, std::size_t j) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p.at(i), p.at(j));
  return ReflectionGroupElement(m, std::vector<int>(n, 0), std::move(p));
}

ReflectionGroupElement ReflectionGroupElement::diagonal(int m, std::vector<int> diag) {
  std::vector<std::size_t> p(diag.size());
  std::iota(p.begin(), p.end(), 0);
  return ReflectionGroupElement(m, std::move(diag), std::move(p));
}

bool ReflectionGroupElement::is_identity() const {
  return is_permutation() && std::is_sorted(perm_.begin(), perm_.end());
}

bool ReflectionGroupElement::is_permutation() const {
  return std::all_of(diag_.begin(), diag_.end(), [](int c) { return c == 0; });
}

int ReflectionGroupElement::diag_sum() const {
  return std::accumulate(diag_.begin(), diag_.end(), 0);
}

int ReflectionGroupElement::sign() const {
  int s = 1;
  std::vector<bool> seen(n(), false);
  for (std::size_t i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

ReflectionGroupElement ReflectionGroupElement::inverse() const {
  // g e_i = xi^{c_{pi i}} e_{pi i}; so g^{-1} e_j = xi^{-c_j} e_{pi^{-1} j}.
  std::vector<std::size_t> inv(n());
  for (std::size_t i = 0; i < n(); ++i) inv[perm_[i]] = i;
  std::vector<int> d(n());
  for (std::size_t j = 0; j < n(); ++j) d[inv[j]] = -diag_[j];
  return ReflectionGroupElement(m_, std::move(d), std::move(inv));
}

ReflectionGroupElement operator*(const ReflectionGroupElement& g, const ReflectionGroupElement& h) {
  if (g.m_ != h.m_ || g.n() != h.n()) throw std::invalid_argument("reflection group elements are incompatible");
  const std::size_t n = g.n();
  std::vector<std::size_t> p(n);
  std::vector<int> c(g.diag_);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = g.perm_[h.perm_[i]];
    c[g.perm_[h.perm_[i]]] += h.diag_[h.perm_[i]];
  }
  return ReflectionGroupElement(g.m_, std::move(c), std::move(p));
}

bool operator<(const ReflectionGroupElement& a, const ReflectionGroupElement& b) {
  if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
  return a.diag_ < b.diag_;
}

LatticeElement ReflectionGroupElement::act_on_lattice(const LatticeElement& v) const {
  if (v.size() != n()) throw std::invalid_argument("lattice dimension does not match group rank");
  LatticeElement r(n());
  for (std::size_t i = 0; i < n(); ++i) r[perm_[i]] = v[i];
  return r;
}

std::vector<std::size_t> ReflectionGroupElement::variable_permutation(std::size_t nvars) const {
  if (n() == 0 || nvars % n() != 0)
    throw std::invalid_argument("variable count " + std::to_string(nvars) + " is not a multiple of the group rank");
  const std::size_t b = nvars / n();
  std::vector<std::size_t> out(nvars);
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < b; ++j) out[b * i + j] = b * perm_[i] + j;
  return out;
}

std::string ReflectionGroupElement::str() const {
  std::string s = "diag(";
  for (std::size_t i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(diag_[i]);
  s += ") perm(";
  for (std::size_t i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(perm_[i] + 1);
  return s + ")";
}

bool in_gmpn(const ReflectionGroupElement& g, int p) {
  return p >= 1 && g.diag_sum() % p == 0;
}

namespace {

void check_gmpn(int m, int p, std::size_t n) {
  if (m < 1 || p < 1) throw std::invalid_argument("G(m,p,n) needs m >= 1 and p >= 1");
  if (m % p != 0)
    throw std::invalid_argument("p = " + std::to_string(p) + " does not divide m = " + std::to_string(m));
  if (n < 1) throw std::invalid_argument("G(m,p,n) needs n >= 1");
}

}  // namespace

std::vector<ReflectionGroupElement> group_elements(int m, int p, std::size_t n, std::size_t max_size) {
  check_gmpn(m, p, n);
  double size = 1;
  for (std::size_t i = 1; i <= n; ++i) size *= static_cast<double>(m) * static_cast<double>(i);
  size /= p;
  if (size > static_cast<double>(max_size))
    throw std::length_error("G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) +
                            ") exceeds the enumeration bound of " + std::to_string(max_size) + " elements");
  std::vector<ReflectionGroupElement> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> c(n, 0);
    for (;;) {
      if (std::accumulate(c.begin(), c.end(), 0) % p == 0) out.emplace_back(m, c, perm);
      std::size_t i = 0;
      while (i < n && c[i] == m - 1) c[i++] = 0;
      if (i == n) break;
      ++c[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<ReflectionGroupElement> group_generators(int m, int p, std::size_t n) {
  check_gmpn(m, p, n);
  std::vector<ReflectionGroupElement> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(ReflectionGroupElement::transposition(m, n, i, i + 1));
  if (m > 1) {
    if (n >= 2) {
      std::vector<int> c(n, 0);
      c[0] = 1;
      c[1] = -1;
      gens.push_back(ReflectionGroupElement::diagonal(m, std::move(c)));
    }
    if (p < m) {
      std::vector<int> c(n, 0);
      c[0] = p;
      gens.push_back(ReflectionGroupElement::diagonal(m, std::move(c)));
    }
  }
  if (gens.empty()) gens.push_back(ReflectionGroupElement::identity(m, n));
  return gens;
}

Scalar root_of_unity(const FieldPtr& field, int m) {
  const int m0 = field->cyclotomic_order();
  if (m < 1 || (m > 2 && m0 % m != 0))
    throw std::invalid_argument("field with cyclotomic order " + std::to_string(m0) +
                                " has no primitive " + std::to_string(m) + "-th root of unity");
  if (m <= 2) return Scalar(field, m == 1 ? 1L : -1L);
  return Scalar::zeta(field).pow(m0 / m);
}

}  // namespace gwa
