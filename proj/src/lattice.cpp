#include "gwa/lattice.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>

namespace gwa {

LatticeElement lattice_zero(std::size_t n) {
  return LatticeElement(n, 0);
}

LatticeElement lattice_unit(std::size_t n, std::size_t i, int scale) {
  LatticeElement e(n, 0);
  e.at(i) = scale;
  return e;
}

LatticeElement lattice_add(const LatticeElement& a, const LatticeElement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice dimension mismatch");
  LatticeElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeElement lattice_neg(const LatticeElement& a) {
  LatticeElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::string lattice_str(const LatticeElement& a) {
  std::string s = "e(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    case Membership::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Row = std::vector<mpz_class>;

struct Echelon {
  std::vector<Row> rows;       // echelon rows
  std::vector<Row> transform;  // rows[i] = sum_j transform[i][j] * generator_j
  std::vector<std::size_t> pivots;
};

void axpy(Row& y, const mpz_class& a, const Row& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Echelon echelon(const std::vector<LatticeElement>& gens, std::size_t dim) {
  const std::size_t k = gens.size();
  std::vector<Row> a(k, Row(dim)), u(k, Row(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (gens[i].size() != dim) throw std::invalid_argument("lattice generator has wrong dimension");
    for (std::size_t j = 0; j < dim; ++j) a[i][j] = gens[i][j];
    u[i][i] = 1;
  }
  Echelon e;
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < k; ++col) {
    // Euclid on the column until only row `top` is nonzero there.
    for (;;) {
      std::size_t best = k;
      for (std::size_t r = top; r < k; ++r)
        if (a[r][col] != 0 && (best == k || abs(a[r][col]) < abs(a[best][col]))) best = r;
      if (best == k) break;
      std::swap(a[top], a[best]);
      std::swap(u[top], u[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < k; ++r) {
        if (a[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[top][col].get_mpz_t());
        axpy(a[r], -q, a[top]);
        axpy(u[r], -q, u[top]);
        if (a[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[top][col] == 0) continue;
    e.rows.push_back(a[top]);
    e.transform.push_back(u[top]);
    e.pivots.push_back(col);
    ++top;
  }
  return e;
}

MembershipResult group_membership(const LatticeSubmonoidSpec& spec, const LatticeElement& v) {
  const Echelon e = echelon(spec.generators, spec.dim);
  Row rest(spec.dim), coef(spec.generators.size());
  for (std::size_t j = 0; j < spec.dim; ++j) rest[j] = v[j];
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const std::size_t col = e.pivots[i];
    if (!mpz_divisible_p(rest[col].get_mpz_t(), e.rows[i][col].get_mpz_t())) return {};
    const mpz_class t = rest[col] / e.rows[i][col];
    axpy(rest, -t, e.rows[i]);
    axpy(coef, t, e.transform[i]);
  }
  for (const auto& x : rest)
    if (x != 0) return {};
  MembershipResult r{Membership::yes, {}};
  for (const auto& c : coef) {
    if (!c.fits_slong_p()) throw std::overflow_error("lattice certificate coefficient overflow");
    r.certificate.push_back(c.get_si());
  }
  return r;
}

long dot(const std::vector<int>& w, const LatticeElement& v) {
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<long>(w[i]) * v[i];
  return s;
}

/// Largest possible number of summands, if some w in {-1,0,1}^n is positive on all
/// nonzero generators.
std::optional<long> summand_cap(const LatticeSubmonoidSpec& spec, const LatticeElement& v) {
  const std::size_t n = spec.dim;
  if (n > 8) return std::nullopt;
  std::vector<int> w(n, -1);
  std::optional<long> best;
  for (;;) {
    long lo = -1;
    bool ok = true;
    for (const auto& g : spec.generators) {
      const long d = dot(w, g);
      if (d == 0 && g == lattice_zero(n)) continue;
      if (d <= 0) {
        ok = false;
        break;
      }
      lo = lo < 0 ? d : std::min(lo, d);
    }
    if (ok) {
      const long wv = dot(w, v);
      const long cap = lo < 0 ? (wv == 0 ? 0 : -1) : (wv < 0 ? -1 : wv / lo);
      if (!best || cap < *best) best = cap;
    }
    std::size_t i = 0;
    while (i < n && w[i] == 1) w[i++] = -1;
    if (i == n) break;
    ++w[i];
  }
  return best;
}

MembershipResult monoid_membership(const LatticeSubmonoidSpec& spec, const LatticeElement& v) {
  const std::size_t k = spec.generators.size();
  if (v == lattice_zero(spec.dim)) return {Membership::yes, std::vector<long>(k, 0)};
  if (group_membership(spec, v).status == Membership::no) return {};
  const std::optional<long> cap = summand_cap(spec, v);
  if (cap && *cap < 0) return {};

  // Breadth-first over the number of summands; parent links give the certificate.
  std::map<LatticeElement, std::pair<LatticeElement, std::size_t>> parent;
  std::vector<LatticeElement> layer{lattice_zero(spec.dim)};
  parent.emplace(layer[0], std::make_pair(layer[0], k));
  const long limit = cap ? std::min<long>(*cap, spec.bound) : spec.bound;
  for (long depth = 1; depth <= limit && !layer.empty(); ++depth) {
    std::vector<LatticeElement> next;
    for (const auto& x : layer) {
      for (std::size_t g = 0; g < k; ++g) {
        LatticeElement y = lattice_add(x, spec.generators[g]);
        if (!parent.emplace(y, std::make_pair(x, g)).second) continue;
        if (y == v) {
          MembershipResult r{Membership::yes, std::vector<long>(k, 0)};
          for (LatticeElement cur = y; parent.at(cur).second != k; cur = parent.at(cur).first)
            ++r.certificate[parent.at(cur).second];
          return r;
        }
        next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }
  if (cap && *cap <= spec.bound) return {};
  return {Membership::inconclusive, {}};
}

}  // namespace

MembershipResult membership(const LatticeSubmonoidSpec& spec, const LatticeElement& v) {
  if (v.size() != spec.dim) throw std::invalid_argument("lattice element has wrong dimension");
  if (spec.mode == LatticeSubmonoidSpec::Mode::group) return group_membership(spec, v);
  if (spec.bound < 0) throw std::invalid_argument("monoid search bound must be nonnegative");
  return monoid_membership(spec, v);
}

std::size_t lattice_rank(const std::vector<LatticeElement>& gens, std::size_t dim) {
  return echelon(gens, dim).rows.size();
}

}  // namespace gwa
