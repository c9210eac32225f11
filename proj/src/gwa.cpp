#include "gwa/gwa.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace gwa {

namespace {

std::string idx(std::size_t i) {
  return std::to_string(i + 1);
}

// Rank over Q by elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Parameter exponents of a scalar of the form c * q1^k1 * ... (single-term numerator
// and denominator).
std::optional<std::vector<int>> parameter_exponents(const Scalar& s) {
  if (s.num().size() != 1 || s.den().size() != 1) return std::nullopt;
  std::vector<int> e = s.num().terms()[0].first;
  const auto& d = s.den().terms()[0].first;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= d[i];
  return e;
}

Poly extend_poly(const Poly& f, const RingPtr& target, std::size_t offset) {
  std::vector<Poly::Terms::Term> terms;
  for (const auto& [e, c] : f.terms().terms()) {
    Exponents x(target->nvars(), 0);
    std::copy(e.begin(), e.end(), x.begin() + static_cast<long>(offset));
    terms.emplace_back(std::move(x), c);
  }
  return Poly(target, Poly::Terms(target->nvars(), std::move(terms)));
}

Automorphism extend_auto(const Automorphism& s, const RingPtr& target, std::size_t offset) {
  std::vector<Poly> fwd, inv;
  const std::size_t n = s.ring()->nvars();
  for (std::size_t k = 0; k < target->nvars(); ++k) {
    if (k >= offset && k < offset + n) {
      fwd.push_back(extend_poly(s.forward()[k - offset], target, offset));
      inv.push_back(extend_poly(s.backward()[k - offset], target, offset));
    } else {
      fwd.push_back(Poly::variable(target, k));
      inv.push_back(Poly::variable(target, k));
    }
  }
  return Automorphism(target, std::move(fwd), std::move(inv), s.name());
}

}  // namespace

GWAValidation gwa_validate(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Automorphism>& sigma) {
  GWAValidation v;
  auto fail = [&](GWAValidation::Kind k, std::size_t i, std::size_t j, std::string w) {
    v.kind = k;
    v.i = i;
    v.j = j;
    v.witness = std::move(w);
    return v;
  };
  if (a.size() != sigma.size())
    return fail(GWAValidation::Kind::bad_shape, 0, 0,
                std::to_string(a.size()) + " elements a_i but " + std::to_string(sigma.size()) + " automorphisms");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].ring()->compatible(*ring) || !sigma[i].ring()->compatible(*ring))
      return fail(GWAValidation::Kind::bad_shape, i + 1, 0, "a_" + idx(i) + " or sigma_" + idx(i) + " lives on another ring");
    if (a[i].is_zero()) return fail(GWAValidation::Kind::zero_a, i + 1, 0, "a_" + idx(i) + " = 0");
  }
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (!commute(sigma[i], sigma[j]))
        return fail(GWAValidation::Kind::not_commuting, i + 1, j + 1,
                    "sigma_" + idx(i) + " sigma_" + idx(j) + " != sigma_" + idx(j) + " sigma_" + idx(i) + ", (i,j)=(" +
                        idx(i) + "," + idx(j) + ")");
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      const Poly img = sigma[i].apply(a[j]);
      if (!(img == a[j]))
        return fail(GWAValidation::Kind::moves_a, i + 1, j + 1,
                    "sigma_" + idx(i) + "(a_" + idx(j) + ") = " + img.str() + " != " + a[j].str() + ", (i,j)=(" +
                        idx(i) + "," + idx(j) + ")");
    }
  return v;
}

Membership sigma_independence(const std::vector<Automorphism>& sigma) {
  const std::size_t n = sigma.size();
  if (n == 0) return Membership::yes;
  const RingPtr& ring = sigma[0].ring();
  const std::size_t nv = ring->nvars(), np = ring->field()->nparams();
  // lambda[i][j], c[i][j] for sigma_i(h_j) = lambda h_j + c.
  std::vector<std::vector<Scalar>> lambda(n), shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      Scalar l(ring->field(), 0L), c(ring->field(), 0L);
      for (const auto& [e, coef] : sigma[i].forward()[j].terms().terms()) {
        int total = 0;
        for (int x : e) total += x;
        if (total == 0) {
          c = coef;
        } else if (total == 1 && e[j] == 1) {
          l = coef;
        } else {
          return Membership::inconclusive;
        }
      }
      lambda[i].push_back(l);
      shift[i].push_back(c);
    }
  }
  std::vector<std::vector<Rational>> rows(n);
  bool all_shift = true, complete = true;
  for (std::size_t j = 0; j < nv; ++j) {
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) pure = pure && lambda[i][j].is_one();
    all_shift = all_shift && pure;
    if (pure) {
      bool rational = true;
      for (std::size_t i = 0; i < n; ++i) rational = rational && shift[i][j].is_rational();
      if (!rational) {
        complete = false;
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) rows[i].push_back(shift[i][j].rational_value());
      continue;
    }
    complete = false;
    std::vector<std::vector<int>> ex;
    for (std::size_t i = 0; i < n; ++i) {
      auto e = parameter_exponents(lambda[i][j]);
      if (!e) break;
      ex.push_back(*e);
    }
    if (ex.size() != n) continue;
    for (std::size_t k = 0; k < np; ++k)
      for (std::size_t i = 0; i < n; ++i) rows[i].push_back(Rational(ex[i][k]));
  }
  if (rational_rank(rows) == n) return Membership::yes;
  return all_shift && complete ? Membership::no : Membership::inconclusive;
}

GWAPresentation::GWAPresentation(RingPtr ring, std::vector<Poly> a, std::vector<Automorphism> sigma, std::string name,
                                 bool assume_independent)
    : ring_(std::move(ring)), a_(std::move(a)), sigma_(std::move(sigma)), name_(std::move(name)),
      assumed_independent_(assume_independent) {
  const auto v = gwa_validate(ring_, a_, sigma_);
  if (!v.ok()) throw std::invalid_argument("invalid GWA presentation: " + v.witness);
  ctx_ = make_skew_context(ring_, sigma_);
  independence_ = sigma_independence(sigma_);
}

GWAPtr make_gwa(RingPtr ring, std::vector<Poly> a, std::vector<Automorphism> sigma, std::string name,
                bool assume_independent) {
  return std::make_shared<const GWAPresentation>(std::move(ring), std::move(a), std::move(sigma), std::move(name),
                                                 assume_independent);
}

Poly GWAPresentation::rank_one_coefficient(std::size_t i, int s, int t) const {
  Poly c = Poly(ring_, 1L);
  if ((s >= 0 && t >= 0) || (s <= 0 && t <= 0)) return c;
  const std::size_t n = rank();
  const int k = std::min(std::abs(s), std::abs(t));
  for (int j = 0; j < k; ++j) {
    // X^s Y^t: sigma^{s-j}(a); Y^|s| X^t: sigma^{-(|s|-1-j)}(a).
    const int power = s > 0 ? s - j : -(-s - 1 - j);
    c *= twist(lattice_unit(n, i, power)).apply(a_[i]);
  }
  return c;
}

Poly GWAPresentation::twisted_product(std::size_t i, int m) const {
  return rank_one_coefficient(i, -m, m);
}

std::string GWAPresentation::str() const {
  std::string s = name_.empty() ? "GWA" : name_;
  s += " over " + std::string(ring_->laurent() ? "Laurent " : "") + "D[";
  for (std::size_t k = 0; k < ring_->nvars(); ++k) s += (k ? ", " : "") + ring_->variables()[k];
  s += "]";
  for (std::size_t i = 0; i < rank(); ++i)
    s += "; a_" + idx(i) + " = " + a_[i].str() + ", sigma_" + idx(i) + ": " + sigma_[i].str();
  return s;
}

GWAElement::GWAElement(GWAPtr p) : p_(std::move(p)) {}

GWAElement::GWAElement(GWAPtr p, const Poly& coeff, const LatticeElement& alpha) : p_(std::move(p)) {
  if (alpha.size() != p_->rank()) throw std::invalid_argument("word index has wrong rank");
  add_term(alpha, coeff);
}

GWAElement GWAElement::one(const GWAPtr& p) {
  return scalar(p, Poly(p->ring(), 1L));
}

GWAElement GWAElement::scalar(const GWAPtr& p, const Poly& d) {
  return GWAElement(p, d, lattice_zero(p->rank()));
}

GWAElement GWAElement::X(const GWAPtr& p, std::size_t i, int power) {
  if (i >= p->rank()) throw std::out_of_range("generator index out of range");
  return word(p, lattice_unit(p->rank(), i, power));
}

GWAElement GWAElement::Y(const GWAPtr& p, std::size_t i, int power) {
  if (i >= p->rank()) throw std::out_of_range("generator index out of range");
  return word(p, lattice_unit(p->rank(), i, -power));
}

GWAElement GWAElement::word(const GWAPtr& p, const LatticeElement& alpha) {
  return GWAElement(p, Poly(p->ring(), 1L), alpha);
}

Poly GWAElement::coefficient(const LatticeElement& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Poly(p_->ring()) : it->second;
}

void GWAElement::add_term(const LatticeElement& alpha, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void GWAElement::check(const GWAElement& o) const {
  if (p_ != o.p_) throw std::invalid_argument("GWA elements from different presentations");
}

GWAElement GWAElement::operator-() const {
  GWAElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

GWAElement& GWAElement::operator+=(const GWAElement& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GWAElement& GWAElement::operator-=(const GWAElement& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GWAElement operator*(const GWAElement& u, const GWAElement& v) {
  u.check(v);
  const GWAPresentation& p = *u.p_;
  GWAElement r(u.p_);
  for (const auto& [alpha, d] : u.terms_) {
    const Automorphism& tw = p.twist(alpha);
    for (const auto& [beta, e] : v.terms_) {
      Poly c = d * tw.apply(e);
      for (std::size_t i = 0; i < p.rank(); ++i) {
        if ((alpha[i] > 0 && beta[i] < 0) || (alpha[i] < 0 && beta[i] > 0))
          c *= p.rank_one_coefficient(i, alpha[i], beta[i]);
      }
      r.add_term(lattice_add(alpha, beta), c);
    }
  }
  return r;
}

bool operator==(const GWAElement& a, const GWAElement& b) {
  a.check(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

GWAElement GWAElement::scaled(const Scalar& c) const {
  GWAElement r(p_);
  for (const auto& [m, d] : terms_) r.add_term(m, d.scaled(c));
  return r;
}

GWAElement GWAElement::left_mul(const Poly& d) const {
  GWAElement r(p_);
  for (const auto& [m, c] : terms_) r.add_term(m, d * c);
  return r;
}

GWAElement GWAElement::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a GWA element");
  GWAElement out = one(p_), base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

std::string word_str(const LatticeElement& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += (alpha[i] > 0 ? "X" : "Y") + idx(i);
    if (std::abs(alpha[i]) > 1) s += "^" + std::to_string(std::abs(alpha[i]));
  }
  return s.empty() ? "1" : s;
}

std::string GWAElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    const std::string c = it->second.str();
    const std::string w = word_str(it->first);
    if (w == "1")
      s += c;
    else if (c == "1")
      s += w;
    else
      s += (c.find(' ') == std::string::npos ? c : "(" + c + ")") + "*" + w;
  }
  return s;
}

GWAElement gwa_mul(const GWAElement& u, const GWAElement& v) {
  return u * v;
}

Word term_word(const GWAPtr& p, const Poly& coeff, const LatticeElement& alpha) {
  Word w{WordToken::c(coeff)};
  for (std::size_t i = 0; i < p->rank(); ++i)
    for (int k = 0; k < std::abs(alpha[i]); ++k) w.push_back(alpha[i] > 0 ? WordToken::x(i) : WordToken::y(i));
  return w;
}

GWAElement rewrite_word(const GWAPtr& p, const Word& input, std::mt19937_64* rng) {
  using K = WordToken::Kind;
  Word w = input;
  for (const auto& t : w) {
    if (t.kind == K::coeff && !t.coeff) throw std::invalid_argument("coefficient token without a value");
    if (t.kind != K::coeff && t.index >= p->rank()) throw std::out_of_range("letter index out of range");
  }
  const std::size_t n = p->rank();
  std::vector<std::size_t> redexes;
  while (true) {
    redexes.clear();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      const auto &l = w[k], &r = w[k + 1];
      const bool redex = (l.kind != K::coeff && r.kind == K::coeff) || (l.kind == K::coeff && r.kind == K::coeff) ||
                         (l.kind != K::coeff && r.kind != K::coeff &&
                          (l.index > r.index || (l.index == r.index && l.kind != r.kind)));
      if (redex) redexes.push_back(k);
    }
    if (redexes.empty()) break;
    std::size_t k = redexes.front();
    if (rng) k = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(*rng)];
    WordToken& l = w[k];
    WordToken& r = w[k + 1];
    if (l.kind != K::coeff && r.kind == K::coeff) {
      const int e = l.kind == K::X ? 1 : -1;
      Poly moved = p->twist(lattice_unit(n, l.index, e)).apply(*r.coeff);
      std::swap(l, r);
      l.coeff = std::move(moved);
    } else if (l.kind == K::coeff && r.kind == K::coeff) {
      l.coeff = *l.coeff * *r.coeff;
      w.erase(w.begin() + static_cast<long>(k) + 1);
    } else if (l.index != r.index) {
      std::swap(l, r);
    } else {
      const std::size_t i = l.index;
      Poly c = l.kind == K::Y ? p->a()[i] : p->sigma()[i].apply(p->a()[i]);
      w[k] = WordToken::c(std::move(c));
      w.erase(w.begin() + static_cast<long>(k) + 1);
    }
  }
  Poly coeff(p->ring(), 1L);
  LatticeElement alpha = lattice_zero(n);
  for (const auto& t : w) {
    if (t.kind == K::coeff)
      coeff = *t.coeff;
    else
      alpha[t.index] += t.kind == K::X ? 1 : -1;
  }
  return GWAElement(p, coeff, alpha);
}

GWAPtr gwa_trivial(const FieldPtr& field, bool laurent) {
  return make_gwa(make_ring(field, std::vector<std::string>{}, laurent), {}, {}, "trivial");
}

GWAPtr gwa_tensor(const GWAPtr& p, const GWAPtr& q) {
  const RingPtr &rp = p->ring(), &rq = q->ring();
  if (!rp->field()->compatible(*rq->field())) throw std::invalid_argument("tensor product over different fields");
  if (rp->laurent() != rq->laurent() && rp->nvars() && rq->nvars())
    throw std::invalid_argument("tensor product of a polynomial and a Laurent presentation");
  std::vector<std::string> vars = rp->variables();
  std::set<std::string> seen(vars.begin(), vars.end());
  bool clash = false;
  for (const auto& v : rq->variables()) {
    clash = clash || seen.count(v);
    vars.push_back(v);
  }
  if (clash)
    for (std::size_t k = 0; k < vars.size(); ++k) vars[k] = "h" + idx(k);
  const bool laurent = rp->nvars() ? rp->laurent() : rq->laurent();
  RingPtr ring = make_ring(rp->field(), vars, laurent);
  std::vector<Poly> a;
  std::vector<Automorphism> sigma;
  for (std::size_t i = 0; i < p->rank(); ++i) {
    a.push_back(extend_poly(p->a()[i], ring, 0));
    sigma.push_back(extend_auto(p->sigma()[i], ring, 0));
  }
  for (std::size_t i = 0; i < q->rank(); ++i) {
    a.push_back(extend_poly(q->a()[i], ring, rp->nvars()));
    sigma.push_back(extend_auto(q->sigma()[i], ring, rp->nvars()));
  }
  std::string name = p->rank() == 0 ? q->name() : q->rank() == 0 ? p->name() : p->name() + " (x) " + q->name();
  return make_gwa(ring, std::move(a), std::move(sigma), std::move(name),
                  p->embeddable() && q->embeddable());
}

SkewElement gwa_embed(const GWAElement& u) {
  const GWAPresentation& p = *u.presentation();
  if (!p.embeddable())
    throw std::invalid_argument("sigma_1..sigma_n not known to be Z-linearly independent; assert it to embed");
  SkewElement r(p.skew_context());
  for (const auto& [alpha, d] : u.terms()) {
    Poly c = d;
    for (std::size_t i = 0; i < p.rank(); ++i)
      if (alpha[i] < 0) c *= p.twisted_product(i, -alpha[i]);
    r += SkewElement(p.skew_context(), RationalFunction(c), alpha);
  }
  return r;
}

std::vector<std::string> catalog_names() {
  return {"weyl", "quantum_plane", "quantum_weyl", "torus_diffops"};
}

CatalogEntry catalog(const std::string& name, std::size_t n, const CatalogParams& params) {
  if (n == 0) throw std::invalid_argument("catalog rank must be at least 1");
  const bool quantum = name == "quantum_plane" || name == "quantum_weyl";
  if (!quantum && name != "weyl" && name != "torus_diffops") throw std::invalid_argument("unknown catalog algebra: " + name);
  FieldPtr field = quantum ? field_make(params.cyclotomic_order, {params.q}) : field_make(params.cyclotomic_order);
  CatalogEntry out;
  out.name = name;
  if (name == "torus_diffops") {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back("t" + idx(i));
    RingPtr ring = make_ring(field, vars);
    std::vector<Automorphism> sigma;
    for (std::size_t i = 0; i < n; ++i) sigma.push_back(shift_auto(ring, i));
    out.skew = make_skew_context(ring, std::move(sigma));
    return out;
  }
  RingPtr ring = make_ring(field, n);
  std::vector<Poly> a;
  std::vector<Automorphism> sigma;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(Poly::variable(ring, i));
    if (name == "weyl")
      sigma.push_back(shift_auto(ring, i));
    else if (name == "quantum_plane")
      sigma.push_back(q_scale_auto(ring, i, Scalar::parameter(field, params.q)));
    else
      sigma.push_back(q_weyl_auto(ring, i, Scalar::parameter(field, params.q)));
  }
  out.gwa = make_gwa(ring, std::move(a), std::move(sigma), name);
  out.skew = out.gwa->skew_context();
  return out;
}

}  // namespace gwa
