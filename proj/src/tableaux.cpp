#include "gwa/tableaux.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gwa/automorphism.hpp"

namespace gwa {

namespace {

int sup_norm(const LatticeElement& v) {
  int m = 0;
  for (int x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

std::string point_key(const Point& p) {
  std::string k;
  for (const auto& s : p) {
    k += s.str();
    k += ';';
  }
  return k;
}

std::vector<LatticeElement> window(std::size_t n, int r) {
  std::vector<LatticeElement> out;
  LatticeElement v(n, -r);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == r) v[i++] = -r;
    if (i == n) break;
    ++v[i];
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LatticeElement& a, const LatticeElement& b) { return sup_norm(a) < sup_norm(b); });
  return out;
}

}  // namespace

long OrbitTruncation::find(const Point& p) const {
  if (!p.empty() && p.front().canonical()) {
    auto it = by_point_.find(point_key(p));
    return it == by_point_.end() ? -1 : static_cast<long>(it->second);
  }
  for (std::size_t t = 0; t < tableaux.size(); ++t)
    if (tableaux[t].point == p) return static_cast<long>(t);
  return -1;
}

std::size_t OrbitTruncation::insert(Tableau t) {
  const std::size_t idx = tableaux.size();
  if (!t.point.empty() && t.point.front().canonical()) by_point_.emplace(point_key(t.point), idx);
  tableaux.push_back(std::move(t));
  return idx;
}

OrbitTruncation orbit_expand(const GWAPtr& p, const Point& seed, int r) {
  if (r < 0) throw std::invalid_argument("radius must be nonnegative");
  const std::size_t n = p->rank();
  if (seed.size() != p->ring()->nvars()) throw std::invalid_argument("seed has wrong number of coordinates");
  OrbitTruncation o;
  o.gwa = p;
  o.seed = seed;
  o.radius = r;
  o.y_weights = p->a();

  std::vector<Automorphism> inv;
  for (const auto& s : p->sigma()) inv.push_back(s.inverse());

  // Each point is one sigma step from the point of theta with its first nonzero
  // coordinate moved toward zero.
  std::map<LatticeElement, Point> memo;
  memo.emplace(LatticeElement(n, 0), seed);
  const auto boxed = window(n, r);
  const auto point_of = [&](const auto& self, const LatticeElement& theta) -> const Point& {
    if (auto it = memo.find(theta); it != memo.end()) return it->second;
    std::size_t i = 0;
    while (theta[i] == 0) ++i;
    LatticeElement prev = theta;
    prev[i] += theta[i] > 0 ? -1 : 1;
    const Automorphism& step = theta[i] > 0 ? p->sigma()[i] : inv[i];
    Point pt = act_on_point(step, self(self, prev));
    return memo.emplace(theta, std::move(pt)).first->second;
  };
  for (const auto& theta : boxed) point_of(point_of, theta);
  for (const auto& theta : boxed) {
    const Point& pt = memo.at(theta);
    if (o.find(pt) >= 0) continue;
    o.insert({pt, theta, sup_norm(theta) == r});
  }

  o.up.assign(o.size(), std::vector<long>(n, -1));
  o.down.assign(o.size(), std::vector<long>(n, -1));
  for (std::size_t t = 0; t < o.size(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      o.up[t][i] = o.find(act_on_point(p->sigma()[i], o.tableaux[t].point));
      o.down[t][i] = o.find(act_on_point(inv[i], o.tableaux[t].point));
      if (o.up[t][i] < 0 || o.down[t][i] < 0) o.tableaux[t].boundary = true;
    }
  }
  return o;
}

WeightVector WeightVector::basis(std::size_t t, const FieldPtr& field) {
  WeightVector v;
  v.terms_.emplace(t, Scalar(field, 1L));
  return v;
}

Scalar WeightVector::coefficient(std::size_t t, const FieldPtr& field) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar(field, 0L) : it->second;
}

void WeightVector::add(std::size_t t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

WeightVector WeightVector::scaled(const Scalar& c) const {
  WeightVector out;
  if (c.is_zero()) return out;
  for (const auto& [t, x] : terms_) out.terms_.emplace(t, x * c);
  return out;
}

bool operator==(const WeightVector& a, const WeightVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [t, c] : a.terms_) {
    if (it->first != t || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::string WeightVector::str(const OrbitTruncation& orbit) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + c.str() + ")*";
    out += "T" + point_str(orbit.tableaux[t].point);
  }
  return out;
}

std::string TableauxGenerator::str() const {
  switch (kind) {
    case Kind::X: return "X" + std::to_string(i + 1);
    case Kind::Y: return "Y" + std::to_string(i + 1);
    default: return "(" + z.str() + ")";
  }
}

WeightVector act(const TableauxGenerator& g, const WeightVector& v, const OrbitTruncation& orbit) {
  WeightVector out;
  for (const auto& [t, c] : v.terms()) {
    const Point& pt = orbit.tableaux[t].point;
    switch (g.kind) {
      case TableauxGenerator::Kind::z:
        out.add(t, c * poly_eval(g.z, pt));
        break;
      case TableauxGenerator::Kind::X: {
        const long u = orbit.up[t][g.i];
        if (u < 0) throw BoundaryEscape("X" + std::to_string(g.i + 1) + " leaves the window at T" + point_str(pt));
        out.add(static_cast<std::size_t>(u), c);
        break;
      }
      case TableauxGenerator::Kind::Y: {
        const long d = orbit.down[t][g.i];
        if (d < 0) throw BoundaryEscape("Y" + std::to_string(g.i + 1) + " leaves the window at T" + point_str(pt));
        const auto target = static_cast<std::size_t>(d);
        out.add(target, c * poly_eval(orbit.y_weights[g.i], orbit.tableaux[target].point));
        break;
      }
    }
  }
  return out;
}

WeightVector move(const LatticeElement& theta, const WeightVector& v, const OrbitTruncation& orbit) {
  const Automorphism& phi = orbit.gwa->twist(theta);
  WeightVector out;
  for (const auto& [t, c] : v.terms()) {
    const long u = orbit.find(act_on_point(phi, orbit.tableaux[t].point));
    if (u < 0) throw BoundaryEscape("sigma^theta leaves the window at T" + point_str(orbit.tableaux[t].point));
    out.add(static_cast<std::size_t>(u), c);
  }
  return out;
}

RelationReport verify_relations(const OrbitTruncation& orbit, const std::vector<Poly>& samples) {
  RelationReport rep;
  const GWAPtr& p = orbit.gwa;
  const RingPtr& ring = p->ring();
  const std::size_t n = p->rank();
  using G = TableauxGenerator;
  const auto Z = [](const Poly& z) { return G::coefficient(z); };

  for (std::size_t t = 0; t < orbit.size(); ++t) {
    if (orbit.tableaux[t].boundary) continue;
    ++rep.interior;
    const WeightVector v = WeightVector::basis(t, ring->field());
    const auto check = [&](const std::string& rel, const std::vector<G>& lhs, const std::vector<G>& rhs) {
      ++rep.checks;
      try {
        WeightVector l = v, r = v;
        for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) l = act(*it, l, orbit);
        for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) r = act(*it, r, orbit);
        if (!(l == r)) rep.violations.push_back({t, rel, l.str(orbit) + " != " + r.str(orbit)});
      } catch (const BoundaryEscape& e) {
        rep.violations.push_back({t, rel, e.what()});
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      const std::string si = std::to_string(i + 1);
      const G X = G::X(ring, i), Y = G::Y(ring, i);
      const Automorphism& s = p->sigma()[i];
      const Automorphism sinv = s.inverse();
      for (const Poly& z : samples) {
        check("X" + si + " z = sigma" + si + "(z) X" + si, {X, Z(z)}, {Z(s.apply(z)), X});
        check("Y" + si + " z = sigma" + si + "^-1(z) Y" + si, {Y, Z(z)}, {Z(sinv.apply(z)), Y});
      }
      check("Y" + si + " X" + si + " = a" + si, {Y, X}, {Z(p->a()[i])});
      check("X" + si + " Y" + si + " = sigma" + si + "(a" + si + ")", {X, Y}, {Z(s.apply(p->a()[i]))});
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::string sj = std::to_string(j + 1);
        const G Xj = G::X(ring, j), Yj = G::Y(ring, j);
        check("[X" + si + ", X" + sj + "] = 0", {X, Xj}, {Xj, X});
        check("[Y" + si + ", Y" + sj + "] = 0", {Y, Yj}, {Yj, Y});
        check("[X" + si + ", Y" + sj + "] = 0", {X, Yj}, {Yj, X});
        check("[Y" + si + ", X" + sj + "] = 0", {Y, Xj}, {Xj, Y});
      }
    }
  }
  return rep;
}

bool weight_lift_check(const Point& seed, const OrbitTruncation& orbit) {
  const long t = orbit.find(seed);
  if (t < 0) return false;
  const RingPtr& ring = orbit.gwa->ring();
  const WeightVector v = WeightVector::basis(static_cast<std::size_t>(t), ring->field());
  for (std::size_t j = 0; j < seed.size(); ++j)
    if (!(act(TableauxGenerator::coefficient(Poly::variable(ring, j)), v, orbit) == v.scaled(seed[j]))) return false;
  return true;
}

SubmoduleScan submodule_scan(const OrbitTruncation& orbit) {
  SubmoduleScan out;
  const std::size_t N = orbit.size(), n = orbit.gwa->rank();
  std::vector<std::vector<std::size_t>> adj(N);
  for (std::size_t t = 0; t < N; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      if (orbit.up[t][i] >= 0) adj[t].push_back(static_cast<std::size_t>(orbit.up[t][i]));
      const long d = orbit.down[t][i];
      if (d >= 0 && !poly_eval(orbit.y_weights[i], orbit.tableaux[static_cast<std::size_t>(d)].point).is_zero())
        adj[t].push_back(static_cast<std::size_t>(d));
    }
    std::sort(adj[t].begin(), adj[t].end());
    adj[t].erase(std::unique(adj[t].begin(), adj[t].end()), adj[t].end());
    for (std::size_t u : adj[t]) out.edges.emplace_back(t, u);
  }

  std::vector<std::vector<bool>> reach(N, std::vector<bool>(N, false));
  for (std::size_t s = 0; s < N; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x])
        if (!reach[s][y]) {
          reach[s][y] = true;
          stack.push_back(y);
        }
    }
  }

  std::vector<bool> placed(N, false);
  for (std::size_t s = 0; s < N; ++s) {
    if (placed[s]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t t = s; t < N; ++t)
      if (reach[s][t] && reach[t][s]) {
        comp.push_back(t);
        placed[t] = true;
      }
    out.components.push_back(std::move(comp));
  }

  std::set<std::vector<std::size_t>> closures;
  for (std::size_t s = 0; s < N; ++s) {
    std::vector<std::size_t> c;
    for (std::size_t t = 0; t < N; ++t)
      if (reach[s][t]) c.push_back(t);
    closures.insert(std::move(c));
  }
  out.closed_sets.assign(closures.begin(), closures.end());
  std::stable_sort(out.closed_sets.begin(), out.closed_sets.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

Point generic_seed(const RingPtr& ring, Rng& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Point out;
  for (std::size_t j = 0; j < ring->nvars(); ++j) {
    Rational r(2 * dist(rng) + 1, 2);
    r.canonicalize();
    out.emplace_back(ring->field(), r);
  }
  return out;
}

std::string point_str(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < p.size(); ++j) os << (j ? ", " : "") << p[j];
  os << ')';
  return os.str();
}

}  // namespace gwa
