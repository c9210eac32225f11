#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwa/gwa.hpp"
#include "gwa/random.hpp"

namespace gwa {

using Point = std::vector<Scalar>;

struct Tableau {
  /// Vanishing point of the maximal ideal.
  Point point;
  /// One theta with sigma^theta(seed) = point, of minimal sup norm.
  LatticeElement provenance;
  /// Some sigma_i^{+-1} neighbour lies outside the window, or |theta| = radius.
  bool boundary = false;
};

class BoundaryEscape : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Window {sigma^theta(seed) : |theta|_inf <= r} of the orbit of a point, deduplicated
/// by point.
struct OrbitTruncation {
  GWAPtr gwa;
  Point seed;
  int radius = 0;
  std::vector<Tableau> tableaux;
  /// up[t][i], down[t][i]: index of sigma_i(n), sigma_i^{-1}(n), or -1 outside the window.
  std::vector<std::vector<long>> up, down;
  /// Values of these polynomials give the Y coefficients; a_i unless overridden.
  std::vector<Poly> y_weights;

  std::size_t size() const { return tableaux.size(); }
  /// Index of the tableau at `p`, or -1.
  long find(const Point& p) const;
  /// Appends a tableau and indexes it; returns its index.
  std::size_t insert(Tableau t);

private:
  std::map<std::string, std::size_t> by_point_;
};

/// Throws std::invalid_argument for r < 0 or a seed of the wrong length and
/// std::domain_error when a Laurent coordinate evaluates to zero.
OrbitTruncation orbit_expand(const GWAPtr& p, const Point& seed, int r);

/// Finite linear combination of tableaux, keyed by index in a truncation.
class WeightVector {
public:
  WeightVector() = default;
  static WeightVector basis(std::size_t t, const FieldPtr& field);

  const std::map<std::size_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(std::size_t t, const FieldPtr& field) const;
  void add(std::size_t t, const Scalar& c);

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  WeightVector scaled(const Scalar& c) const;
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend bool operator==(const WeightVector& a, const WeightVector& b);

  std::string str(const OrbitTruncation& orbit) const;

private:
  std::map<std::size_t, Scalar> terms_;
};

struct TableauxGenerator {
  enum class Kind { z, X, Y };
  Kind kind = Kind::z;
  std::size_t i = 0;
  Poly z;

  static TableauxGenerator coefficient(Poly z) { return {Kind::z, 0, std::move(z)}; }
  static TableauxGenerator X(const RingPtr& r, std::size_t i) { return {Kind::X, i, Poly(r)}; }
  static TableauxGenerator Y(const RingPtr& r, std::size_t i) { return {Kind::Y, i, Poly(r)}; }
  std::string str() const;
};

/// z.T(n) = f_n(z) T(n), X_i.T(n) = T(sigma_i n), Y_i.T(n) = f_{sigma_i^{-1} n}(a_i) T(sigma_i^{-1} n).
/// Throws BoundaryEscape when X or Y leaves the window.
WeightVector act(const TableauxGenerator& g, const WeightVector& v, const OrbitTruncation& orbit);

/// Relabels T(n) -> T(sigma^theta n) using the composed automorphism.
WeightVector move(const LatticeElement& theta, const WeightVector& v, const OrbitTruncation& orbit);

struct RelationViolation {
  std::size_t tableau = 0;
  std::string relation;
  std::string detail;
};

struct RelationReport {
  std::size_t interior = 0;
  std::size_t checks = 0;
  std::vector<RelationViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// On every tableau with |provenance| <= radius - 1 and every sample z:
/// X_i z = sigma_i(z) X_i, Y_i z = sigma_i^{-1}(z) Y_i, Y_i X_i = a_i, X_i Y_i = sigma_i(a_i),
/// and X_i, Y_i commute with X_j, Y_j for i != j.
RelationReport verify_relations(const OrbitTruncation& orbit, const std::vector<Poly>& samples);

/// T(seed) is in the window and h_j acts on it by seed_j for every j.
bool weight_lift_check(const Point& seed, const OrbitTruncation& orbit);

struct SubmoduleScan {
  /// X edges always, Y edges when the coefficient is nonzero; both only inside the window.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Strongly connected components, each sorted.
  std::vector<std::vector<std::size_t>> components;
  /// Distinct forward closures, largest first.
  std::vector<std::vector<std::size_t>> closed_sets;
};

SubmoduleScan submodule_scan(const OrbitTruncation& orbit);

/// Coordinates of the form k + 1/2 plus a random offset in [-bound, bound], so that
/// shift orbits avoid the integer roots of the catalog a_i.
Point generic_seed(const RingPtr& ring, Rng& rng, int bound = 5);

std::string point_str(const Point& p);

}  // namespace gwa
