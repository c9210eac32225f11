#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwa/gwa.hpp"
#include "gwa/random.hpp"
#include "gwa/reflection_group.hpp"
#include "gwa/skew.hpp"

namespace gwa {

/// Permutations send X_i -> X_pi(i) and h_i -> h_pi(i); the diagonal part scales
/// X_i by xi^{c_i} and Y_i by xi^{-c_i} and fixes D.
GWAElement gwa_act(const ReflectionGroupElement& g, const GWAElement& u);

/// Whether permuting variables by pi carries (a_i, sigma_i) to (a_pi(i), sigma_pi(i)),
/// i.e. whether the permutation part of g acts by algebra automorphisms.
bool gwa_action_compatible(const GWAPresentation& p, const ReflectionGroupElement& g);

/// Average of gwa_act over the listed group.
GWAElement gwa_reynolds(const std::vector<ReflectionGroupElement>& group, const GWAElement& u);

bool gwa_is_invariant(const std::vector<ReflectionGroupElement>& gens, const GWAElement& u);

struct CyclicInvariant {
  /// D(a_m, sigma^m) on the same ring.
  GWAPtr child;
  /// X^m and Y^m in the parent.
  GWAElement x_image;
  GWAElement y_image;
  bool verified = false;
  std::string witness;
};

/// Builds D(a_m, sigma^m) for a rank-one presentation and checks the defining relations
/// of the child on X' -> X^m, Y' -> Y^m.
CyclicInvariant cyclic_invariant_gwa(const GWAPtr& p, int m);

/// Image of a child element under X' -> X^m, Y' -> Y^m, d -> d.
GWAElement cyclic_map(const CyclicInvariant& c, const GWAElement& child_element);

struct InvariantGeneratorSet {
  std::vector<std::string> labels;
  std::vector<GWAElement> gwa_side;
  std::vector<SkewElement> expected_images;
  /// Elementary symmetric polynomials generating Gamma = D^{S_n}.
  std::vector<Poly> gamma;
  /// The lattice object generated by m e_i and (m/p)(1,...,1).
  LatticeSubmonoidSpec lattice;
};

/// Orbit sums of X_i^m and Y_i^m, (X_1...X_n)^{m/p} when p > 1, and the elementary
/// symmetric polynomials, with their skew images e_i^m, a_im e_i^{-m}, e^{(m/p,...)}.
/// Throws std::invalid_argument when p does not divide m.
InvariantGeneratorSet invariant_generators(const GWAPtr& p, int m, int p_div,
                                           LatticeSubmonoidSpec::Mode mode = LatticeSubmonoidSpec::Mode::group);

/// e_1(h), ..., e_n(h) for blocks of nvars / n variables (the first variable of each block).
std::vector<Poly> elementary_symmetric(const RingPtr& ring, std::size_t n);

/// Orbit sums of e_i and e_i^{-1} together with the elementary symmetric polynomials, for
/// a skew ring such as the torus differential operators.
std::vector<SkewElement> skew_invariant_generators(const SkewContextPtr& ctx);

struct DecompositionComponent {
  int k = 0;
  GWAElement component;
  /// w with (X_1...X_n)^{km/p} w = component, when such a w with polynomial
  /// coefficients exists.
  std::optional<GWAElement> cofactor;
  bool cofactor_invariant = false;
};

struct DecompositionResult {
  std::vector<DecompositionComponent> components;
  bool reassembles = false;
  /// Xi acts on component k by omega^k, omega = xi^{m/p}.
  bool eigen_ok = false;
  std::string witness;
};

/// Splits an invariant u by the eigenvalue of Xi = diag(1,0,...,0). Throws
/// std::invalid_argument when u is not G(m,p,n)-invariant or p does not divide m.
DecompositionResult decomposition_check(const GWAElement& u, int m, int p_div);

struct PrincipalCounterexample {
  std::size_t generator = 0;
  std::size_t sample = 0;
  std::string reason;
};

struct PrincipalReport {
  std::size_t evaluations = 0;
  std::vector<PrincipalCounterexample> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

/// For every u and gamma: evaluate(u, gamma) is a polynomial and fixed by every group element.
PrincipalReport principal_check(const std::vector<SkewElement>& gens, const std::vector<Poly>& gamma_samples,
                                const std::vector<ReflectionGroupElement>& group);

/// Elementary symmetric polynomials plus `extra` symmetrized random polynomials.
std::vector<Poly> default_gamma_samples(const RingPtr& ring, std::size_t n, Rng& rng, int extra = 3);

/// x is invariant under `group` and d_chi * x has polynomial coefficients.
bool rational_witness_check(const SkewElement& x, const Poly& d_chi, const std::vector<ReflectionGroupElement>& group);

/// prod_{i<j} (h_i - h_j); throws std::logic_error if a transposition fails to negate it.
Poly dchi_sign_sn(const RingPtr& ring, std::size_t n);

}  // namespace gwa
