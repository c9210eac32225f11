#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gwa/invariants.hpp"
#include "gwa/random.hpp"
#include "gwa/tableaux.hpp"

namespace gwa {

// Property suites shared by the scenario runner and the acceptance binary. Each
// returns the first failure as a witness.

enum class Status { pass, fail, inconclusive };
const char* to_string(Status s);

struct SuiteResult {
  Status status = Status::pass;
  std::size_t cases = 0;
  std::string witness;

  void fail(std::string w);
  void inconclusive(std::string w);
  bool passed() const { return status == Status::pass; }
};

/// X_i d = sigma_i(d) X_i, Y_i d = sigma_i^{-1}(d) Y_i, Y_i X_i = a_i, X_i Y_i = sigma_i(a_i)
/// and the i != j commutations, as products of normal forms on random d.
SuiteResult gwa_relation_suite(const GWAPtr& p, Rng& rng, int samples, int max_degree = 3);

/// Random words in X, Y and coefficients rewritten with random redex choices agree
/// with the product formula.
SuiteResult confluence_suite(const GWAPtr& p, Rng& rng, int words, int length = 5);

/// gwa_embed(uv) = gwa_embed(u) gwa_embed(v). Inconclusive when sigma is not known to be
/// independent.
SuiteResult embedding_suite(const GWAPtr& p, Rng& rng, int pairs);

/// Y^m X^m = a sigma^{-1}(a) ... sigma^{-(m-1)}(a) and the relations of D(a_m, sigma^m),
/// for a rank-one presentation.
SuiteResult cyclic_suite(const GWAPtr& p, const std::vector<int>& ms);

SuiteResult associativity_suite(const SkewContextPtr& ctx, Rng& rng, int triples);

/// evaluate(uv, f) = evaluate(u, evaluate(v, f)).
SuiteResult evaluate_law_suite(const SkewContextPtr& ctx, Rng& rng, int triples);

/// Random sublattices of Z^dim: monoid membership with `bound` summands equals
/// exhaustive enumeration, and group membership contains it.
SuiteResult membership_suite(Rng& rng, int lattices, int bound, std::size_t dim = 3);

SuiteResult invariance_suite(const InvariantGeneratorSet& s, const std::vector<ReflectionGroupElement>& gens);
SuiteResult embedding_images_suite(const InvariantGeneratorSet& s);
SuiteResult generation_suite(const InvariantGeneratorSet& s);

/// Reynolds images of random elements decompose and reassemble with at most p components.
SuiteResult decomposition_suite(const GWAPtr& p, int m, int p_div, Rng& rng, int count);

SuiteResult principal_suite(const std::vector<SkewElement>& gens, const std::vector<Poly>& samples,
                            const std::vector<ReflectionGroupElement>& group);

/// x = sum_i e_i / prod_{j != i}(h_i - h_j) passes with d_chi = prod_{i<j}(h_i - h_j)
/// and the non-invariant probe e_1 / (h_1 - h_2) fails. Needs rank >= 2.
SuiteResult rational_witness_suite(const SkewContextPtr& ctx);

/// act(z, move(theta, T)) = move(theta, act(sigma^{-theta}(z), T)) for random z and theta.
SuiteResult dagger_suite(const OrbitTruncation& orbit, Rng& rng, int pairs);

}  // namespace gwa
