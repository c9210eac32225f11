#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gwa {

/// Element of Z^n, written additively; e_i is the i-th unit vector.
using LatticeElement = std::vector<int>;

LatticeElement lattice_zero(std::size_t n);
LatticeElement lattice_unit(std::size_t n, std::size_t i, int scale = 1);
LatticeElement lattice_add(const LatticeElement& a, const LatticeElement& b);
LatticeElement lattice_neg(const LatticeElement& a);
/// `e(1,0,-2)`.
std::string lattice_str(const LatticeElement& a);

enum class Membership { yes, no, inconclusive };

const char* to_string(Membership m);

struct MembershipResult {
  Membership status = Membership::no;
  /// Coefficients on the generators when status is yes (integers in group mode,
  /// nonnegative counts in monoid mode).
  std::vector<long> certificate;
};

/// Subgroup or submonoid of Z^n given by generators.
struct LatticeSubmonoidSpec {
  enum class Mode { group, monoid };

  std::size_t dim = 0;
  std::vector<LatticeElement> generators;
  Mode mode = Mode::group;
  /// Monoid mode: maximal number of generator summands explored.
  int bound = 16;
};

/// Group mode is exact (integer echelon form). Monoid mode searches nonnegative
/// combinations with at most `bound` summands; it answers `no` only with a proof
/// (not in the generated group, or a positive functional bounding the summand count).
MembershipResult membership(const LatticeSubmonoidSpec& spec, const LatticeElement& v);

/// Rank of the subgroup generated by `gens` (over Q).
std::size_t lattice_rank(const std::vector<LatticeElement>& gens, std::size_t dim);

}  // namespace gwa
