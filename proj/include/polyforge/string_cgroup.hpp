#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polyforge/perm_group.hpp"
#include "polyforge/report.hpp"

namespace polyforge {

// Orders of the products of adjacent distinguished generators.
struct SchlafliType {
  std::vector<std::uint64_t> entries;

  // Degenerate types contain a 2.
  bool nondegenerate() const {
    for (std::uint64_t e : entries)
      if (e == 2) return false;
    return true;
  }

  std::string to_string() const;  // "{4,4}"

  bool operator==(const SchlafliType&) const = default;
};

// A permutation group together with an ordered list of distinguished
// involutory generators that has passed string-C-group validation: the
// string commutation pattern holds and the intersection condition has been
// checked exhaustively over all pairs of index subsets. The 2^d parabolic
// subgroups are computed once here and cached. Immutable.
class StringCGroup {
 public:
  // Throws ValidationError (with the offending detail) when `distinguished`
  // does not generate `group`, a generator is not an involution, the string
  // condition fails, or the intersection condition fails.
  static StringCGroup validate(const PermutationGroup& group,
                               std::vector<Permutation> distinguished);

  int rank() const;
  const PermutationGroup& group() const;
  const std::vector<Permutation>& distinguished_generators() const;
  const SchlafliType& schlafli() const;

  // <rho_i : bit i of mask set>; mask < 2^rank.
  const PermutationGroup& parabolic(std::uint32_t mask) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

inline SchlafliType schlafli_type(const StringCGroup& s) { return s.schlafli(); }

inline bool is_nondegenerate(const StringCGroup& s) {
  return s.schlafli().nondegenerate();
}

// A = <rho_0 rho_1, ..., rho_{d-2} rho_{d-1}>. For non-degenerate 2-power
// inputs the index |G : A| = 2 is asserted (ContractViolationError).
PermutationGroup rotation_subgroup(const StringCGroup& s);

// The index-2 subgroup of A in which the i-th rotation generator is
// replaced by its square, i in 1..d-1. Asserts normality in G and order
// 2^(n-2); requires a non-degenerate 2-power input.
PermutationGroup a_subgroup(const StringCGroup& s, int i);

// [B_1,...,B_{d-2}] with B_i the intersection of the first i+1 a-subgroups;
// asserts |B_i| = 2^(n-(i+2)). Empty for rank 2.
std::vector<PermutationGroup> b_chain(const StringCGroup& s);

// [C_1,...,C_{d-2}] with C_i the intersection of the first i+1 Frattini
// subgroups of the a-subgroups; asserts |C_i| = 2^(n-d-(i+1)) and normality
// in G. Empty for rank 2.
std::vector<PermutationGroup> c_chain(const StringCGroup& s);

// B = intersection of all a-subgroups, C = intersection of their Frattini
// subgroups (for rank 2 the single terms A_1 and Phi(A_1)). Asserts
// |B| = 2^(n-d) and |C| = 2^(n-2d+1).
std::pair<PermutationGroup, PermutationGroup> core_subgroups(
    const StringCGroup& s);

// Runs the full structural verification battery on a non-degenerate
// 2-power string C-group: Frattini/derived/agemo identities, the rotation
// and a-subgroup orders, both chains, the membership checks that make the
// minimal quotient work, the quotient's order and relator satisfaction,
// and the third-lower-central identity. Inputs outside the hypotheses are
// reported as a hypothesis failure, not an error.
VerificationReport theorem_check(const StringCGroup& s,
                                 const std::string& group_id = "group");

// Quotient by a normal subgroup contained in the rotation subgroup, with
// the induced distinguished generators re-validated.
StringCGroup quotient_stringc(const StringCGroup& s,
                              const PermutationGroup& n);

// True iff the ranks agree and rho_i -> sigma_i extends to a homomorphism
// (necessarily onto, since the sigma_i generate).
bool covers(const StringCGroup& p, const StringCGroup& q);

// log2 of |G : Phi(G)|; asserted to equal the rank.
int minimal_generating_size(const StringCGroup& s);

}  // namespace polyforge
