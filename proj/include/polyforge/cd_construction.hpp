#pragma once

#include "polyforge/cd_presentation.hpp"
#include "polyforge/coset_enumeration.hpp"
#include "polyforge/report.hpp"
#include "polyforge/string_cgroup.hpp"

namespace polyforge {

// The minimal-cover group for rank d, realized concretely: its presentation,
// its validated string C-group on the regular domain, and the central
// subgroup generated by the squares of adjacent generator products.
struct CdGroup {
  int rank = 0;
  Presentation presentation;
  StringCGroup group;
  PermutationGroup central;  // K = <(rho_i rho_{i+1})^2 : all i>
};

// Builds and validates the rank-d instance; asserts order 2^(2d-1) and type
// {4,...,4} (ContractViolationError on mismatch).
CdGroup cd_group(int d, int max_cosets = kDefaultMaxCosets);

// Structure report: K abelian, normal and central, G/K abelian, G itself
// non-abelian, and nilpotency class exactly 2. |K| is computed and recorded,
// not asserted against a closed form.
VerificationReport verify_cd_structure(const CdGroup& c);

// True iff |G| equals the flag-count lower bound 2 * p_1 * ... * p_{d-1};
// the bound itself is asserted to hold as a sanity check.
bool tightness_check(const StringCGroup& s);

}  // namespace polyforge
