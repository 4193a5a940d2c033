#pragma once

#include <cstdint>
#include <vector>

#include "polyforge/perm_group.hpp"
#include "polyforge/presentation.hpp"
#include "polyforge/word.hpp"

namespace polyforge {

// Table rows ever allocated before enumeration gives up.
inline constexpr int kDefaultMaxCosets = 1 << 20;

// A closed coset table: the action of each generator (and its inverse) on
// the cosets of a subgroup, normalized so cosets are numbered in discovery
// order. Every generator column is a bijection and every relator traces back
// to its start from every coset.
class CosetTable {
 public:
  CosetTable(int generator_count, int coset_count,
             std::vector<std::int32_t> rows);

  int generator_count() const { return generator_count_; }
  int coset_count() const { return coset_count_; }

  // Signed letter, as in Word.
  int apply(int coset, int letter) const;
  int trace(int coset, const Word& w) const;

  // Permutation action of generator `index` on cosets.
  Permutation generator_action(int index) const;

 private:
  int generator_count_;
  int coset_count_;
  std::vector<std::int32_t> rows_;  // coset * (2*generator_count) entries
};

// Todd-Coxeter enumeration (HLT relator tracing with coincidence handling
// and final table compression) of the cosets of <subgroup_gens> in the
// presented group. Throws ResourceLimitError when more than max_cosets table
// rows would be needed; that signals an infinite index or a bound that is
// too small, and the caller decides which.
CosetTable coset_enumerate(const Presentation& p,
                           const std::vector<Word>& subgroup_gens,
                           int max_cosets = kDefaultMaxCosets);

// The regular permutation representation: generator actions on the cosets
// of the trivial subgroup. generators()[k] is the action of generator k, so
// distinguished generators survive the conversion.
PermutationGroup regular_representation(const Presentation& p,
                                        int max_cosets = kDefaultMaxCosets);

}  // namespace polyforge
