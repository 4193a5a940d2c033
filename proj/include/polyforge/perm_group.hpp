#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polyforge/permutation.hpp"
#include "polyforge/word.hpp"

namespace polyforge {

// Ceiling on full element enumeration (agemo, omega, intersection, quotient
// coset labelling). Every group this toolkit targets fits comfortably.
inline constexpr std::uint64_t kDefaultElementCap = 1ull << 16;

// A finite permutation group with a base and strong generating set, built
// eagerly and deterministically (smallest moved point first) so that orders,
// membership tests and element orderings are reproducible. Immutable after
// construction; cheap to copy.
class PermutationGroup {
 public:
  PermutationGroup(std::uint32_t domain_size,
                   std::vector<Permutation> generators);

  static PermutationGroup trivial(std::uint32_t domain_size);

  std::uint32_t domain_size() const;
  const std::vector<Permutation>& generators() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }
  Permutation identity() const { return Permutation(domain_size()); }

  bool contains(const Permutation& g) const;

  // All elements, each exactly once, in a fixed deterministic order.
  std::vector<Permutation> elements(
      std::uint64_t cap = kDefaultElementCap) const;
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// A homomorphism recorded by where it sends the source's generators.
struct GroupHom {
  PermutationGroup source;
  PermutationGroup target;
  std::vector<Permutation> generator_images;
};

// <gens> as a subgroup of g; every generator must lie in g.
PermutationGroup subgroup(const PermutationGroup& g,
                          const std::vector<Permutation>& gens);

// Smallest normal subgroup of g containing gens.
PermutationGroup normal_closure(const PermutationGroup& g,
                                const std::vector<Permutation>& gens);

PermutationGroup derived_subgroup(const PermutationGroup& g);

// Term k of the lower central series: term 1 = g, term 2 = [g,g],
// term 3 = [[g,g],g], ...
PermutationGroup lower_central_term(const PermutationGroup& g, int k);

// Frattini subgroup of a 2-group, as the normal closure of
// {x^2, [x,y] : x,y generators} (the smallest normal subgroup with
// elementary abelian quotient).
PermutationGroup frattini_2group(const PermutationGroup& g);

// Subgroup generated by all 2^j-th powers of elements; full enumeration.
PermutationGroup agemo(const PermutationGroup& g, int j,
                       std::uint64_t cap = kDefaultElementCap);

// Subgroup generated by all elements whose order divides 2^j.
PermutationGroup omega(const PermutationGroup& g, int j,
                       std::uint64_t cap = kDefaultElementCap);

// Exact subgroup intersection: enumerates the smaller group and filters by
// membership in the other.
PermutationGroup intersection(const PermutationGroup& h1,
                              const PermutationGroup& h2,
                              std::uint64_t cap = kDefaultElementCap);

// Action of g on the right cosets of a normal subgroup n, plus the quotient
// homomorphism. Coset representatives are discovered breadth-first from the
// identity in generator order.
std::pair<PermutationGroup, GroupHom> quotient(
    const PermutationGroup& g, const PermutationGroup& n,
    std::uint64_t cap = kDefaultElementCap);

bool is_normal(const PermutationGroup& g, const PermutationGroup& h);

// True iff generator_i -> images[i] extends to a homomorphism out of g,
// decided on the disjoint-union domain: D = <(g_i, images_i)> has order |g|
// exactly when the pairing is the graph of a map.
bool hom_extends(const PermutationGroup& g,
                 const std::vector<Permutation>& images);

bool is_elementary_abelian(const PermutationGroup& g);

bool is_2group(const PermutationGroup& g);

// Exponent of a power of two; throws InvalidArgumentError otherwise.
int log2_exact(std::uint64_t value);

// Equality as subgroups of a common symmetric group.
bool same_subgroup(const PermutationGroup& a, const PermutationGroup& b);

// Image of a word under generator substitution.
Permutation evaluate_word(const Word& w, const std::vector<Permutation>& gens,
                          std::uint32_t domain_size);

// Domain size plus one generator image list per line.
std::string serialize_group(const PermutationGroup& g);

}  // namespace polyforge
