#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "polyforge/cd_presentation.hpp"
#include "polyforge/coset_enumeration.hpp"
#include "polyforge/errors.hpp"
#include "polyforge/perm_group.hpp"

using namespace polyforge;
namespace oracle = polyforge::testing;

namespace {

Permutation cycle(std::uint32_t n, const std::vector<std::uint32_t>& pts) {
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation::from_images(std::move(img));
}

// Symmetries of a square with vertices 0..3: a rotation and a reflection.
PermutationGroup dihedral8() {
  return PermutationGroup(
      4, {cycle(4, {0, 1, 2, 3}), Permutation::from_images({1, 0, 3, 2})});
}

PermutationGroup cd3_group() {
  return regular_representation(cd_presentation(3));
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation r = cycle(4, {0, 1, 2, 3});
  CHECK(r.order() == 4);
  CHECK((r * r.inverse()).is_identity());
  CHECK(r.pow(4).is_identity());
  CHECK(r.pow(3) == r.inverse());
  CHECK(serialize_permutation(r) == "p: 1 2 3 0");
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), InvalidArgumentError);
}

TEST_CASE("orders match the naive closure oracle") {
  const PermutationGroup d8 = dihedral8();
  CHECK(d8.order() == oracle::brute_force_closure(4, d8.generators()).size());

  const PermutationGroup g3 = cd3_group();
  CHECK(g3.order() == 32);

  CHECK(PermutationGroup::trivial(5).order() == 1);
}

TEST_CASE("membership by sifting") {
  const PermutationGroup d8 = dihedral8();
  CHECK(d8.contains(d8.identity()));
  for (const Permutation& g : d8.generators()) CHECK(d8.contains(g));
  // a transposition of adjacent corners is not a square symmetry
  CHECK(!d8.contains(Permutation::from_images({1, 0, 2, 3})));
  CHECK_THROWS_AS(d8.contains(Permutation(5)), InvalidArgumentError);
}

TEST_CASE("element enumeration is complete, unique and deterministic") {
  const PermutationGroup d8 = dihedral8();
  auto elems = d8.elements();
  CHECK(elems.size() == 8);
  auto sorted = elems;
  std::sort(sorted.begin(), sorted.end(),
            [](const Permutation& a, const Permutation& b) {
              return a.images() < b.images();
            });
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(elems == d8.elements());
  CHECK(PermutationGroup::trivial(3).elements() ==
        std::vector<Permutation>{Permutation(3)});
  CHECK_THROWS_AS(d8.elements(4), ResourceLimitError);

  const PermutationGroup g2 = regular_representation(cd_presentation(2));
  CHECK(g2.elements().size() == 8);
  CHECK(cd3_group().elements().size() == 32);
}

TEST_CASE("subgroups and Lagrange") {
  const PermutationGroup g3 = cd3_group();
  const auto& rho = g3.generators();

  CHECK(subgroup(g3, {}).order() == 1);

  // rotation subgroup: |G : A| = 2, so order 16
  const PermutationGroup a =
      subgroup(g3, {rho[0] * rho[1], rho[1] * rho[2]});
  CHECK(a.order() == 16);
  CHECK(oracle::brute_force_closure(32, a.generators()).size() == 16);
  CHECK(!a.contains(rho[0]));

  // replacing the first rotation by its square halves the order again
  const PermutationGroup a1 =
      subgroup(g3, {(rho[0] * rho[1]).pow(2), rho[1] * rho[2]});
  CHECK(a1.order() == 8);
  CHECK(g3.order() % a1.order() == 0);

  CHECK_THROWS_AS(subgroup(dihedral8(), {cycle(4, {0, 1})}),
                  InvalidArgumentError);
}

TEST_CASE("normal closure") {
  const PermutationGroup g3 = cd3_group();
  CHECK(normal_closure(g3, {g3.identity()}).order() == 1);

  // closure of the defining relator images is trivial: they already hold
  const auto& rho = g3.generators();
  std::vector<Permutation> relator_images;
  for (const Word& w : cd_presentation(3).relators)
    relator_images.push_back(evaluate_word(w, rho, g3.domain_size()));
  CHECK(normal_closure(g3, relator_images).order() == 1);

  // in the dihedral group, a reflection's closure picks up the rotation part
  const PermutationGroup d8 = dihedral8();
  const PermutationGroup n =
      normal_closure(d8, {Permutation::from_images({1, 0, 3, 2})});
  CHECK(n.order() == 4);
  CHECK(is_normal(d8, n));
}

TEST_CASE("derived subgroup against the element-pair oracle") {
  const PermutationGroup d8 = dihedral8();
  const PermutationGroup d8_derived = derived_subgroup(d8);
  CHECK(d8_derived.order() == 2);
  CHECK(d8_derived.order() ==
        oracle::commutator_subgroup_elements(4, d8.generators()).size());

  const PermutationGroup g3 = cd3_group();
  const PermutationGroup g3_derived = derived_subgroup(g3);
  CHECK(g3_derived.order() == 4);
  CHECK(g3_derived.order() ==
        oracle::commutator_subgroup_elements(32, g3.generators()).size());

  // abelian: trivial derived subgroup
  const PermutationGroup klein =
      PermutationGroup(4, {Permutation::from_images({1, 0, 2, 3}),
                           Permutation::from_images({0, 1, 3, 2})});
  CHECK(derived_subgroup(klein).is_trivial());
}

TEST_CASE("lower central series") {
  const PermutationGroup g3 = cd3_group();
  CHECK(same_subgroup(lower_central_term(g3, 1), g3));
  CHECK(same_subgroup(lower_central_term(g3, 2), derived_subgroup(g3)));
  CHECK(lower_central_term(g3, 3).is_trivial());
  CHECK(!lower_central_term(g3, 2).is_trivial());
  CHECK_THROWS_AS(lower_central_term(g3, 0), InvalidArgumentError);
}

TEST_CASE("frattini subgroup of 2-groups") {
  const PermutationGroup d8 = dihedral8();
  const PermutationGroup phi = frattini_2group(d8);
  CHECK(phi.order() == 2);
  CHECK(same_subgroup(phi, oracle::frattini_maximal_oracle(d8)));

  const PermutationGroup g3 = cd3_group();
  const PermutationGroup phi3 = frattini_2group(g3);
  CHECK(phi3.order() == 4);
  CHECK(g3.order() / phi3.order() == 8);  // index 2^d with d = 3
  CHECK(same_subgroup(phi3, oracle::frattini_maximal_oracle(g3)));

  const PermutationGroup klein =
      PermutationGroup(4, {Permutation::from_images({1, 0, 2, 3}),
                           Permutation::from_images({0, 1, 3, 2})});
  CHECK(frattini_2group(klein).is_trivial());

  // odd order input is rejected
  const PermutationGroup c3 = PermutationGroup(3, {cycle(3, {0, 1, 2})});
  CHECK_THROWS_AS(frattini_2group(c3), InvalidArgumentError);
}

TEST_CASE("agemo and omega") {
  const PermutationGroup c8 = PermutationGroup(8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7})});
  CHECK(agemo(c8, 1).order() == 4);
  CHECK(agemo(c8, 2).order() == 2);
  CHECK(omega(c8, 1).order() == 2);
  CHECK(omega(c8, 2).order() == 4);

  const PermutationGroup d8 = dihedral8();
  CHECK(same_subgroup(omega(d8, 1), d8));  // generated by its reflections

  const PermutationGroup g3 = cd3_group();
  CHECK(same_subgroup(agemo(g3, 1), frattini_2group(g3)));

  const PermutationGroup klein =
      PermutationGroup(4, {Permutation::from_images({1, 0, 2, 3}),
                           Permutation::from_images({0, 1, 3, 2})});
  CHECK(agemo(klein, 1).is_trivial());
}

TEST_CASE("intersection is exact, symmetric and monotone") {
  const PermutationGroup g3 = cd3_group();
  const auto& rho = g3.generators();
  const PermutationGroup p01 = subgroup(g3, {rho[0], rho[1]});
  const PermutationGroup p12 = subgroup(g3, {rho[1], rho[2]});

  const PermutationGroup meet = intersection(p01, p12);
  CHECK(same_subgroup(meet, subgroup(g3, {rho[1]})));
  CHECK(same_subgroup(meet, intersection(p12, p01)));
  CHECK(p01.order() % meet.order() == 0);
  CHECK(p12.order() % meet.order() == 0);

  CHECK(same_subgroup(intersection(p01, p01), p01));
  CHECK(intersection(p01, PermutationGroup::trivial(32)).is_trivial());
}

TEST_CASE("quotient by a normal subgroup") {
  const PermutationGroup g3 = cd3_group();

  auto [regular, hom] = quotient(g3, PermutationGroup::trivial(32));
  CHECK(regular.order() == 32);
  CHECK(hom.generator_images.size() == 3);

  auto [trivial_q, hom2] = quotient(g3, g3);
  CHECK(trivial_q.order() == 1);

  const PermutationGroup phi = frattini_2group(g3);
  auto [q, hom3] = quotient(g3, phi);
  CHECK(q.order() == 8);
  CHECK(is_elementary_abelian(q));

  // non-normal subgroup is rejected: a reflection subgroup of the dihedral
  const PermutationGroup d8 = dihedral8();
  const PermutationGroup refl =
      subgroup(d8, {Permutation::from_images({1, 0, 3, 2})});
  CHECK_THROWS_AS(quotient(d8, refl), InvalidArgumentError);
}

TEST_CASE("normality checks") {
  const PermutationGroup d8 = dihedral8();
  CHECK(is_normal(d8, derived_subgroup(d8)));
  const PermutationGroup refl =
      subgroup(d8, {Permutation::from_images({1, 0, 3, 2})});
  CHECK(!is_normal(d8, refl));

  const PermutationGroup g3 = cd3_group();
  const auto& rho = g3.generators();
  const PermutationGroup a1 =
      subgroup(g3, {(rho[0] * rho[1]).pow(2), rho[1] * rho[2]});
  CHECK(is_normal(g3, a1));
}

TEST_CASE("homomorphism extension") {
  const PermutationGroup g3 = cd3_group();
  const auto& rho = g3.generators();

  CHECK(hom_extends(g3, rho));  // identity map
  CHECK(hom_extends(g3, std::vector<Permutation>(3, Permutation(1))));

  // quotient maps extend by construction
  auto [q, hom] = quotient(g3, frattini_2group(g3));
  CHECK(hom_extends(g3, hom.generator_images));

  // swapping two non-interchangeable generators must fail
  CHECK(!hom_extends(g3, {rho[1], rho[0], rho[2]}));

  CHECK_THROWS_AS(hom_extends(g3, {rho[0]}), InvalidArgumentError);
}

TEST_CASE("hom_extends is stable under generating-set rewriting") {
  // replace the generators of the source by words in them and the images by
  // the same words in the images; extendability must not change
  const PermutationGroup g3 = cd3_group();
  const auto& rho = g3.generators();
  auto [q, hom] = quotient(g3, derived_subgroup(g3));
  const auto& im = hom.generator_images;

  const PermutationGroup rewritten(
      32, {rho[0] * rho[1], rho[1], rho[1] * rho[2]});
  CHECK(rewritten.order() == g3.order());
  CHECK(hom_extends(rewritten, {im[0] * im[1], im[1], im[1] * im[2]}));
}

TEST_CASE("elementary abelian predicate") {
  CHECK(is_elementary_abelian(PermutationGroup::trivial(4)));
  const PermutationGroup klein =
      PermutationGroup(4, {Permutation::from_images({1, 0, 2, 3}),
                           Permutation::from_images({0, 1, 3, 2})});
  CHECK(is_elementary_abelian(klein));
  CHECK(!is_elementary_abelian(dihedral8()));
}

TEST_CASE("chain order equals enumeration count for small groups") {
  for (const PermutationGroup& g :
       {dihedral8(), cd3_group(),
        regular_representation(coxeter_string_presentation({2, 4}))}) {
    CHECK(g.order() == g.elements().size());
    CHECK(g.order() == oracle::brute_force_closure(g.domain_size(),
                                                   g.generators())
                           .size());
  }
}

TEST_CASE("log2_exact") {
  CHECK(log2_exact(1) == 0);
  CHECK(log2_exact(1024) == 10);
  CHECK_THROWS_AS(log2_exact(48), InvalidArgumentError);
  CHECK_THROWS_AS(log2_exact(0), InvalidArgumentError);
}
