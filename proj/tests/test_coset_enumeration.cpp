#include "doctest.h"
#include "polyforge/cd_presentation.hpp"
#include "polyforge/coset_enumeration.hpp"
#include "polyforge/errors.hpp"
#include "polyforge/presentation.hpp"

using namespace polyforge;

namespace {

// Exhaustive postcondition: every relator traces back to its start from
// every coset, and every generator column is a bijection.
void check_closed(const CosetTable& t, const Presentation& p) {
  for (int c = 0; c < t.coset_count(); ++c)
    for (const Word& w : p.relators) CHECK(t.trace(c, w) == c);
  for (int g = 0; g < p.generator_count; ++g) {
    std::vector<bool> hit(static_cast<std::size_t>(t.coset_count()), false);
    for (int c = 0; c < t.coset_count(); ++c) {
      const int img = t.apply(c, g + 1);
      CHECK(!hit[static_cast<std::size_t>(img)]);
      hit[static_cast<std::size_t>(img)] = true;
    }
  }
}

}  // namespace

TEST_CASE("dihedral enumeration closes at 8 cosets") {
  const Presentation p = coxeter_string_presentation({4});
  const CosetTable t = coset_enumerate(p, {});
  CHECK(t.coset_count() == 8);
  check_closed(t, p);
}

TEST_CASE("enumeration over a subgroup computes the index") {
  const Presentation p = coxeter_string_presentation({4});
  // <r0> has index 4 in the 8-element dihedral group
  const CosetTable t = coset_enumerate(p, {Word::generator(0)});
  CHECK(t.coset_count() == 4);
}

TEST_CASE("minimal groups have order 2^(2d-1)") {
  const CosetTable t3 = coset_enumerate(cd_presentation(3), {});
  CHECK(t3.coset_count() == 32);
  check_closed(t3, cd_presentation(3));

  const CosetTable t4 = coset_enumerate(cd_presentation(4), {});
  CHECK(t4.coset_count() == 128);
}

TEST_CASE("non-closing enumeration reports the resource limit") {
  // infinite dihedral group
  const Presentation p = parse_presentation("gens a b\nrel a^2, b^2\n");
  CHECK_THROWS_AS(coset_enumerate(p, {}, 4096), ResourceLimitError);
}

TEST_CASE("regular representation preserves generator order and size") {
  const Presentation p = cd_presentation(3);
  const PermutationGroup g = regular_representation(p);
  CHECK(g.order() == 32);
  CHECK(g.domain_size() == 32);
  CHECK(g.generators().size() == 3);
  // each generator is the involution the presentation declares
  for (const Permutation& r : g.generators()) {
    CHECK(!r.is_identity());
    CHECK((r * r).is_identity());
  }

  const PermutationGroup d4 =
      regular_representation(coxeter_string_presentation({4}));
  CHECK(d4.order() == 8);

  const PermutationGroup c2 = regular_representation(cd_presentation(2));
  CHECK(c2.order() == 8);
}
