#include "doctest.h"
#include "oracles.hpp"
#include "polyforge/cd_presentation.hpp"
#include "polyforge/coset_enumeration.hpp"
#include "polyforge/errors.hpp"
#include "polyforge/string_cgroup.hpp"

using namespace polyforge;

namespace {

StringCGroup from_presentation(const Presentation& p) {
  const PermutationGroup g = regular_representation(p);
  return StringCGroup::validate(g, g.generators());
}

StringCGroup from_text(const std::string& text) {
  return from_presentation(parse_presentation(text));
}

StringCGroup dihedral8() {
  return from_presentation(coxeter_string_presentation({4}));
}

StringCGroup cd3() { return from_presentation(cd_presentation(3)); }

// {4,4}_(4,0): the [4,4] quotient with translation relator to the 4th power
StringCGroup t44_40() {
  return from_text(
      "gens r0 r1 r2\n"
      "rel r0^2, r1^2, r2^2\n"
      "rel (r0 r1)^4, (r1 r2)^4, (r0 r2)^2\n"
      "rel (r0 r1 r2 r1)^4\n");
}

}  // namespace

TEST_CASE("validation accepts the dihedral square group") {
  const StringCGroup s = dihedral8();
  CHECK(s.rank() == 2);
  CHECK(s.schlafli().entries == std::vector<std::uint64_t>{4});
  CHECK(s.schlafli().to_string() == "{4}");
  CHECK(is_nondegenerate(s));
}

TEST_CASE("validation accepts the rank-3 minimal group with type {4,4}") {
  const StringCGroup s = cd3();
  CHECK(s.rank() == 3);
  CHECK(s.group().order() == 32);
  CHECK(s.schlafli().entries == std::vector<std::uint64_t>{4, 4});
}

TEST_CASE("a direct product of two reflections is valid but degenerate") {
  const StringCGroup s = from_text("gens r0 r1\nrel r0^2, r1^2, (r0 r1)^2\n");
  CHECK(s.group().order() == 4);
  CHECK(s.schlafli().entries == std::vector<std::uint64_t>{2});
  CHECK(!is_nondegenerate(s));
}

TEST_CASE("validation rejects non-involutions") {
  const PermutationGroup c4 = PermutationGroup(
      4, {Permutation::from_images({1, 2, 3, 0})});
  CHECK_THROWS_AS(StringCGroup::validate(c4, c4.generators()),
                  ValidationError);
}

TEST_CASE("validation rejects string-condition violations") {
  // r0 = (0 1), r1 = (3 4), r2 = (1 2): r0 and r2 do not commute
  const Permutation r0 = Permutation::from_images({1, 0, 2, 3, 4});
  const Permutation r1 = Permutation::from_images({0, 1, 2, 4, 3});
  const Permutation r2 = Permutation::from_images({0, 2, 1, 3, 4});
  const PermutationGroup g(5, {r0, r1, r2});
  CHECK_THROWS_AS(StringCGroup::validate(g, {r0, r1, r2}), ValidationError);
}

TEST_CASE("validation rejects intersection-condition violations") {
  // r2 = r0 r1 inside <r0> x <r1>: <r0,r1> meets <r2> nontrivially
  const Permutation r0 = Permutation::from_images({1, 0, 2, 3});
  const Permutation r1 = Permutation::from_images({0, 1, 3, 2});
  const Permutation r2 = r0 * r1;
  const PermutationGroup g(4, {r0, r1, r2});
  CHECK_THROWS_MESSAGE_AS_SUBSTRING(StringCGroup::validate(g, {r0, r1, r2}),
                                    "intersection condition");
}

TEST_CASE("validation rejects a non-generating distinguished list") {
  const StringCGroup s = cd3();
  const auto& rho = s.distinguished_generators();
  CHECK_THROWS_AS(StringCGroup::validate(s.group(), {rho[0], rho[1]}),
                  ValidationError);
}

TEST_CASE("rotation subgroup and its index") {
  CHECK(rotation_subgroup(cd3()).order() == 16);
  CHECK(rotation_subgroup(dihedral8()).order() == 4);
  CHECK(rotation_subgroup(t44_40()).order() == 64);
}

TEST_CASE("index-2 rotation subgroups with one squared generator") {
  const StringCGroup s = cd3();
  for (int i = 1; i <= 2; ++i) {
    const PermutationGroup ai = a_subgroup(s, i);
    CHECK(ai.order() == 8);
    CHECK(is_normal(s.group(), ai));
  }
  CHECK(a_subgroup(t44_40(), 1).order() == 32);
  CHECK_THROWS_AS(a_subgroup(s, 0), InvalidArgumentError);
  CHECK_THROWS_AS(a_subgroup(s, 3), InvalidArgumentError);
}

TEST_CASE("b-chain orders") {
  CHECK(b_chain(dihedral8()).empty());

  const auto chain3 = b_chain(cd3());
  REQUIRE(chain3.size() == 1);
  CHECK(chain3[0].order() == 4);  // 2^(5-3)

  const auto chain40 = b_chain(t44_40());
  REQUIRE(chain40.size() == 1);
  CHECK(chain40[0].order() == 16);  // 2^(7-3)

  const auto chain4 = b_chain(from_presentation(cd_presentation(4)));
  REQUIRE(chain4.size() == 2);
  CHECK(chain4[0].order() == 16);  // 2^(7-3)
  CHECK(chain4[1].order() == 8);   // 2^(7-4)
}

TEST_CASE("c-chain orders and normality") {
  CHECK(c_chain(dihedral8()).empty());

  const auto chain3 = c_chain(cd3());
  REQUIRE(chain3.size() == 1);
  CHECK(chain3[0].order() == 1);  // 2^(5-3-2)

  const auto chain40 = c_chain(t44_40());
  REQUIRE(chain40.size() == 1);
  CHECK(chain40[0].order() == 4);  // 2^(7-3-2)

  const auto chain4 = c_chain(from_presentation(cd_presentation(4)));
  REQUIRE(chain4.size() == 2);
  CHECK(chain4[0].order() == 2);  // 2^(7-4-2)
  CHECK(chain4[1].order() == 1);  // 2^(7-4-3)
}

TEST_CASE("core subgroups B and C") {
  auto [b3, c3] = core_subgroups(cd3());
  CHECK(b3.order() == 4);
  CHECK(c3.order() == 1);

  auto [b40, c40] = core_subgroups(t44_40());
  CHECK(b40.order() == 16);
  CHECK(c40.order() == 4);

  // rank 2: B = A_1 and C = Phi(A_1)
  auto [b8, c8] = core_subgroups(dihedral8());
  CHECK(b8.order() == 2);
  CHECK(c8.order() == 1);
  CHECK(same_subgroup(b8, a_subgroup(dihedral8(), 1)));
}

TEST_CASE("normal closure of the minimal relators equals C") {
  const StringCGroup s = t44_40();
  const auto& rho = s.distinguished_generators();
  const int d = s.rank();
  std::vector<Permutation> rels;
  for (int i = 0; i + 1 < d; ++i) {
    const Permutation sq = (rho[static_cast<std::size_t>(i)] *
                            rho[static_cast<std::size_t>(i + 1)])
                               .pow(2);
    rels.push_back(sq * sq);
    if (i + 2 < d)
      rels.push_back(commutator(sq, rho[static_cast<std::size_t>(i + 2)]));
  }
  const PermutationGroup n = normal_closure(s.group(), rels);
  auto [b, c] = core_subgroups(s);
  CHECK(n.order() == 4);
  CHECK(same_subgroup(n, c));
  CHECK(same_subgroup(c, lower_central_term(s.group(), 3)));
}

TEST_CASE("theorem battery passes on the corpus-style groups") {
  for (const StringCGroup& s : {dihedral8(), cd3(), t44_40()}) {
    const VerificationReport r = theorem_check(s, "case");
    CHECK(r.overall());
    CHECK(!r.hypothesis_failure);
  }

  // {4,4}_(2,2): order 64, |C| = 2^{6-5} = 2
  const StringCGroup t22 = from_text(
      "gens r0 r1 r2\n"
      "rel r0^2, r1^2, r2^2\n"
      "rel (r0 r1)^4, (r1 r2)^4, (r0 r2)^2\n"
      "rel (r0 r1 r2)^4\n");
  CHECK(t22.group().order() == 64);
  auto [b22, c22] = core_subgroups(t22);
  CHECK(c22.order() == 2);
  const VerificationReport r = theorem_check(t22, "t44_22");
  CHECK(r.overall());
  CHECK(r.n == 6);
}

TEST_CASE("theorem battery reports the degenerate hypothesis distinctly") {
  const StringCGroup degenerate =
      from_text("gens r0 r1\nrel r0^2, r1^2, (r0 r1)^2\n");
  const VerificationReport r = theorem_check(degenerate, "degenerate");
  CHECK(r.hypothesis_failure);
  CHECK(!r.overall());

  // odd order: the symmetric group of the triangle
  const StringCGroup triangle =
      from_presentation(coxeter_string_presentation({3}));
  const VerificationReport r2 = theorem_check(triangle, "triangle");
  CHECK(r2.hypothesis_failure);
}

TEST_CASE("theorem battery on a rank-2 group of type {8}") {
  const StringCGroup d16 = from_presentation(coxeter_string_presentation({8}));
  CHECK(d16.group().order() == 16);
  auto [b, c] = core_subgroups(d16);
  CHECK(c.order() == 2);  // 2^(n-3) with n = 4
  const VerificationReport r = theorem_check(d16, "dihedral16");
  CHECK(r.overall());
}

TEST_CASE("quotient string C-group by C") {
  const StringCGroup s = t44_40();
  auto [b, c] = core_subgroups(s);
  const StringCGroup q = quotient_stringc(s, c);
  CHECK(q.group().order() == 32);
  CHECK(q.schlafli().entries == std::vector<std::uint64_t>{4, 4});

  // quotient by the trivial subgroup: an isomorphic copy
  const StringCGroup same =
      quotient_stringc(s, PermutationGroup::trivial(s.group().domain_size()));
  CHECK(same.group().order() == s.group().order());
  CHECK(same.schlafli() == s.schlafli());

  // quotient by the whole group has identity images
  CHECK_THROWS_AS(quotient_stringc(s, s.group()), ValidationError);
}

TEST_CASE("covering tests") {
  const StringCGroup s40 = t44_40();
  const StringCGroup c3 = cd3();

  CHECK(covers(s40, s40));
  CHECK(covers(s40, c3));
  CHECK(!covers(c3, s40));             // order obstruction
  CHECK(!covers(c3, dihedral8()));     // rank mismatch

  auto [b, c] = core_subgroups(s40);
  const StringCGroup q = quotient_stringc(s40, c);
  CHECK(covers(q, c3));
  CHECK(covers(c3, q));
}

TEST_CASE("minimal generating size equals the rank") {
  CHECK(minimal_generating_size(cd3()) == 3);
  CHECK(minimal_generating_size(dihedral8()) == 2);
  CHECK(minimal_generating_size(t44_40()) == 3);
}

TEST_CASE("reports serialize deterministically") {
  const VerificationReport r = theorem_check(dihedral8(), "d8");
  const std::string kv = report_to_keyvalue(r);
  CHECK(kv.find("group: d8") == 0);
  CHECK(kv.find("overall: pass") != std::string::npos);
  CHECK(kv == report_to_keyvalue(theorem_check(dihedral8(), "d8")));
  const std::string table = report_to_table(r);
  CHECK(table.find("overall: pass") != std::string::npos);
}
