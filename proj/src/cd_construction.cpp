#include "polyforge/cd_construction.hpp"

#include "polyforge/errors.hpp"

namespace polyforge {

Presentation cd_presentation(int d) {
  if (d < 2) throw InvalidArgumentError("rank must be at least 2");
  Presentation p =
      coxeter_string_presentation(std::vector<int>(static_cast<std::size_t>(d) - 1, 4));
  for (int i = 0; i + 1 < d; ++i) {
    Word pair = Word::generator(i);
    pair.append(Word::generator(i + 1));
    const Word square = pair.pow(2);
    for (int j = 0; j < d; ++j) {
      Word rel = Word::commutator(square, Word::generator(j));
      rel.normalize(std::vector<bool>(static_cast<std::size_t>(d), true));
      p.relators.push_back(std::move(rel));
    }
  }
  p.check();
  return p;
}

CdGroup cd_group(int d, int max_cosets) {
  Presentation p = cd_presentation(d);
  PermutationGroup g = regular_representation(p, max_cosets);
  const std::uint64_t expected = 1ull << (2 * d - 1);
  if (g.order() != expected)
    throw ContractViolationError(
        "minimal group of rank " + std::to_string(d) + " has order " +
        std::to_string(g.order()) + ", expected " + std::to_string(expected));
  StringCGroup s = StringCGroup::validate(g, g.generators());
  for (std::uint64_t e : s.schlafli().entries)
    if (e != 4)
      throw ContractViolationError("minimal group of rank " +
                                   std::to_string(d) + " has type " +
                                   s.schlafli().to_string());
  const auto& rho = s.distinguished_generators();
  std::vector<Permutation> kgens;
  for (int i = 0; i + 1 < d; ++i) {
    const Permutation pair = rho[static_cast<std::size_t>(i)] *
                             rho[static_cast<std::size_t>(i + 1)];
    kgens.push_back(pair * pair);
  }
  PermutationGroup central = subgroup(g, kgens);
  return CdGroup{d, std::move(p), std::move(s), std::move(central)};
}

VerificationReport verify_cd_structure(const CdGroup& c) {
  VerificationReport report;
  report.group_id = "cd_" + std::to_string(c.rank);
  report.d = c.rank;
  report.n = log2_exact(c.group.group().order());

  const PermutationGroup& g = c.group.group();
  const auto& rho = c.group.distinguished_generators();
  const auto& kgens = c.central.generators();

  bool k_abelian = true;
  for (std::size_t i = 0; i < kgens.size() && k_abelian; ++i)
    for (std::size_t j = i + 1; j < kgens.size() && k_abelian; ++j)
      k_abelian = kgens[i] * kgens[j] == kgens[j] * kgens[i];
  report.add_flag("k_abelian", k_abelian);
  report.add_flag("k_normal", is_normal(g, c.central));

  bool k_central = true;
  for (const Permutation& x : kgens)
    for (const Permutation& r : rho)
      if (!(x * r == r * x)) k_central = false;
  report.add_flag("k_central", k_central);

  auto [q, hom] = quotient(g, c.central);
  bool q_abelian = true;
  for (std::size_t i = 0; i < hom.generator_images.size(); ++i)
    for (std::size_t j = i + 1; j < hom.generator_images.size(); ++j)
      if (!(hom.generator_images[i] * hom.generator_images[j] ==
            hom.generator_images[j] * hom.generator_images[i]))
        q_abelian = false;
  report.add_flag("quotient_by_k_abelian", q_abelian);

  bool nonabelian = false;
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t j = i + 1; j < rho.size(); ++j)
      if (!(rho[i] * rho[j] == rho[j] * rho[i])) nonabelian = true;
  report.add_flag("group_nonabelian", nonabelian);

  report.add_flag("lower_central_2_nontrivial",
                  !lower_central_term(g, 2).is_trivial());
  report.add_flag("lower_central_3_trivial",
                  lower_central_term(g, 3).is_trivial());

  const std::string k_order = std::to_string(c.central.order());
  report.add("k_order", k_order, k_order);
  return report;
}

bool tightness_check(const StringCGroup& s) {
  std::uint64_t bound = 2;
  for (std::uint64_t e : s.schlafli().entries) bound *= e;
  if (s.group().order() < bound)
    throw ContractViolationError(
        "group order " + std::to_string(s.group().order()) +
        " is below the flag-count lower bound " + std::to_string(bound));
  return s.group().order() == bound;
}

}  // namespace polyforge
