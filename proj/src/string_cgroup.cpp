#include "polyforge/string_cgroup.hpp"

#include <sstream>

#include "polyforge/cd_presentation.hpp"
#include "polyforge/errors.hpp"

namespace polyforge {

std::string SchlafliType::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ',';
    out << entries[i];
  }
  out << '}';
  return out.str();
}

struct StringCGroup::Data {
  PermutationGroup group;
  std::vector<Permutation> rho;
  SchlafliType schlafli;
  std::vector<PermutationGroup> parabolics;  // indexed by subset mask
};

namespace {

std::string mask_to_indices(std::uint32_t mask) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; mask >> i; ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) out << ',';
    out << i;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

StringCGroup StringCGroup::validate(const PermutationGroup& group,
                                    std::vector<Permutation> distinguished) {
  const int d = static_cast<int>(distinguished.size());
  if (d < 1) throw ValidationError("no distinguished generators given");
  if (d > 16) throw ValidationError("rank too large for exhaustive checks");

  for (int i = 0; i < d; ++i) {
    const Permutation& r = distinguished[static_cast<std::size_t>(i)];
    if (!group.contains(r))
      throw ValidationError("distinguished generator " + std::to_string(i) +
                            " lies outside the group");
    if (r.is_identity() || !(r * r).is_identity())
      throw ValidationError("distinguished generator " + std::to_string(i) +
                            " is not an involution");
  }

  auto data = std::make_shared<Data>(Data{
      group.generators() == distinguished
          ? group
          : PermutationGroup(group.domain_size(), distinguished),
      std::move(distinguished),
      {},
      {}});
  if (data->group.order() != group.order())
    throw ValidationError("distinguished generators do not generate the group");
  const auto& rho = data->rho;

  for (int i = 0; i < d; ++i)
    for (int j = i + 2; j < d; ++j) {
      const Permutation p = rho[static_cast<std::size_t>(i)] *
                            rho[static_cast<std::size_t>(j)];
      if (!(p * p).is_identity())
        throw ValidationError("string condition fails: generators " +
                              std::to_string(i) + " and " + std::to_string(j) +
                              " do not commute");
    }

  const std::uint32_t nmasks = 1u << d;
  data->parabolics.reserve(nmasks);
  for (std::uint32_t mask = 0; mask < nmasks; ++mask) {
    if (mask + 1 == nmasks) {
      data->parabolics.push_back(data->group);
      continue;
    }
    std::vector<Permutation> gens;
    for (int i = 0; i < d; ++i)
      if (mask >> i & 1u) gens.push_back(rho[static_cast<std::size_t>(i)]);
    data->parabolics.emplace_back(group.domain_size(), std::move(gens));
  }

  // Exhaustive intersection condition. P_{K&J} <= P_K cap P_J always holds
  // (its generators lie in both sides), so it is enough to count the
  // elements of the smaller side that belong to the other and compare with
  // |P_{K&J}|; a surplus element is a witness.
  std::vector<std::vector<Permutation>> elems(nmasks);
  auto elements_of = [&](std::uint32_t mask) -> const std::vector<Permutation>& {
    if (elems[mask].empty())
      elems[mask] = data->parabolics[mask].elements(
          data->parabolics[mask].order());
    return elems[mask];
  };
  for (std::uint32_t k = 0; k < nmasks; ++k) {
    for (std::uint32_t j = k; j < nmasks; ++j) {
      const std::uint32_t meet = k & j;
      const std::uint64_t expected = data->parabolics[meet].order();
      const bool k_smaller =
          data->parabolics[k].order() <= data->parabolics[j].order();
      const std::uint32_t small = k_smaller ? k : j;
      const std::uint32_t large = k_smaller ? j : k;
      std::uint64_t count = 0;
      const Permutation* witness = nullptr;
      for (const Permutation& x : elements_of(small)) {
        if (!data->parabolics[large].contains(x)) continue;
        ++count;
        if (witness == nullptr && !data->parabolics[meet].contains(x))
          witness = &x;
      }
      if (count != expected || witness != nullptr) {
        std::ostringstream msg;
        msg << "intersection condition fails for K=" << mask_to_indices(k)
            << ", J=" << mask_to_indices(j) << ": |P_K cap P_J| = " << count
            << " but |P_{K cap J}| = " << expected;
        if (witness != nullptr)
          msg << "; witness " << serialize_permutation(*witness);
        throw ValidationError(msg.str());
      }
    }
  }

  data->schlafli.entries.reserve(static_cast<std::size_t>(d) - 1);
  for (int i = 1; i < d; ++i)
    data->schlafli.entries.push_back(
        (rho[static_cast<std::size_t>(i - 1)] * rho[static_cast<std::size_t>(i)])
            .order());

  StringCGroup s;
  s.data_ = std::move(data);
  return s;
}

int StringCGroup::rank() const {
  return static_cast<int>(data_->rho.size());
}

const PermutationGroup& StringCGroup::group() const { return data_->group; }

const std::vector<Permutation>& StringCGroup::distinguished_generators()
    const {
  return data_->rho;
}

const SchlafliType& StringCGroup::schlafli() const { return data_->schlafli; }

const PermutationGroup& StringCGroup::parabolic(std::uint32_t mask) const {
  return data_->parabolics.at(mask);
}

namespace {

bool hypotheses_hold(const StringCGroup& s) {
  return s.rank() >= 2 && is_2group(s.group()) && s.group().order() >= 4 &&
         is_nondegenerate(s);
}

std::vector<Permutation> rotation_generators(const StringCGroup& s) {
  const auto& rho = s.distinguished_generators();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < rho.size(); ++i)
    gens.push_back(rho[i] * rho[i + 1]);
  return gens;
}

struct ASubgroupResult {
  PermutationGroup group;
  bool order_ok;
  bool normal_ok;
};

ASubgroupResult a_subgroup_core(const StringCGroup& s, int i) {
  const int d = s.rank();
  if (i < 1 || i >= d)
    throw InvalidArgumentError("a_subgroup index must be in 1..d-1");
  const auto& rho = s.distinguished_generators();
  std::vector<Permutation> gens;
  for (int j = 1; j < d; ++j) {
    Permutation p = rho[static_cast<std::size_t>(j - 1)] *
                    rho[static_cast<std::size_t>(j)];
    if (j == i) p = p * p;
    gens.push_back(std::move(p));
  }
  PermutationGroup a(s.group().domain_size(), std::move(gens));
  const int n = log2_exact(s.group().order());
  const bool order_ok = a.order() == (1ull << (n - 2));
  const bool normal_ok = is_normal(s.group(), a);
  return {std::move(a), order_ok, normal_ok};
}

void require_2power_nondegenerate(const StringCGroup& s, const char* what) {
  if (!is_2group(s.group()))
    throw InvalidArgumentError(std::string(what) +
                               " requires a group of 2-power order");
  if (!is_nondegenerate(s))
    throw InvalidArgumentError(std::string(what) +
                               " requires a non-degenerate type");
}

}  // namespace

PermutationGroup rotation_subgroup(const StringCGroup& s) {
  PermutationGroup a(s.group().domain_size(), rotation_generators(s));
  if (is_2group(s.group()) && is_nondegenerate(s)) {
    if (s.group().order() != 2 * a.order())
      throw ContractViolationError(
          "rotation subgroup index is not 2 (order " +
          std::to_string(a.order()) + " in " +
          std::to_string(s.group().order()) + ")");
  }
  return a;
}

PermutationGroup a_subgroup(const StringCGroup& s, int i) {
  require_2power_nondegenerate(s, "a_subgroup");
  ASubgroupResult r = a_subgroup_core(s, i);
  if (!r.order_ok)
    throw ContractViolationError("a_subgroup " + std::to_string(i) +
                                 " has unexpected order " +
                                 std::to_string(r.group.order()));
  if (!r.normal_ok)
    throw ContractViolationError("a_subgroup " + std::to_string(i) +
                                 " is not normal in the group");
  return std::move(r.group);
}

std::vector<PermutationGroup> b_chain(const StringCGroup& s) {
  require_2power_nondegenerate(s, "b_chain");
  const int d = s.rank();
  std::vector<PermutationGroup> chain;
  if (d < 3) return chain;
  const int n = log2_exact(s.group().order());
  PermutationGroup current = a_subgroup(s, 1);
  for (int i = 1; i <= d - 2; ++i) {
    current = intersection(current, a_subgroup(s, i + 1));
    if (current.order() != (1ull << (n - (i + 2))))
      throw ContractViolationError("b_chain term " + std::to_string(i) +
                                   " has unexpected order " +
                                   std::to_string(current.order()));
    chain.push_back(current);
  }
  return chain;
}

std::vector<PermutationGroup> c_chain(const StringCGroup& s) {
  require_2power_nondegenerate(s, "c_chain");
  const int d = s.rank();
  std::vector<PermutationGroup> chain;
  if (d < 3) return chain;
  const int n = log2_exact(s.group().order());
  PermutationGroup current = frattini_2group(a_subgroup(s, 1));
  for (int i = 1; i <= d - 2; ++i) {
    current = intersection(current, frattini_2group(a_subgroup(s, i + 1)));
    if (current.order() != (1ull << (n - d - (i + 1))))
      throw ContractViolationError("c_chain term " + std::to_string(i) +
                                   " has unexpected order " +
                                   std::to_string(current.order()));
    if (!is_normal(s.group(), current))
      throw ContractViolationError("c_chain term " + std::to_string(i) +
                                   " is not normal in the group");
    chain.push_back(current);
  }
  return chain;
}

std::pair<PermutationGroup, PermutationGroup> core_subgroups(
    const StringCGroup& s) {
  require_2power_nondegenerate(s, "core_subgroups");
  const int d = s.rank();
  const int n = log2_exact(s.group().order());
  PermutationGroup b = a_subgroup(s, 1);
  PermutationGroup c = frattini_2group(b);
  for (int i = 2; i <= d - 1; ++i) {
    const PermutationGroup ai = a_subgroup(s, i);
    b = intersection(b, ai);
    c = intersection(c, frattini_2group(ai));
  }
  if (b.order() != (1ull << (n - d)))
    throw ContractViolationError("core subgroup B has unexpected order " +
                                 std::to_string(b.order()));
  if (c.order() != (1ull << (n - 2 * d + 1)))
    throw ContractViolationError("core subgroup C has unexpected order " +
                                 std::to_string(c.order()));
  return {std::move(b), std::move(c)};
}

VerificationReport theorem_check(const StringCGroup& s,
                                 const std::string& group_id) {
  VerificationReport report;
  report.group_id = group_id;
  report.d = s.rank();

  if (!hypotheses_hold(s)) {
    report.hypothesis_failure = true;
    std::string reason;
    if (s.rank() < 2)
      reason = "rank below 2";
    else if (!is_2group(s.group()) || s.group().order() < 4)
      reason = "order is not a 2-power with n >= 2";
    else
      reason = "degenerate type " + s.schlafli().to_string();
    report.assertions.push_back({"hypothesis", "satisfied", reason, false});
    return report;
  }

  const int d = s.rank();
  const int n = log2_exact(s.group().order());
  report.n = n;
  const PermutationGroup& g = s.group();
  const auto& rho = s.distinguished_generators();
  auto pow2 = [](int e) { return std::to_string(1ull << e); };

  PermutationGroup a(g.domain_size(), rotation_generators(s));
  report.add("rotation_index", "2", std::to_string(g.order() / a.order()));
  report.add("rotation_order", pow2(n - 1), std::to_string(a.order()));

  std::vector<PermutationGroup> a_subs;
  for (int i = 1; i <= d - 1; ++i) {
    ASubgroupResult r = a_subgroup_core(s, i);
    report.add("a" + std::to_string(i) + "_order", pow2(n - 2),
               std::to_string(r.group.order()));
    report.add_flag("a" + std::to_string(i) + "_normal_in_g", r.normal_ok);
    a_subs.push_back(std::move(r.group));
  }

  // B and C chains; for rank 2 both collapse to their single terms.
  PermutationGroup b = a_subs[0];
  PermutationGroup c = frattini_2group(a_subs[0]);
  for (int i = 1; i <= d - 2; ++i) {
    b = intersection(b, a_subs[static_cast<std::size_t>(i)]);
    report.add("b" + std::to_string(i) + "_order", pow2(n - (i + 2)),
               std::to_string(b.order()));
    c = intersection(c,
                     frattini_2group(a_subs[static_cast<std::size_t>(i)]));
    report.add("c" + std::to_string(i) + "_order", pow2(n - d - (i + 1)),
               std::to_string(c.order()));
    report.add_flag("c" + std::to_string(i) + "_normal_in_g",
                    is_normal(g, c));
  }

  const PermutationGroup phi = frattini_2group(g);
  const PermutationGroup derived = derived_subgroup(g);
  const PermutationGroup agemo1 = agemo(g, 1);
  report.add("frattini_order", pow2(n - d), std::to_string(phi.order()));
  report.add_flag("frattini_eq_derived", same_subgroup(phi, derived));
  report.add_flag("frattini_eq_agemo1", same_subgroup(phi, agemo1));
  report.add_flag("derived_eq_b", same_subgroup(derived, b));
  report.add("c_order", pow2(n - 2 * d + 1), std::to_string(c.order()));

  for (int i = 0; i <= d - 2; ++i) {
    const Permutation pair = rho[static_cast<std::size_t>(i)] *
                             rho[static_cast<std::size_t>(i + 1)];
    const Permutation sq = pair * pair;
    report.add_flag("pow4_in_c_i" + std::to_string(i), c.contains(sq * sq));
    for (int j = 0; j <= d - 1; ++j)
      report.add_flag(
          "comm_in_c_i" + std::to_string(i) + "_j" + std::to_string(j),
          c.contains(commutator(sq, rho[static_cast<std::size_t>(j)])));
  }

  const bool c_normal = is_normal(g, c);
  report.add_flag("c_normal_in_g", c_normal);
  if (c_normal) {
    auto [q, hom] = quotient(g, c);
    report.add("quotient_order", pow2(2 * d - 1), std::to_string(q.order()));
    bool relators_hold = true;
    for (const Word& w : cd_presentation(d).relators)
      if (!evaluate_word(w, hom.generator_images, q.domain_size())
               .is_identity()) {
        relators_hold = false;
        break;
      }
    report.add_flag("quotient_satisfies_minimal_relators", relators_hold);
  } else {
    report.assertions.push_back(
        {"quotient_order", pow2(2 * d - 1), "skipped", false});
    report.assertions.push_back(
        {"quotient_satisfies_minimal_relators", "true", "skipped", false});
  }

  report.add_flag("c_eq_lower_central_3",
                  same_subgroup(c, lower_central_term(g, 3)));
  return report;
}

StringCGroup quotient_stringc(const StringCGroup& s,
                              const PermutationGroup& n) {
  auto [q, hom] = quotient(s.group(), n);
  for (std::size_t i = 0; i < hom.generator_images.size(); ++i) {
    const Permutation& im = hom.generator_images[i];
    if (im.is_identity() || !(im * im).is_identity())
      throw ValidationError("induced generator " + std::to_string(i) +
                            " is not an involution in the quotient");
  }
  return StringCGroup::validate(q, hom.generator_images);
}

bool covers(const StringCGroup& p, const StringCGroup& q) {
  if (p.rank() != q.rank()) return false;
  return hom_extends(p.group(), q.distinguished_generators());
}

int minimal_generating_size(const StringCGroup& s) {
  if (!is_2group(s.group()))
    throw InvalidArgumentError(
        "minimal_generating_size requires a group of 2-power order");
  const PermutationGroup phi = frattini_2group(s.group());
  const int k = log2_exact(s.group().order() / phi.order());
  if (k != s.rank())
    throw ContractViolationError(
        "Frattini index " + std::to_string(1ull << k) +
        " does not match the rank " + std::to_string(s.rank()));
  return k;
}

}  // namespace polyforge
