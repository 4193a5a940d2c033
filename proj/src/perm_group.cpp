#include "polyforge/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "polyforge/errors.hpp"

namespace polyforge {

namespace {

// (u * s)(x) == v(x) for all x, without materializing u * s.
bool product_equals(const Permutation& u, const Permutation& s,
                    const Permutation& v) {
  const auto& ui = u.images();
  const auto& si = s.images();
  const auto& vi = v.images();
  for (std::size_t x = 0; x < ui.size(); ++x)
    if (si[ui[x]] != vi[x]) return false;
  return true;
}

struct ImageVecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

struct PermutationGroup::Impl {
  std::uint32_t domain = 0;
  std::vector<Permutation> gens;  // as given, identities included
  std::uint64_t order = 1;

  struct Level {
    std::uint32_t base = 0;
    std::vector<Permutation> strong_gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> pos;  // point -> orbit index, -1 outside
    std::vector<Permutation> transversal;  // transversal[k] maps base -> orbit[k]
  };
  std::vector<Level> levels;

  void recompute_orbit(Level& lv) const {
    lv.orbit.clear();
    lv.transversal.clear();
    lv.pos.assign(domain, -1);
    lv.orbit.push_back(lv.base);
    lv.pos[lv.base] = 0;
    lv.transversal.emplace_back(domain);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const Permutation& s : lv.strong_gens) {
        const std::uint32_t q = s(lv.orbit[k]);
        if (lv.pos[q] < 0) {
          lv.pos[q] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.transversal.push_back(lv.transversal[k] * s);
        }
      }
    }
  }

  // Sifts g through levels [from, end); returns the residue and the level at
  // which sifting stopped (levels.size() if it ran through).
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from) const {
    for (std::size_t k = from; k < levels.size(); ++k) {
      const Level& lv = levels[k];
      const std::uint32_t p = g(lv.base);
      const std::int32_t idx = lv.pos[p];
      if (idx < 0) return {std::move(g), k};
      if (p != lv.base) g = g * lv.transversal[idx].inverse();
    }
    return {std::move(g), levels.size()};
  }

  void build() {
    std::vector<Permutation> work;
    for (const Permutation& g : gens)
      if (!g.is_identity()) work.push_back(g);
    if (work.empty()) {
      order = 1;
      return;
    }

    // Initial levels: nested strong generator sets, base = smallest point
    // moved by a generator still in play.
    while (!work.empty()) {
      std::int64_t base = -1;
      for (const Permutation& g : work) {
        const std::int64_t m = g.smallest_moved_point();
        if (base < 0 || (m >= 0 && m < base)) base = m;
      }
      Level lv;
      lv.base = static_cast<std::uint32_t>(base);
      lv.strong_gens = work;
      recompute_orbit(lv);
      levels.push_back(std::move(lv));
      std::vector<Permutation> next;
      for (const Permutation& g : work)
        if (g(static_cast<std::uint32_t>(base)) ==
            static_cast<std::uint32_t>(base))
          next.push_back(g);
      work = std::move(next);
    }

    // Verify Schreier generators level by level, deepest first; a residue
    // that fails to sift becomes a new strong generator.
    std::size_t k = levels.size() - 1;
    while (true) {
      bool clean = true;
      Level& lv = levels[k];
      for (std::size_t oi = 0; oi < lv.orbit.size() && clean; ++oi) {
        for (std::size_t si = 0; si < lv.strong_gens.size() && clean; ++si) {
          const Permutation& s = lv.strong_gens[si];
          const std::uint32_t q = s(lv.orbit[oi]);
          const Permutation& u_q = lv.transversal[lv.pos[q]];
          if (product_equals(lv.transversal[oi], s, u_q)) continue;
          Permutation schreier =
              lv.transversal[oi] * s * u_q.inverse();
          auto [residue, j] = sift(std::move(schreier), k + 1);
          if (residue.is_identity()) continue;
          if (j == levels.size()) {
            Level fresh;
            fresh.base =
                static_cast<std::uint32_t>(residue.smallest_moved_point());
            levels.push_back(std::move(fresh));
          }
          for (std::size_t t = k + 1; t <= j; ++t) {
            levels[t].strong_gens.push_back(residue);
            recompute_orbit(levels[t]);
          }
          k = j;
          clean = false;
        }
      }
      if (clean) {
        if (k == 0) break;
        --k;
      }
    }

    order = 1;
    for (const Level& lv : levels) order *= lv.orbit.size();
  }

  void for_each(std::size_t k, const Permutation& suffix,
                const std::function<void(const Permutation&)>& fn) const {
    if (k == levels.size()) {
      fn(suffix);
      return;
    }
    const Level& lv = levels[k];
    for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
      if (idx == 0)
        for_each(k + 1, suffix, fn);
      else
        for_each(k + 1, lv.transversal[idx] * suffix, fn);
    }
  }
};

PermutationGroup::PermutationGroup(std::uint32_t domain_size,
                                   std::vector<Permutation> generators) {
  auto impl = std::make_shared<Impl>();
  impl->domain = domain_size;
  for (const Permutation& g : generators)
    if (g.degree() != domain_size)
      throw InvalidArgumentError("generator degree differs from domain size");
  impl->gens = std::move(generators);
  impl->build();
  impl_ = std::move(impl);
}

PermutationGroup PermutationGroup::trivial(std::uint32_t domain_size) {
  return PermutationGroup(domain_size, {});
}

std::uint32_t PermutationGroup::domain_size() const { return impl_->domain; }

const std::vector<Permutation>& PermutationGroup::generators() const {
  return impl_->gens;
}

std::uint64_t PermutationGroup::order() const { return impl_->order; }

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != impl_->domain)
    throw InvalidArgumentError("domain mismatch in membership test");
  auto [residue, level] = impl_->sift(g, 0);
  return residue.is_identity();
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw ResourceLimitError("element enumeration cap exceeded: order " +
                             std::to_string(order()) + " > " +
                             std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(order());
  impl_->for_each(0, identity(), [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void PermutationGroup::for_each_element(
    const std::function<void(const Permutation&)>& fn) const {
  impl_->for_each(0, identity(), fn);
}

namespace {

void require_members(const PermutationGroup& g,
                     const std::vector<Permutation>& gens, const char* what) {
  for (const Permutation& x : gens)
    if (!g.contains(x))
      throw InvalidArgumentError(std::string(what) +
                                 ": generator outside the ambient group");
}

}  // namespace

PermutationGroup subgroup(const PermutationGroup& g,
                          const std::vector<Permutation>& gens) {
  require_members(g, gens, "subgroup");
  return PermutationGroup(g.domain_size(), gens);
}

PermutationGroup normal_closure(const PermutationGroup& g,
                                const std::vector<Permutation>& gens) {
  require_members(g, gens, "normal_closure");
  std::vector<Permutation> closure_gens;
  PermutationGroup h = PermutationGroup::trivial(g.domain_size());
  std::deque<Permutation> pending;
  auto add = [&](const Permutation& x) {
    if (x.is_identity() || h.contains(x)) return;
    closure_gens.push_back(x);
    h = PermutationGroup(g.domain_size(), closure_gens);
    pending.push_back(x);
  };
  for (const Permutation& x : gens) add(x);
  while (!pending.empty()) {
    const Permutation x = std::move(pending.front());
    pending.pop_front();
    for (const Permutation& gg : g.generators()) add(conjugate(x, gg));
  }
  return h;
}

PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

PermutationGroup lower_central_term(const PermutationGroup& g, int k) {
  if (k < 1) throw InvalidArgumentError("lower central term index must be >= 1");
  PermutationGroup term = g;
  for (int step = 2; step <= k; ++step) {
    std::vector<Permutation> comms;
    for (const Permutation& x : term.generators())
      for (const Permutation& y : g.generators()) {
        if (x.is_identity()) continue;
        comms.push_back(commutator(x, y));
      }
    term = normal_closure(g, comms);
    if (term.is_trivial()) break;  // all later terms stay trivial
  }
  return term;
}

PermutationGroup frattini_2group(const PermutationGroup& g) {
  if (!is_2group(g))
    throw InvalidArgumentError("frattini_2group requires a 2-group");
  std::vector<Permutation> seeds;
  const auto& gens = g.generators();
  for (const Permutation& x : gens) seeds.push_back(x * x);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seeds.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, seeds);
}

namespace {

// Collects elements passing `keep` into a subgroup, inserting a new
// generator only when the element is not already generated.
PermutationGroup collect_subgroup(
    const PermutationGroup& g,
    const std::function<bool(const Permutation&)>& keep) {
  std::vector<Permutation> gens;
  PermutationGroup h = PermutationGroup::trivial(g.domain_size());
  g.for_each_element([&](const Permutation& x) {
    if (x.is_identity() || !keep(x)) return;
    if (h.contains(x)) return;
    gens.push_back(x);
    h = PermutationGroup(g.domain_size(), gens);
  });
  return h;
}

}  // namespace

PermutationGroup agemo(const PermutationGroup& g, int j, std::uint64_t cap) {
  if (!is_2group(g)) throw InvalidArgumentError("agemo requires a 2-group");
  if (j < 1) throw InvalidArgumentError("agemo index must be >= 1");
  if (g.order() > cap)
    throw ResourceLimitError("agemo: element enumeration cap exceeded");
  std::vector<Permutation> gens;
  PermutationGroup h = PermutationGroup::trivial(g.domain_size());
  g.for_each_element([&](const Permutation& x) {
    Permutation p = x;
    for (int s = 0; s < j; ++s) p = p * p;
    if (p.is_identity() || h.contains(p)) return;
    gens.push_back(p);
    h = PermutationGroup(g.domain_size(), gens);
  });
  return h;
}

PermutationGroup omega(const PermutationGroup& g, int j, std::uint64_t cap) {
  if (!is_2group(g)) throw InvalidArgumentError("omega requires a 2-group");
  if (j < 1) throw InvalidArgumentError("omega index must be >= 1");
  if (g.order() > cap)
    throw ResourceLimitError("omega: element enumeration cap exceeded");
  return collect_subgroup(g, [&](const Permutation& x) {
    Permutation p = x;
    for (int s = 0; s < j; ++s) p = p * p;
    return p.is_identity();
  });
}

PermutationGroup intersection(const PermutationGroup& h1,
                              const PermutationGroup& h2, std::uint64_t cap) {
  if (h1.domain_size() != h2.domain_size())
    throw InvalidArgumentError("intersection: domain mismatch");
  const PermutationGroup& small = h1.order() <= h2.order() ? h1 : h2;
  const PermutationGroup& large = h1.order() <= h2.order() ? h2 : h1;
  if (small.order() > cap)
    throw ResourceLimitError("intersection: element enumeration cap exceeded");
  return collect_subgroup(small, [&](const Permutation& x) {
    return large.contains(x);
  });
}

std::pair<PermutationGroup, GroupHom> quotient(const PermutationGroup& g,
                                               const PermutationGroup& n,
                                               std::uint64_t cap) {
  if (!is_normal(g, n))
    throw InvalidArgumentError("quotient: subgroup is not normal");
  const std::uint64_t index = g.order() / n.order();
  if (index > cap || n.order() > cap)
    throw ResourceLimitError("quotient: element enumeration cap exceeded");

  const std::vector<Permutation> n_elems = n.elements(cap);
  // Canonical label of the coset N*x: the lexicographically smallest image
  // vector among {n*x : n in N}.
  auto canon = [&](const Permutation& x) {
    std::vector<std::uint32_t> best = x.images();
    for (const Permutation& m : n_elems) {
      if (m.is_identity()) continue;
      std::vector<std::uint32_t> cand = (m * x).images();
      if (cand < best) best = std::move(cand);
    }
    return best;
  };

  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, ImageVecHash>
      coset_of;
  std::vector<Permutation> reps;
  reps.push_back(g.identity());
  coset_of.emplace(canon(reps[0]), 0);

  const auto& gens = g.generators();
  std::vector<std::vector<std::uint32_t>> images(
      gens.size(), std::vector<std::uint32_t>());
  for (auto& v : images) v.resize(static_cast<std::size_t>(index));

  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation t = reps[c] * gens[gi];
      auto key = canon(t);
      auto [it, fresh] = coset_of.try_emplace(
          std::move(key), static_cast<std::uint32_t>(reps.size()));
      if (fresh) {
        if (reps.size() == index)
          throw ContractViolationError("quotient: more cosets than the index");
        reps.push_back(std::move(t));
      }
      images[gi][c] = it->second;
    }
  }
  if (reps.size() != index)
    throw ContractViolationError("quotient: coset count mismatch");

  std::vector<Permutation> qgens;
  qgens.reserve(gens.size());
  for (auto& v : images) qgens.push_back(Permutation::from_images(std::move(v)));
  PermutationGroup q(static_cast<std::uint32_t>(index), qgens);
  return {q, GroupHom{g, q, std::move(qgens)}};
}

bool is_normal(const PermutationGroup& g, const PermutationGroup& h) {
  if (g.domain_size() != h.domain_size())
    throw InvalidArgumentError("is_normal: domain mismatch");
  require_members(g, h.generators(), "is_normal");
  for (const Permutation& x : h.generators())
    for (const Permutation& gg : g.generators())
      if (!h.contains(conjugate(x, gg))) return false;
  return true;
}

bool hom_extends(const PermutationGroup& g,
                 const std::vector<Permutation>& images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size())
    throw InvalidArgumentError("hom_extends: one image per generator required");
  const std::uint32_t n = g.domain_size();
  std::uint32_t m = 0;
  for (const Permutation& im : images) {
    if (m == 0)
      m = im.degree();
    else if (im.degree() != m)
      throw InvalidArgumentError("hom_extends: image degrees differ");
  }
  if (gens.empty()) return true;

  std::vector<Permutation> paired;
  paired.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<std::uint32_t> img(n + m);
    for (std::uint32_t x = 0; x < n; ++x) img[x] = gens[i](x);
    for (std::uint32_t x = 0; x < m; ++x) img[n + x] = n + images[i](x);
    paired.push_back(Permutation::from_images(std::move(img)));
  }
  PermutationGroup d(n + m, paired);
  return d.order() == g.order();
}

bool is_elementary_abelian(const PermutationGroup& g) {
  const auto& gens = g.generators();
  for (const Permutation& x : gens)
    if (!(x * x).is_identity()) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool is_2group(const PermutationGroup& g) {
  const std::uint64_t o = g.order();
  return (o & (o - 1)) == 0;
}

int log2_exact(std::uint64_t value) {
  if (value == 0 || (value & (value - 1)) != 0)
    throw InvalidArgumentError("value is not a power of two");
  int e = 0;
  while (value > 1) {
    value >>= 1;
    ++e;
  }
  return e;
}

bool same_subgroup(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.domain_size() != b.domain_size()) return false;
  if (a.order() != b.order()) return false;
  for (const Permutation& x : a.generators())
    if (!b.contains(x)) return false;
  return true;
}

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& gens,
                          std::uint32_t domain_size) {
  Permutation acc(domain_size);
  for (int letter : w.letters()) {
    const int idx = Word::letter_index(letter);
    if (idx >= static_cast<int>(gens.size()))
      throw InvalidArgumentError("word references unknown generator");
    acc = Word::letter_inverted(letter) ? acc * gens[idx].inverse()
                                        : acc * gens[idx];
  }
  return acc;
}

std::string serialize_group(const PermutationGroup& g) {
  std::ostringstream out;
  out << "domain: " << g.domain_size() << '\n';
  for (const Permutation& p : g.generators())
    out << serialize_permutation(p) << '\n';
  return out.str();
}

}  // namespace polyforge
