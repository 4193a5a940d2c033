#include "polyforge/polytope.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>

#include "polyforge/errors.hpp"

namespace polyforge {

namespace {

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

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
};

}  // namespace

int Polytope::rank_of(int face_id) const {
  if (face_id == least_face) return -1;
  if (face_id == greatest_face) return rank;
  for (int r = 0; r < rank; ++r)
    for (int id : faces_of_rank[static_cast<std::size_t>(r)])
      if (id == face_id) return r;
  throw InvalidArgumentError("unknown face id");
}

Polytope build_polytope(const StringCGroup& s, std::uint64_t cap) {
  const PermutationGroup& g = s.group();
  if (g.order() > cap)
    throw ResourceLimitError("polytope construction cap exceeded: order " +
                             std::to_string(g.order()));
  const int d = s.rank();
  const auto& rho = s.distinguished_generators();
  const std::vector<Permutation> elems = g.elements(cap);
  const int nelems = static_cast<int>(elems.size());

  std::unordered_map<std::vector<std::uint32_t>, int, ImageVecHash> index_of;
  index_of.reserve(static_cast<std::size_t>(nelems) * 2);
  for (int e = 0; e < nelems; ++e)
    index_of.emplace(elems[static_cast<std::size_t>(e)].images(), e);

  const std::uint32_t full_mask = (1u << d) - 1;

  Polytope p;
  p.rank = d;
  p.flag_count = nelems;
  p.source = s;

  // Face labels per rank: the canonical form of the left coset x*P_i is the
  // lexicographically smallest image vector over the coset.
  std::vector<std::vector<int>> face_of(static_cast<std::size_t>(d));
  std::vector<int> face_rep;  // representative element per global face id
  std::vector<std::vector<Permutation>> par_elems(static_cast<std::size_t>(d));
  p.faces_of_rank.assign(static_cast<std::size_t>(d), {});
  int next_face = 0;
  for (int i = 0; i < d; ++i) {
    const PermutationGroup& par = s.parabolic(full_mask & ~(1u << i));
    par_elems[static_cast<std::size_t>(i)] = par.elements(par.order());
    std::unordered_map<std::vector<std::uint32_t>, int, ImageVecHash> seen;
    face_of[static_cast<std::size_t>(i)].resize(
        static_cast<std::size_t>(nelems));
    for (int e = 0; e < nelems; ++e) {
      std::vector<std::uint32_t> best =
          elems[static_cast<std::size_t>(e)].images();
      for (const Permutation& q : par_elems[static_cast<std::size_t>(i)]) {
        if (q.is_identity()) continue;
        std::vector<std::uint32_t> cand =
            (elems[static_cast<std::size_t>(e)] * q).images();
        if (cand < best) best = std::move(cand);
      }
      auto [it, fresh] = seen.try_emplace(std::move(best), next_face);
      if (fresh) {
        p.faces_of_rank[static_cast<std::size_t>(i)].push_back(next_face);
        face_rep.push_back(e);
        ++next_face;
      }
      face_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] =
          it->second;
    }
  }

  p.least_face = next_face;
  p.greatest_face = next_face + 1;
  p.face_count = next_face + 2;
  p.incident.assign(static_cast<std::size_t>(p.face_count),
                    std::vector<bool>(static_cast<std::size_t>(p.face_count),
                                      false));
  auto set_inc = [&](int a, int b) {
    p.incident[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    p.incident[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  };
  for (int f = 0; f < next_face; ++f) {
    set_inc(p.least_face, f);
    set_inc(p.greatest_face, f);
  }
  set_inc(p.least_face, p.greatest_face);

  // x*P_i and y*P_j meet exactly when x^-1 y lies in the product set P_i P_j.
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      std::vector<bool> in_product(static_cast<std::size_t>(nelems), false);
      for (const Permutation& a : par_elems[static_cast<std::size_t>(i)])
        for (const Permutation& b : par_elems[static_cast<std::size_t>(j)])
          in_product[static_cast<std::size_t>(index_of.at((a * b).images()))] =
              true;
      for (int fa : p.faces_of_rank[static_cast<std::size_t>(i)]) {
        const Permutation x_inv =
            elems[static_cast<std::size_t>(face_rep[static_cast<std::size_t>(
                      fa)])]
                .inverse();
        for (int fb : p.faces_of_rank[static_cast<std::size_t>(j)]) {
          const Permutation t =
              x_inv * elems[static_cast<std::size_t>(
                          face_rep[static_cast<std::size_t>(fb)])];
          if (in_product[static_cast<std::size_t>(index_of.at(t.images()))])
            set_inc(fa, fb);
        }
      }
    }
  }

  p.flag_face.assign(static_cast<std::size_t>(nelems),
                     std::vector<int>(static_cast<std::size_t>(d)));
  for (int e = 0; e < nelems; ++e)
    for (int i = 0; i < d; ++i)
      p.flag_face[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] =
          face_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];

  p.matching.assign(static_cast<std::size_t>(d),
                    std::vector<int>(static_cast<std::size_t>(nelems)));
  for (int i = 0; i < d; ++i)
    for (int e = 0; e < nelems; ++e)
      p.matching[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] =
          index_of.at((elems[static_cast<std::size_t>(e)] *
                       rho[static_cast<std::size_t>(i)])
                          .images());
  return p;
}

bool check_diamond(const Polytope& p) {
  auto inc = [&](int a, int b) {
    return p.incident[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  for (int j = 0; j < p.rank; ++j) {
    std::vector<int> lower =
        j == 0 ? std::vector<int>{p.least_face}
               : p.faces_of_rank[static_cast<std::size_t>(j - 1)];
    std::vector<int> upper =
        j == p.rank - 1 ? std::vector<int>{p.greatest_face}
                        : p.faces_of_rank[static_cast<std::size_t>(j + 1)];
    for (int f : lower) {
      for (int g : upper) {
        if (!inc(f, g)) continue;
        int between = 0;
        for (int h : p.faces_of_rank[static_cast<std::size_t>(j)])
          if (inc(f, h) && inc(h, g)) ++between;
        if (between != 2) return false;
      }
    }
  }
  return true;
}

bool check_strong_flag_connected(const Polytope& p) {
  const int v = p.flag_count;
  const int d = p.rank;
  std::unordered_map<std::uint32_t, std::vector<std::pair<int, int>>> by_mask;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      std::uint32_t mask = 0;
      for (int i = 0; i < d; ++i)
        if (p.flag_face[static_cast<std::size_t>(a)]
                       [static_cast<std::size_t>(i)] ==
            p.flag_face[static_cast<std::size_t>(b)]
                       [static_cast<std::size_t>(i)])
          mask |= 1u << i;
      by_mask[mask].emplace_back(a, b);
    }
  }
  for (const auto& [mask, pairs] : by_mask) {
    UnionFind uf(v);
    for (int i = 0; i < d; ++i) {
      if (mask >> i & 1u) continue;
      for (int e = 0; e < v; ++e)
        uf.unite(e, p.matching[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(e)]);
    }
    for (const auto& [a, b] : pairs)
      if (uf.find(a) != uf.find(b)) return false;
  }
  return true;
}

std::vector<std::uint64_t> face_counts(const Polytope& p) {
  std::vector<std::uint64_t> counts;
  counts.reserve(static_cast<std::size_t>(p.rank));
  for (const auto& faces : p.faces_of_rank) counts.push_back(faces.size());
  return counts;
}

std::vector<std::uint64_t> section_type_rank3(const Polytope& p) {
  if (p.rank < 3)
    throw InvalidArgumentError("rank-3 sections need rank >= 3");
  if (!p.source)
    throw InvalidArgumentError("polytope has no source group");
  std::vector<std::uint64_t> orders;
  for (int j = 2; j < p.rank; ++j) {
    const std::uint32_t mask = (1u << (j - 2)) | (1u << (j - 1)) | (1u << j);
    orders.push_back(p.source->parabolic(mask).order());
  }
  return orders;
}

bool is_flat(const Polytope& p, int k, int l) {
  if (k < 0 || l <= k || l >= p.rank)
    throw InvalidArgumentError("flatness ranks must satisfy 0 <= k < l < rank");
  for (int fa : p.faces_of_rank[static_cast<std::size_t>(k)])
    for (int fb : p.faces_of_rank[static_cast<std::size_t>(l)])
      if (!p.incident[static_cast<std::size_t>(fa)]
                     [static_cast<std::size_t>(fb)])
        return false;
  return true;
}

std::string export_flag_graph(const Polytope& p) {
  std::ostringstream out;
  out << "graph flag_graph {\n";
  for (int e = 0; e < p.flag_count; ++e) out << "  f" << e << ";\n";
  for (int i = 0; i < p.rank; ++i)
    for (int e = 0; e < p.flag_count; ++e) {
      const int m =
          p.matching[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
      if (e < m)
        out << "  f" << e << " -- f" << m << " [label=\"" << i << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace polyforge
