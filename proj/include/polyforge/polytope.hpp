#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyforge/string_cgroup.hpp"

namespace polyforge {

// The face poset and flag graph built from a string C-group: rank-i faces
// are cosets of the parabolic subgroup omitting rho_i, flags correspond to
// group elements, and the i-matching is right multiplication by rho_i.
// Plain data so tests can assemble corrupted fixtures.
struct Polytope {
  int rank = 0;

  // Proper faces carry global ids grouped by rank; two improper faces (the
  // least face below rank 0 and the greatest above rank d-1) are explicit
  // records appended after the proper ones.
  std::vector<std::vector<int>> faces_of_rank;  // rank -> face ids
  int least_face = -1;
  int greatest_face = -1;
  int face_count = 0;  // proper + 2

  // Symmetric comparability matrix over all face ids (improper included).
  std::vector<std::vector<bool>> incident;

  int flag_count = 0;
  std::vector<std::vector<int>> flag_face;  // flag -> face id per rank 0..d-1
  std::vector<std::vector<int>> matching;   // rank i -> flag -> adjacent flag

  std::optional<StringCGroup> source;  // set when built from a group

  int rank_of(int face_id) const;
};

// Coset construction of the polytope; requires |G| <= cap.
Polytope build_polytope(const StringCGroup& s,
                        std::uint64_t cap = kDefaultElementCap);

// Every incident (rank j-1, rank j+1) pair has exactly two faces between.
bool check_diamond(const Polytope& p);

// For every pair of flags there is a path of successively adjacent flags
// through their common faces: for each fixed-rank set arising from some
// pair, the flag graph restricted to the other matchings must connect them.
bool check_strong_flag_connected(const Polytope& p);

// Proper face counts by rank.
std::vector<std::uint64_t> face_counts(const Polytope& p);

// Orders of the parabolic subgroups on consecutive generator triples, one
// per rank-3 section type; requires rank >= 3 and a source group.
std::vector<std::uint64_t> section_type_rank3(const Polytope& p);

// True iff every k-face is incident with every l-face, 0 <= k < l <= d-1.
bool is_flat(const Polytope& p, int k, int l);

// Deterministic DOT text: flags as nodes, matchings as edge classes.
std::string export_flag_graph(const Polytope& p);

}  // namespace polyforge
