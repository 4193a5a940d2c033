#pragma once

#include "polyforge/presentation.hpp"

namespace polyforge {

// The {4,...,4} string Coxeter presentation on d generators extended by the
// centrality relators [(r_i r_{i+1})^2, r_j] for 0 <= i < d-1 and
// 0 <= j < d, emitted over the full index range even where redundant.
Presentation cd_presentation(int d);

}  // namespace polyforge
