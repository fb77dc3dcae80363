#pragma once

#include <cstdint>

#include "cospec/rooted_graph.hpp"
#include "cospec/words.hpp"

namespace cospec {

struct BuildOptions {
    int64_t vertex_cap = 50'000'000;  // resource cap on vertex count
};

// Closed-form ball volume for the Cayley families (free, free-abelian,
// regular tree). Used for the resource check and by tests.
double predicted_ball_volume(const GroupFamilySpec& spec, int radius);

// Exact ball of radius R around the identity, deterministic BFS vertex order
// (move order within each vertex). Throws resource_limit_error when the
// predicted volume exceeds the cap.
RootedGraph build_ball(const GroupFamilySpec& spec, int radius, const BuildOptions& opts = {});

// Ball of radius R in the Schreier graph of right cosets H\G, rooted at the
// coset H. Loops and parallel edges are preserved. The cap is enforced while
// building (no closed form for coset growth).
RootedGraph build_schreier(const GroupFamilySpec& spec, const SubgroupOracle& subgroup,
                           int radius, const BuildOptions& opts = {});

}  // namespace cospec
