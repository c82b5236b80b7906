#pragma once

#include <random>
#include <vector>

#include "multipark/multigraph.hpp"

namespace multipark {

// Every connected loop-free multigraph on exactly n labeled vertices with
// multiplicities at most max_mu, in lexicographic multiplicity order over the
// pair sequence (1,2),(1,3),...,(n-1,n).
std::vector<ColoredMultigraph> all_connected_multigraphs(int n, int max_mu);

// Random connected multigraph: a random attachment tree plus a few extra
// parallel edges and, when allowed, an occasional loop. Deterministic for a
// given engine state (no standard-library distributions involved).
ColoredMultigraph random_connected_multigraph(int n, int max_mu, bool allow_loops,
                                              std::mt19937_64& rng);

// Seeded shuffle of 1..n, usable as ranking images.
std::vector<int> random_ranking_images(int n, std::mt19937_64& rng);

}  // namespace multipark
