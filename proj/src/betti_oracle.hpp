#pragma once

#include "graphs.hpp"
#include "sset.hpp"

namespace propcalc {

// Topological realization of a graph as a 1-dimensional simplicial set:
// one vertex per graph vertex and per dangling edge end, one 1-simplex per
// edge.
SSetPtr graph_realization(const ColoredGraph& g);

// Betti numbers computed along an independent route: integral simplicial
// homology of the realization (Smith normal form), not component counting.
Betti betti_via_homology(const ColoredGraph& g);

} // namespace propcalc
