#pragma once

#include <cstdint>

#include "hcs/graph.hpp"

namespace hcs {

// Edge expansion: min over non-empty S with |S| <= n/2 of w(S, V\S) / |S|.
// certified_upper is always realized by `witness`. heuristic_lower comes from the
// spectral estimate (Cheeger controls conductance, not |S|-expansion, hence heuristic);
// it is only meaningful when `exact` is false and never exceeds certified_upper claims.
struct ExpansionEstimate {
    double certified_upper = 0;
    double heuristic_lower = 0;
    Cut witness;
    bool exact = false;
};

// Full enumeration; n <= 20. For n <= 1 there is no valid S: returns +inf, empty witness.
ExpansionEstimate exact_expansion(const WeightedGraph& g);

// Fiedler sweep plus `sweep_rounds` random balanced cuts and all singletons.
ExpansionEstimate approx_expansion(const WeightedGraph& g, int sweep_rounds = 32,
                                   uint64_t seed = 1);

}  // namespace hcs
