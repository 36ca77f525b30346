#pragma once

#include <cstdint>
#include <vector>

#include "hcs/graph.hpp"

namespace hcs {

// Approximate Fiedler pair of the normalized Laplacian L = I - D^{-1/2} W D^{-1/2}.
// Power iteration on 2I - L with the top eigenvector (D^{1/2} 1) deflated; zero-degree
// vertices are treated as degree 1 (they carry no weight either way).
struct FiedlerResult {
    std::vector<double> vec;  // size n; ordering key for sweep cuts
    double lambda2 = 0;       // estimate of the second-smallest eigenvalue of L
    bool converged = false;
};

FiedlerResult fiedler_vector(const WeightedGraph& g, uint64_t seed, int iterations = 300);

}  // namespace hcs
