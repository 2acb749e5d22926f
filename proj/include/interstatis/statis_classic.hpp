#pragma once

#include <cstddef>
#include <vector>

#include "interstatis/matrix.hpp"

namespace interstatis {

struct ClassicOptions {
    bool center = true;
    std::vector<double> weights; // empty = uniform 1/n
};

// Classic real-valued STATIS, the oracle the interval pipeline generalizes.
// Shares the same pca_triplet engine but calls it directly on real data, so
// the two code paths meet only at the eigensolver.
struct ClassicStatisOutput {
    RealMatrix T;           // r x r table correlations
    std::vector<double> u;  // unit first eigenvector of the interstructure
    double lambda1 = 0.0;
    std::vector<double> beta; // u / sqrt(lambda1)
    RealMatrix Mi;            // n x l average individuals
    RealMatrix Ev;            // l x l variable coordinates
    RealMatrix Ei;            // rn x l evolution of the individuals, IND * Mi
    RealMatrix compromise;    // n x n, sum beta_k W_k
};

ClassicStatisOutput run_classic(const std::vector<RealMatrix>& tables,
                                const ClassicOptions& options = {});

} // namespace interstatis
