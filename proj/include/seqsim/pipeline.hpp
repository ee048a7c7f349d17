#pragma once

#include "seqsim/distance.hpp"
#include "seqsim/phylo.hpp"

namespace seqsim {

enum class TreeAlgo { NeighborJoining, Upgma };

TreeAlgo parse_tree_algo(const std::string& name);

struct PipelineResult {
    DistanceMatrix matrix;
    PhyloTree tree;
};

// distance_matrix followed by the selected tree builder, with no
// normalization in between.
PipelineResult pipeline(const std::vector<DnaSequence>& seqs, Method method, Metric metric,
                        TreeAlgo algo, const DistanceParams& params = {});

}  // namespace seqsim
