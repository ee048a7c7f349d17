#include "seqsim/pipeline.hpp"

#include <stdexcept>

namespace seqsim {

TreeAlgo parse_tree_algo(const std::string& name) {
    if (name == "nj") return TreeAlgo::NeighborJoining;
    if (name == "upgma") return TreeAlgo::Upgma;
    throw std::invalid_argument("unknown tree algorithm '" + name + "' (nj|upgma)");
}

PipelineResult pipeline(const std::vector<DnaSequence>& seqs, Method method, Metric metric,
                        TreeAlgo algo, const DistanceParams& params) {
    PipelineResult out;
    try {
        out.matrix = distance_matrix(seqs, method, metric, params);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("distance stage: ") + e.what());
    }
    try {
        out.tree = algo == TreeAlgo::NeighborJoining ? neighbor_joining(out.matrix)
                                                     : upgma(out.matrix);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("tree stage: ") + e.what());
    }
    return out;
}

}  // namespace seqsim
