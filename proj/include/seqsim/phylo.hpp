#pragma once

#include <string>
#include <vector>

#include "seqsim/distance.hpp"

namespace seqsim {

struct PhyloNode {
    int parent = -1;
    std::vector<int> children;
    double length = 0;  // branch length to parent
    std::string label;  // nonempty for leaves

    bool is_leaf() const { return children.empty(); }
};

struct PhyloTree {
    std::vector<PhyloNode> nodes;
    int root = -1;
    bool rooted = true;
    // NJ can produce small negative branch lengths; they are clamped to 0
    // and counted here so callers can warn.
    int clamped_branches = 0;

    std::vector<int> leaves() const;
};

// Average-linkage agglomeration; merge ties broken by the smallest
// (row, column) label-index pair. The result is rooted and ultrametric.
PhyloTree upgma(const DistanceMatrix& m);

// Canonical neighbor joining (Q-criterion) over >= 3 taxa; the unrooted
// result is serialized with a trifurcating root.
PhyloTree neighbor_joining(const DistanceMatrix& m);

std::string to_newick(const PhyloTree& t);
PhyloTree parse_newick(const std::string& text);

// Rectangular cladogram, leaves equally spaced.
std::string tree_svg(const PhyloTree& t);

// Pairwise leaf path-length matrix in the given label order.
DistanceMatrix leaf_path_distances(const PhyloTree& t, const std::vector<std::string>& labels);

}  // namespace seqsim
