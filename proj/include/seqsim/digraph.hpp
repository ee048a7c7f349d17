#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqsim/sequence.hpp"

namespace seqsim {

struct WeightParams {
    double alpha = 0.5;
    // Pairs farther apart than this contribute nothing when set.
    std::optional<std::int64_t> max_distance;
};

// 4x4 weight matrix over {A,C,G,T}: entry (x,y) sums (j-i)^(-alpha) over all
// position pairs i<j with S_i = x and S_j = y.
struct WeightMatrix {
    std::array<std::array<double, 4>, 4> m{};
    std::size_t n = 0;
    double alpha = 0.5;

    double at(char from, char to) const {
        return m[static_cast<std::size_t>(base_index(from))]
                [static_cast<std::size_t>(base_index(to))];
    }
};

WeightMatrix adjacency_matrix(const DnaSequence& seq, const WeightParams& params = {});

// Row-major flattening [(A,A),(A,C),...,(T,T)].
std::array<double, 16> flatten(const WeightMatrix& m);

// Euclidean distance between descriptor vectors.
double d1(std::span<const double> rs, std::span<const double> rh);

// 1 - cosine of the included angle; both vectors must be nonzero.
double d2(std::span<const double> rs, std::span<const double> rh);

// 1 - Pearson correlation over the components; neither vector may be constant.
double d3(std::span<const double> rs, std::span<const double> rh);

// One pairwise edge of the unsimplified multigraph, for inspection.
struct WeightedEdge {
    std::size_t i = 0;  // 1-based positions
    std::size_t j = 0;
    char from = 'A';
    char to = 'A';
    double weight = 0;
};

std::vector<WeightedEdge> edge_list(const DnaSequence& seq, const WeightParams& params = {});

// CSV: labeled 4x4 matrix, full precision.
std::string weight_matrix_csv(const WeightMatrix& m);

// JSON: {"id":..., "alpha":..., "r":[16 reals]}.
std::string descriptor_json(const std::string& id, const WeightMatrix& m);

}  // namespace seqsim
