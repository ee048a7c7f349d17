#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqsim/sequence.hpp"

namespace seqsim {

// 2-bit encoding A=00, G=01, C=10, T=11 as a '0'/'1' string of length 2n.
std::string encode_binary(const DnaSequence& seq);

struct SpotSet {
    std::vector<std::pair<std::int64_t, std::int64_t>> points;  // (a, b) lattice points
    std::int64_t width = 1;
};

// Lays the bits row-major into a grid of the given width (default
// ceil(sqrt(L)), minimum 1); bit j occupies (j mod W, j div W) and the set
// collects the points of all 1-bits in index order.
SpotSet spot_set(const std::string& bits, std::optional<std::int64_t> width = std::nullopt);

struct CovarianceDescriptor {
    std::array<double, 4> d{};  // [M1 M2 M3 M4]
    std::size_t count = 0;
    double mu_a = 0;
    double mu_b = 0;
};

// Central second moments with 1/m normalization; requires >= 1 point.
CovarianceDescriptor covariance_descriptor(const SpotSet& spots);

// Euclidean norm of the componentwise descriptor difference.
double descriptor_distance(const CovarianceDescriptor& x, const CovarianceDescriptor& y);

// CSV with header a,b, one row per spot.
std::string spots_csv(const SpotSet& spots);

// SVG with one filled circle per spot; grid outline optional.
std::string spots_svg(const SpotSet& spots, bool grid_outline = false);

}  // namespace seqsim
