#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "seqsim/sequence.hpp"

namespace seqsim {

struct DinucleotideCoords {
    int a = 0;
    int b = 0;
};

// Coordinates for all 16 dinucleotides, indexed by 4*first + second with the
// A,C,G,T base order. The first base picks the quadrant (A:+,+  G:-,+  C:-,-
// T:+,-) and the second base picks the magnitudes (A:(1,1) G:(1,2) T:(2,1)
// C:(2,2)).
using DinucleotideCoordMap = std::array<DinucleotideCoords, 16>;

const DinucleotideCoordMap& standard_coord_map();

struct DCurveStep {
    std::string dinucleotide;
    int a = 0;
    int b = 0;
    int c = 0;  // c = a*b
    std::size_t k = 0;  // 1-based step index
};

struct DCurvePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
};

struct DCurve {
    std::vector<DCurveStep> steps;
    std::vector<DCurvePoint> cumulative;  // prefix sums of (a, b, c)

    std::size_t size() const { return steps.size(); }
};

// Builds the D-curve of a sequence; requires length >= 2.
DCurve make_dcurve(const DnaSequence& seq,
                   const DinucleotideCoordMap& map = standard_coord_map());

// Length-normalized terminal point (a'/m, b'/m, c'/m), m = step count.
std::array<double, 3> dcurve_descriptor(const DCurve& curve);

// Mean Pearson correlation of the a', b', c' series after nearest-index
// resampling to the shorter curve's length. Both curves need >= 2 steps and
// no compared series may be constant.
double dcurve_pcc(const DCurve& x, const DCurve& y);

// CSV with header k,a,b,c,a_cum,b_cum,c_cum.
std::string dcurve_csv(const DCurve& curve);

// SVG with the (a',b') projection polyline plus the k->a'/b'/c' traces.
std::string dcurve_svg(const DCurve& curve);

}  // namespace seqsim
