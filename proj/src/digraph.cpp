#include "seqsim/digraph.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "seqsim/numfmt.hpp"

namespace seqsim {

WeightMatrix adjacency_matrix(const DnaSequence& seq, const WeightParams& params) {
    if (params.alpha <= 0) throw std::invalid_argument("alpha must be > 0");
    WeightMatrix out;
    out.n = seq.size();
    out.alpha = params.alpha;
    const auto n = seq.size();
    const std::size_t max_d =
        params.max_distance ? std::min<std::size_t>(n, static_cast<std::size_t>(*params.max_distance) + 1)
                            : n;
    // Gap-major accumulation: every pair at gap d contributes the same
    // weight, so each entry's floating-point sum depends only on its
    // per-gap pair counts. Reversing the sequence then yields the exact
    // transpose, not just an approximate one.
    for (std::size_t d = 1; d < max_d; ++d) {
        const double w = std::pow(static_cast<double>(d), -params.alpha);
        for (std::size_t i = 0; i + d < n; ++i) {
            const auto x = static_cast<std::size_t>(base_index(seq.residues[i]));
            const auto y = static_cast<std::size_t>(base_index(seq.residues[i + d]));
            out.m[x][y] += w;
        }
    }
    return out;
}

std::array<double, 16> flatten(const WeightMatrix& m) {
    std::array<double, 16> r{};
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) r[4 * x + y] = m.m[x][y];
    return r;
}

namespace {

void check_same_size(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("descriptor vectors must have equal length");
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

double d1(std::span<const double> rs, std::span<const double> rh) {
    check_same_size(rs, rh);
    double sum = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double diff = rs[i] - rh[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

double d2(std::span<const double> rs, std::span<const double> rh) {
    check_same_size(rs, rh);
    const double ns = std::sqrt(dot(rs, rs));
    const double nh = std::sqrt(dot(rh, rh));
    if (ns == 0.0 || nh == 0.0)
        throw std::invalid_argument("angle undefined for zero vector");
    return 1.0 - dot(rs, rh) / (ns * nh);
}

double d3(std::span<const double> rs, std::span<const double> rh) {
    check_same_size(rs, rh);
    const auto n = static_cast<double>(rs.size());
    double ms = 0, mh = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        ms += rs[i];
        mh += rh[i];
    }
    ms /= n;
    mh /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        sxy += (rs[i] - ms) * (rh[i] - mh);
        sxx += (rs[i] - ms) * (rs[i] - ms);
        syy += (rh[i] - mh) * (rh[i] - mh);
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("PCC undefined for zero-variance vector");
    return 1.0 - sxy / std::sqrt(sxx * syy);
}

std::vector<WeightedEdge> edge_list(const DnaSequence& seq, const WeightParams& params) {
    if (params.alpha <= 0) throw std::invalid_argument("alpha must be > 0");
    std::vector<WeightedEdge> edges;
    const auto n = seq.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto d = static_cast<std::int64_t>(j - i);
            if (params.max_distance && d > *params.max_distance) break;
            edges.push_back(WeightedEdge{i + 1, j + 1, seq.residues[i], seq.residues[j],
                                         std::pow(static_cast<double>(d), -params.alpha)});
        }
    }
    return edges;
}

std::string weight_matrix_csv(const WeightMatrix& m) {
    std::string out = ",A,C,G,T\n";
    for (std::size_t x = 0; x < 4; ++x) {
        out += kBases[x];
        for (std::size_t y = 0; y < 4; ++y) {
            out += ',';
            out += format_double(m.m[x][y]);
        }
        out += '\n';
    }
    return out;
}

std::string descriptor_json(const std::string& id, const WeightMatrix& m) {
    nlohmann::json j;
    j["id"] = id;
    j["alpha"] = m.alpha;
    j["r"] = flatten(m);
    return j.dump();
}

}  // namespace seqsim
