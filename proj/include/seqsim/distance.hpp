#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqsim/sequence.hpp"

namespace seqsim {

enum class Method { DCurve, Worm, Digraph };
enum class Metric { Euclidean, OneMinusCosine, OneMinusPcc };

Method parse_method(const std::string& name);
Metric parse_metric(const std::string& name);
std::string method_name(Method m);
std::string metric_name(Metric m);

// Not every metric applies to every representation: dcurve supports
// euclidean and one_minus_pcc, worm only euclidean, digraph all three.
bool metric_supported(Method method, Metric metric);

struct DistanceParams {
    double alpha = 0.5;                         // digraph weight exponent
    std::optional<std::int64_t> width;          // worm grid width override
    std::optional<std::int64_t> max_distance;   // digraph pair cutoff
    unsigned workers = 0;                       // 0 = available parallelism
};

struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> d;

    std::size_t size() const { return labels.size(); }
    // Throws unless the matrix is square, symmetric, nonnegative, finite and
    // zero on the diagonal.
    void validate() const;
};

// Descriptors are computed once per sequence, then pairs are evaluated (in
// parallel when workers > 1) into a preallocated triangle, so the result is
// independent of scheduling.
DistanceMatrix distance_matrix(const std::vector<DnaSequence>& seqs, Method method,
                               Metric metric, const DistanceParams& params = {});

std::string matrix_csv(const DistanceMatrix& m);
std::string matrix_json(const DistanceMatrix& m);
DistanceMatrix matrix_from_csv(const std::string& text);
DistanceMatrix matrix_from_json(const std::string& text);

}  // namespace seqsim
