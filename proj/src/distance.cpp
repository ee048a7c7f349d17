#include "seqsim/distance.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "seqsim/dcurve.hpp"
#include "seqsim/digraph.hpp"
#include "seqsim/numfmt.hpp"
#include "seqsim/worm.hpp"

namespace seqsim {

Method parse_method(const std::string& name) {
    if (name == "dcurve") return Method::DCurve;
    if (name == "worm") return Method::Worm;
    if (name == "digraph") return Method::Digraph;
    throw std::invalid_argument("unknown method '" + name + "' (dcurve|worm|digraph)");
}

Metric parse_metric(const std::string& name) {
    if (name == "euclidean") return Metric::Euclidean;
    if (name == "one_minus_cosine") return Metric::OneMinusCosine;
    if (name == "one_minus_pcc") return Metric::OneMinusPcc;
    throw std::invalid_argument("unknown metric '" + name +
                                "' (euclidean|one_minus_cosine|one_minus_pcc)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::DCurve: return "dcurve";
        case Method::Worm: return "worm";
        case Method::Digraph: return "digraph";
    }
    return {};
}

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::Euclidean: return "euclidean";
        case Metric::OneMinusCosine: return "one_minus_cosine";
        case Metric::OneMinusPcc: return "one_minus_pcc";
    }
    return {};
}

bool metric_supported(Method method, Metric metric) {
    switch (method) {
        case Method::DCurve:
            return metric == Metric::Euclidean || metric == Metric::OneMinusPcc;
        case Method::Worm:
            return metric == Metric::Euclidean;
        case Method::Digraph:
            return true;
    }
    return false;
}

void DistanceMatrix::validate() const {
    const std::size_t n = labels.size();
    if (d.size() != n)
        throw std::invalid_argument("distance matrix row count does not match labels");
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i].size() != n)
            throw std::invalid_argument("distance matrix is not square");
        if (d[i][i] != 0.0)
            throw std::invalid_argument("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(d[i][j]) || d[i][j] < 0.0)
                throw std::invalid_argument("distance matrix entries must be finite and >= 0");
            if (d[i][j] != d[j][i])
                throw std::invalid_argument("distance matrix must be symmetric");
        }
    }
}

namespace {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return std::sqrt(s);
}

}  // namespace

DistanceMatrix distance_matrix(const std::vector<DnaSequence>& seqs, Method method,
                               Metric metric, const DistanceParams& params) {
    if (seqs.size() < 2) throw std::invalid_argument("need at least 2 sequences");
    if (!metric_supported(method, metric))
        throw std::invalid_argument("metric '" + metric_name(metric) +
                                    "' is not defined for method '" + method_name(method) + "'");

    const std::size_t n = seqs.size();
    DistanceMatrix out;
    out.labels.reserve(n);
    for (const auto& s : seqs) out.labels.push_back(s.id);
    out.d.assign(n, std::vector<double>(n, 0.0));

    // per-sequence representations, built sequentially
    std::vector<DCurve> curves;
    if (method == Method::DCurve) curves.resize(n);
    std::vector<std::vector<double>> vecs(n);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            if (method == Method::DCurve) {
                curves[i] = make_dcurve(seqs[i]);
                const auto desc = dcurve_descriptor(curves[i]);
                vecs[i] = {desc.begin(), desc.end()};
            } else if (method == Method::Worm) {
                const auto desc = covariance_descriptor(spot_set(encode_binary(seqs[i]), params.width));
                vecs[i] = {desc.d.begin(), desc.d.end()};
            } else {
                const auto r = flatten(adjacency_matrix(seqs[i], WeightParams{params.alpha, params.max_distance}));
                vecs[i] = {r.begin(), r.end()};
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("descriptor failed for record '" + seqs[i].id +
                                        "': " + e.what());
        }
    }

    auto pair_distance = [&](std::size_t i, std::size_t j) -> double {
        try {
            if (method == Method::DCurve && metric == Metric::OneMinusPcc)
                return 1.0 - dcurve_pcc(curves[i], curves[j]);
            switch (metric) {
                case Metric::Euclidean: return euclidean(vecs[i], vecs[j]);
                case Metric::OneMinusCosine: return d2(vecs[i], vecs[j]);
                case Metric::OneMinusPcc: return d3(vecs[i], vecs[j]);
            }
            return 0.0;
        } catch (const std::exception& e) {
            throw std::invalid_argument("distance failed for records '" + seqs[i].id +
                                        "' and '" + seqs[j].id + "': " + e.what());
        }
    };

    // flatten the upper triangle into a work list
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    unsigned workers = params.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(pairs.size()));

    if (workers <= 1) {
        for (const auto& [i, j] : pairs) out.d[i][j] = pair_distance(i, j);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned t = 0; t < workers; ++t) {
            threads.emplace_back([&, t] {
                try {
                    for (std::size_t p = t; p < pairs.size(); p += workers) {
                        const auto [i, j] = pairs[p];
                        out.d[i][j] = pair_distance(i, j);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : threads) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // mirror to the lower triangle
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.d[j][i] = out.d[i][j];
    return out;
}

std::string matrix_csv(const DistanceMatrix& m) {
    std::string out = "label";
    for (const auto& l : m.labels) {
        out += ',';
        out += l;
    }
    out += '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += m.labels[i];
        for (std::size_t j = 0; j < m.size(); ++j) {
            out += ',';
            out += format_double(m.d[i][j]);
        }
        out += '\n';
    }
    return out;
}

std::string matrix_json(const DistanceMatrix& m) {
    nlohmann::json j;
    j["labels"] = m.labels;
    std::vector<double> values;
    values.reserve(m.size() * m.size());
    for (const auto& row : m.d) values.insert(values.end(), row.begin(), row.end());
    j["values"] = values;
    return j.dump();
}

DistanceMatrix matrix_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    DistanceMatrix m;
    m.labels = j.at("labels").get<std::vector<std::string>>();
    const auto values = j.at("values").get<std::vector<double>>();
    const std::size_t n = m.labels.size();
    if (values.size() != n * n)
        throw std::invalid_argument("matrix JSON: values length does not match labels");
    m.d.assign(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j2 = 0; j2 < n; ++j2) m.d[i][j2] = values[i * n + j2];
    return m;
}

DistanceMatrix matrix_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("matrix CSV: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    DistanceMatrix m;
    {
        std::istringstream header(line);
        std::string cell;
        bool first = true;
        while (std::getline(header, cell, ',')) {
            if (first) {
                first = false;
                continue;
            }
            m.labels.push_back(cell);
        }
    }
    const std::size_t n = m.labels.size();
    m.d.assign(n, std::vector<double>(n, 0.0));
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (row >= n) throw std::invalid_argument("matrix CSV: more rows than labels");
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');
        if (cell != m.labels[row])
            throw std::invalid_argument("matrix CSV: row label '" + cell +
                                        "' does not match header '" + m.labels[row] + "'");
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::getline(cells, cell, ','))
                throw std::invalid_argument("matrix CSV: short row '" + m.labels[row] + "'");
            m.d[row][j] = std::stod(cell);
        }
        ++row;
    }
    if (row != n) throw std::invalid_argument("matrix CSV: fewer rows than labels");
    return m;
}

}  // namespace seqsim
