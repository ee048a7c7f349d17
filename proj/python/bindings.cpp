#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqsim/align.hpp"
#include "seqsim/dcurve.hpp"
#include "seqsim/digraph.hpp"
#include "seqsim/distance.hpp"
#include "seqsim/phylo.hpp"
#include "seqsim/pipeline.hpp"
#include "seqsim/sequence.hpp"
#include "seqsim/worm.hpp"

namespace py = pybind11;
using namespace seqsim;

namespace {

std::vector<double> to_vec(py::sequence seq) {
    std::vector<double> v;
    v.reserve(py::len(seq));
    for (auto item : seq) v.push_back(item.cast<double>());
    return v;
}

}  // namespace

PYBIND11_MODULE(_seqsim, m) {
    m.doc() = "alignment-free DNA similarity toolkit";

    py::register_exception<FastaError>(m, "FastaError", PyExc_ValueError);

    py::class_<DnaSequence>(m, "DnaSequence")
        .def(py::init([](std::string id, std::string residues) {
                 // route through the parser so the alphabet invariant holds
                 auto seqs = parse_fasta(">" + id + "\n" + residues + "\n");
                 return seqs.at(0);
             }),
             py::arg("id"), py::arg("residues"))
        .def_readonly("id", &DnaSequence::id)
        .def_readonly("residues", &DnaSequence::residues)
        .def("__len__", &DnaSequence::size)
        .def("__repr__", [](const DnaSequence& s) {
            return "DnaSequence(id='" + s.id + "', n=" + std::to_string(s.size()) + ")";
        });

    py::class_<RnaSequence>(m, "RnaSequence")
        .def_readonly("id", &RnaSequence::id)
        .def_readonly("residues", &RnaSequence::residues);

    py::class_<Translation>(m, "Translation")
        .def_readonly("amino_acids", &Translation::amino_acids)
        .def_readonly("stop_positions", &Translation::stop_positions)
        .def_readonly("leftover_bases", &Translation::leftover_bases);

    m.def(
        "parse_fasta",
        [](const std::string& text, bool strip_ambiguous) {
            return parse_fasta(text, FastaOptions{strip_ambiguous});
        },
        py::arg("text"), py::arg("strip_ambiguous") = false);
    m.def("write_fasta", &write_fasta);
    m.def("dinucleotides", &dinucleotides);
    m.def("transcribe", &transcribe);
    m.def("translate", &translate, py::arg("rna"), py::arg("frame") = 0);
    m.def("translate_codon", &translate_codon);
    m.def("codon_table", &codon_table);

    py::class_<DCurve>(m, "DCurve")
        .def("__len__", &DCurve::size)
        .def_property_readonly("steps",
                               [](const DCurve& c) {
                                   py::list out;
                                   for (const auto& s : c.steps)
                                       out.append(py::make_tuple(s.dinucleotide, s.a, s.b,
                                                                 s.k, s.c));
                                   return out;
                               })
        .def_property_readonly("cumulative", [](const DCurve& c) {
            py::list out;
            for (const auto& p : c.cumulative) out.append(py::make_tuple(p.a, p.b, p.c));
            return out;
        });
    m.def("dcurve", [](const DnaSequence& s) { return make_dcurve(s); });
    m.def("dcurve_descriptor", &dcurve_descriptor);
    m.def("dcurve_pcc", &dcurve_pcc);
    m.def("dcurve_csv", &dcurve_csv);
    m.def("dcurve_svg", &dcurve_svg);

    py::class_<SpotSet>(m, "SpotSet")
        .def_readonly("points", &SpotSet::points)
        .def_readonly("width", &SpotSet::width)
        .def("__len__", [](const SpotSet& s) { return s.points.size(); });

    py::class_<CovarianceDescriptor>(m, "CovarianceDescriptor")
        .def_readonly("d", &CovarianceDescriptor::d)
        .def_readonly("count", &CovarianceDescriptor::count)
        .def_readonly("mu_a", &CovarianceDescriptor::mu_a)
        .def_readonly("mu_b", &CovarianceDescriptor::mu_b);

    m.def("encode_binary", &encode_binary);
    m.def(
        "spot_set",
        [](const std::string& bits, std::optional<std::int64_t> width) {
            return spot_set(bits, width);
        },
        py::arg("bits"), py::arg("width") = py::none());
    m.def("covariance_descriptor", &covariance_descriptor);
    m.def("descriptor_distance", &descriptor_distance);
    m.def("spots_csv", &spots_csv);
    m.def("spots_svg", &spots_svg, py::arg("spots"), py::arg("grid_outline") = false);

    py::class_<WeightMatrix>(m, "WeightMatrix")
        .def_readonly("n", &WeightMatrix::n)
        .def_readonly("alpha", &WeightMatrix::alpha)
        .def_property_readonly("m", [](const WeightMatrix& w) { return w.m; })
        .def("at", &WeightMatrix::at, py::arg("from_base"), py::arg("to_base"));
    m.def(
        "adjacency_matrix",
        [](const DnaSequence& s, double alpha, std::optional<std::int64_t> max_distance) {
            return adjacency_matrix(s, WeightParams{alpha, max_distance});
        },
        py::arg("seq"), py::arg("alpha") = 0.5, py::arg("max_distance") = py::none());
    m.def("flatten", &flatten);
    m.def("d1", [](py::sequence a, py::sequence b) { return d1(to_vec(a), to_vec(b)); });
    m.def("d2", [](py::sequence a, py::sequence b) { return d2(to_vec(a), to_vec(b)); });
    m.def("d3", [](py::sequence a, py::sequence b) { return d3(to_vec(a), to_vec(b)); });
    m.def("weight_matrix_csv", &weight_matrix_csv);
    m.def("descriptor_json", &descriptor_json);

    py::class_<ScoringScheme>(m, "ScoringScheme")
        .def(py::init([](int match, int mismatch, int gap) {
                 ScoringScheme s{match, mismatch, gap};
                 s.validate();
                 return s;
             }),
             py::arg("match") = 1, py::arg("mismatch") = -1, py::arg("gap") = -2)
        .def_readonly("match", &ScoringScheme::match)
        .def_readonly("mismatch", &ScoringScheme::mismatch)
        .def_readonly("gap", &ScoringScheme::gap);

    py::class_<AlignmentResult>(m, "AlignmentResult")
        .def_readonly("score", &AlignmentResult::score)
        .def_readonly("aligned_a", &AlignmentResult::aligned_a)
        .def_readonly("aligned_b", &AlignmentResult::aligned_b)
        .def_readonly("start_a", &AlignmentResult::start_a)
        .def_readonly("end_a", &AlignmentResult::end_a)
        .def_readonly("start_b", &AlignmentResult::start_b)
        .def_readonly("end_b", &AlignmentResult::end_b);

    py::class_<DotMatrix>(m, "DotMatrix")
        .def_readonly("rows", &DotMatrix::rows)
        .def_readonly("cols", &DotMatrix::cols)
        .def("at", &DotMatrix::at);

    m.def("dot_matrix", &dot_matrix, py::arg("s1"), py::arg("s2"), py::arg("window") = 1,
          py::arg("stringency") = 1);
    m.def("needleman_wunsch", &needleman_wunsch, py::arg("s1"), py::arg("s2"),
          py::arg("scheme") = ScoringScheme{});
    m.def("smith_waterman", &smith_waterman, py::arg("s1"), py::arg("s2"),
          py::arg("scheme") = ScoringScheme{});
    m.def("alignment_text", &alignment_text);
    m.def("dot_matrix_pbm", &dot_matrix_pbm);
    m.def("dot_matrix_svg", &dot_matrix_svg);

    py::class_<DistanceMatrix>(m, "DistanceMatrix")
        .def_readonly("labels", &DistanceMatrix::labels)
        .def_readonly("d", &DistanceMatrix::d)
        .def("validate", &DistanceMatrix::validate)
        .def("__len__", &DistanceMatrix::size);

    m.def(
        "distance_matrix",
        [](const std::vector<DnaSequence>& seqs, const std::string& method,
           const std::string& metric, double alpha, std::optional<std::int64_t> width,
           unsigned workers) {
            DistanceParams params;
            params.alpha = alpha;
            params.width = width;
            params.workers = workers;
            return distance_matrix(seqs, parse_method(method), parse_metric(metric), params);
        },
        py::arg("seqs"), py::arg("method") = "digraph", py::arg("metric") = "euclidean",
        py::arg("alpha") = 0.5, py::arg("width") = py::none(), py::arg("workers") = 1);
    m.def("matrix_csv", &matrix_csv);
    m.def("matrix_json", &matrix_json);
    m.def("matrix_from_csv", &matrix_from_csv);
    m.def("matrix_from_json", &matrix_from_json);

    py::class_<PhyloTree>(m, "PhyloTree")
        .def_readonly("rooted", &PhyloTree::rooted)
        .def_readonly("clamped_branches", &PhyloTree::clamped_branches)
        .def("leaves", [](const PhyloTree& t) {
            std::vector<std::string> labels;
            for (int i : t.leaves()) labels.push_back(t.nodes[static_cast<size_t>(i)].label);
            return labels;
        });
    m.def("upgma", &upgma);
    m.def("neighbor_joining", &neighbor_joining);
    m.def("to_newick", &to_newick);
    m.def("parse_newick", &parse_newick);
    m.def("tree_svg", &tree_svg);
    m.def("leaf_path_distances", &leaf_path_distances);

    m.def(
        "pipeline",
        [](const std::vector<DnaSequence>& seqs, const std::string& method,
           const std::string& metric, const std::string& algo, double alpha,
           std::optional<std::int64_t> width, unsigned workers) {
            DistanceParams params;
            params.alpha = alpha;
            params.width = width;
            params.workers = workers;
            const auto result = pipeline(seqs, parse_method(method), parse_metric(metric),
                                         parse_tree_algo(algo), params);
            return py::make_tuple(result.matrix, result.tree);
        },
        py::arg("seqs"), py::arg("method") = "digraph", py::arg("metric") = "euclidean",
        py::arg("algo") = "nj", py::arg("alpha") = 0.5, py::arg("width") = py::none(),
        py::arg("workers") = 1);
}
