#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "seqsim/align.hpp"
#include "seqsim/dcurve.hpp"
#include "seqsim/digraph.hpp"
#include "seqsim/distance.hpp"
#include "seqsim/numfmt.hpp"
#include "seqsim/phylo.hpp"
#include "seqsim/sequence.hpp"
#include "seqsim/worm.hpp"

namespace {

using namespace seqsim;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes via a temp file and rename so a failure never leaves partial output.
void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file '" + tmp + "'");
        out << data;
        if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

std::vector<DnaSequence> load_fasta(const std::string& path, bool strip_ambiguous) {
    FastaOptions opts;
    opts.strip_ambiguous = strip_ambiguous;
    if (path.empty() || path == "-") return parse_fasta(std::cin, opts);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return parse_fasta(in, opts);
}

const DnaSequence& select_record(const std::vector<DnaSequence>& seqs, const std::string& id) {
    if (seqs.empty()) throw std::runtime_error("input contains no records");
    if (id.empty()) {
        if (seqs.size() > 1)
            throw std::runtime_error("input has " + std::to_string(seqs.size()) +
                                     " records; pick one with --id");
        return seqs.front();
    }
    for (const auto& s : seqs)
        if (s.id == id) return s;
    throw std::runtime_error("record '" + id + "' not found in input");
}

struct CommonArgs {
    std::string input;
    std::string output;
    std::string record_id;
    bool strip_ambiguous = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_id = true) {
    cmd->add_option("-i,--input", args.input, "input FASTA file ('-' for stdin)");
    cmd->add_option("-o,--output", args.output, "output file (default stdout)");
    if (with_id) cmd->add_option("--id", args.record_id, "record id to process");
    cmd->add_flag("--strip-ambiguous", args.strip_ambiguous,
                  "drop IUPAC ambiguity codes instead of failing");
}

int run(int argc, char** argv) {
    CLI::App app{"alignment-free DNA similarity toolkit"};
    app.require_subcommand(1);

    // translate
    CommonArgs tr_args;
    int frame = 0;
    auto* tr = app.add_subcommand("translate", "transcribe and translate DNA records");
    add_common(tr, tr_args, false);
    tr->add_option("--frame", frame, "reading frame offset")->check(CLI::Range(0, 2));

    // dcurve
    CommonArgs dc_args;
    std::string dc_format = "csv";
    auto* dc = app.add_subcommand("dcurve", "dinucleotide D-curve of one record");
    add_common(dc, dc_args);
    dc->add_option("--format", dc_format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

    // worm
    CommonArgs wm_args;
    std::string wm_format = "csv";
    std::int64_t wm_width = 0;
    bool wm_grid = false;
    auto* wm = app.add_subcommand("worm", "binary dark-spot grid of one record");
    add_common(wm, wm_args);
    wm->add_option("--format", wm_format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    wm->add_option("--width", wm_width, "grid width (default ceil(sqrt(bit length)))")
        ->check(CLI::PositiveNumber);
    wm->add_flag("--grid", wm_grid, "draw the grid outline in SVG output");

    // digraph
    CommonArgs dg_args;
    std::string dg_format = "json";
    double dg_alpha = 0.5;
    std::int64_t dg_max_distance = 0;
    bool dg_edges = false;
    auto* dg = app.add_subcommand("digraph", "weighted-digraph descriptor of records");
    add_common(dg, dg_args);
    dg->add_option("--format", dg_format, "json descriptor or csv matrix")
        ->check(CLI::IsMember({"json", "csv"}));
    dg->add_option("--alpha", dg_alpha, "weight exponent (> 0)")
        ->envname("SEQSIM_ALPHA")
        ->check(CLI::PositiveNumber);
    dg->add_option("--max-distance", dg_max_distance, "ignore pairs farther apart than this")
        ->check(CLI::PositiveNumber);
    dg->add_flag("--edges", dg_edges, "emit the unsimplified edge list instead");

    // align
    CommonArgs al_args;
    std::string al_mode = "global";
    int al_match = 1, al_mismatch = -1, al_gap = -2;
    auto* al = app.add_subcommand("align", "pairwise alignment of the first two records");
    add_common(al, al_args, false);
    al->add_option("--mode", al_mode, "global (Needleman-Wunsch) or local (Smith-Waterman)")
        ->check(CLI::IsMember({"global", "local"}));
    al->add_option("--match", al_match, "match reward (> 0)");
    al->add_option("--mismatch", al_mismatch, "mismatch penalty (<= 0)");
    al->add_option("--gap", al_gap, "gap penalty (<= 0)");

    // dotplot
    CommonArgs dp_args;
    std::string dp_format = "pbm";
    std::size_t dp_window = 1, dp_stringency = 1;
    auto* dp = app.add_subcommand("dotplot", "dot matrix of the first two records");
    add_common(dp, dp_args, false);
    dp->add_option("--format", dp_format, "pbm or svg")->check(CLI::IsMember({"pbm", "svg"}));
    dp->add_option("--window", dp_window, "window length")->check(CLI::PositiveNumber);
    dp->add_option("--stringency", dp_stringency, "matches required per window")
        ->check(CLI::PositiveNumber);

    // distmat
    CommonArgs dm_args;
    std::string dm_method = "digraph", dm_metric = "euclidean", dm_format = "csv";
    double dm_alpha = 0.5;
    std::int64_t dm_width = 0, dm_max_distance = 0;
    unsigned dm_workers = 0;
    auto* dm = app.add_subcommand("distmat", "pairwise distance matrix over all records");
    add_common(dm, dm_args, false);
    dm->add_option("--method", dm_method, "dcurve, worm or digraph")
        ->check(CLI::IsMember({"dcurve", "worm", "digraph"}));
    dm->add_option("--metric", dm_metric, "euclidean, one_minus_cosine or one_minus_pcc")
        ->check(CLI::IsMember({"euclidean", "one_minus_cosine", "one_minus_pcc"}));
    dm->add_option("--alpha", dm_alpha, "digraph weight exponent")
        ->envname("SEQSIM_ALPHA")
        ->check(CLI::PositiveNumber);
    dm->add_option("--width", dm_width, "worm grid width")->check(CLI::PositiveNumber);
    dm->add_option("--max-distance", dm_max_distance, "digraph pair cutoff")
        ->check(CLI::PositiveNumber);
    dm->add_option("--workers", dm_workers, "parallel workers (0 = auto)")
        ->envname("SEQSIM_WORKERS");
    dm->add_option("--format", dm_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // tree
    std::string tree_input, tree_output, tree_algo = "nj", tree_format = "newick",
                tree_input_format = "csv";
    auto* tre = app.add_subcommand("tree", "phylogenetic tree from a distance matrix");
    tre->add_option("-i,--input", tree_input, "distance matrix file ('-' for stdin)");
    tre->add_option("-o,--output", tree_output, "output file (default stdout)");
    tre->add_option("--algo", tree_algo, "nj or upgma")->check(CLI::IsMember({"nj", "upgma"}));
    tre->add_option("--format", tree_format, "newick or svg")
        ->check(CLI::IsMember({"newick", "svg"}));
    tre->add_option("--input-format", tree_input_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (tr->parsed()) {
            const auto seqs = load_fasta(tr_args.input, tr_args.strip_ambiguous);
            std::string out;
            for (const auto& s : seqs) {
                const auto t = translate(transcribe(s), frame);
                out += '>' + s.id + '\n' + t.amino_acids + '\n';
                if (t.leftover_bases)
                    std::cerr << "note: record '" << s.id << "' has " << t.leftover_bases
                              << " leftover base(s) past the last codon\n";
            }
            write_output(tr_args.output, out);
        } else if (dc->parsed()) {
            const auto seqs = load_fasta(dc_args.input, dc_args.strip_ambiguous);
            const auto curve = make_dcurve(select_record(seqs, dc_args.record_id));
            write_output(dc_args.output, dc_format == "csv" ? dcurve_csv(curve) : dcurve_svg(curve));
        } else if (wm->parsed()) {
            const auto seqs = load_fasta(wm_args.input, wm_args.strip_ambiguous);
            const auto& rec = select_record(seqs, wm_args.record_id);
            const auto spots =
                spot_set(encode_binary(rec),
                         wm_width > 0 ? std::optional<std::int64_t>(wm_width) : std::nullopt);
            write_output(wm_args.output,
                         wm_format == "csv" ? spots_csv(spots) : spots_svg(spots, wm_grid));
        } else if (dg->parsed()) {
            const auto seqs = load_fasta(dg_args.input, dg_args.strip_ambiguous);
            WeightParams params{dg_alpha,
                                dg_max_distance > 0
                                    ? std::optional<std::int64_t>(dg_max_distance)
                                    : std::nullopt};
            std::string out;
            if (dg_edges) {
                const auto& rec = select_record(seqs, dg_args.record_id);
                out = "i,j,from,to,weight\n";
                for (const auto& e : edge_list(rec, params))
                    out += std::to_string(e.i) + ',' + std::to_string(e.j) + ',' + e.from +
                           ',' + e.to + ',' + format_double(e.weight) + '\n';
            } else if (dg_format == "csv") {
                const auto& rec = select_record(seqs, dg_args.record_id);
                out = weight_matrix_csv(adjacency_matrix(rec, params));
            } else {
                // one JSON object per line so multi-record files stream cleanly
                const auto* rec = dg_args.record_id.empty() && seqs.size() > 1
                                      ? nullptr
                                      : &select_record(seqs, dg_args.record_id);
                if (rec) {
                    out = descriptor_json(rec->id, adjacency_matrix(*rec, params)) + '\n';
                } else {
                    for (const auto& s : seqs)
                        out += descriptor_json(s.id, adjacency_matrix(s, params)) + '\n';
                }
            }
            write_output(dg_args.output, out);
        } else if (al->parsed()) {
            const auto seqs = load_fasta(al_args.input, al_args.strip_ambiguous);
            if (seqs.size() < 2) throw std::runtime_error("align needs at least 2 records");
            const ScoringScheme scheme{al_match, al_mismatch, al_gap};
            const auto result = al_mode == "global"
                                    ? needleman_wunsch(seqs[0], seqs[1], scheme)
                                    : smith_waterman(seqs[0], seqs[1], scheme);
            write_output(al_args.output, "score: " + std::to_string(result.score) + '\n' +
                                             alignment_text(result));
        } else if (dp->parsed()) {
            const auto seqs = load_fasta(dp_args.input, dp_args.strip_ambiguous);
            if (seqs.size() < 2) throw std::runtime_error("dotplot needs at least 2 records");
            const auto m = dot_matrix(seqs[0], seqs[1], dp_window, dp_stringency);
            write_output(dp_args.output, dp_format == "pbm" ? dot_matrix_pbm(m) : dot_matrix_svg(m));
        } else if (dm->parsed()) {
            const auto seqs = load_fasta(dm_args.input, dm_args.strip_ambiguous);
            DistanceParams params;
            params.alpha = dm_alpha;
            if (dm_width > 0) params.width = dm_width;
            if (dm_max_distance > 0) params.max_distance = dm_max_distance;
            params.workers = dm_workers;
            const auto m = distance_matrix(seqs, parse_method(dm_method),
                                           parse_metric(dm_metric), params);
            write_output(dm_args.output, dm_format == "csv" ? matrix_csv(m) : matrix_json(m));
        } else if (tre->parsed()) {
            const std::string text = (tree_input.empty() || tree_input == "-")
                                         ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                         : read_file(tree_input);
            const auto m = tree_input_format == "csv" ? matrix_from_csv(text)
                                                      : matrix_from_json(text);
            const auto t = tree_algo == "nj" ? neighbor_joining(m) : upgma(m);
            if (t.clamped_branches)
                std::cerr << "warning: clamped " << t.clamped_branches
                          << " negative branch length(s) to 0\n";
            write_output(tree_output,
                         tree_format == "newick" ? to_newick(t) + '\n' : tree_svg(t));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
