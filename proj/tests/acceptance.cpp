// Acceptance checks for the toolkit's core guarantees. Each check prints one
// PASS/FAIL line; the exit status is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seqsim/align.hpp"
#include "seqsim/dcurve.hpp"
#include "seqsim/digraph.hpp"
#include "seqsim/distance.hpp"
#include "seqsim/phylo.hpp"
#include "seqsim/sequence.hpp"
#include "seqsim/worm.hpp"

using namespace seqsim;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& msg) { notes.push_back(msg); }

void report(const char* name, bool ok) {
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", name);
    if (!ok) {
        ++failures;
        for (const auto& n : notes) std::printf("      %s\n", n.c_str());
    }
    notes.clear();
}

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string random_residues(std::mt19937& rng, std::size_t len) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += kBases[static_cast<std::size_t>(pick(rng))];
    return s;
}

// ---------------------------------------------------------------------------
// 1. D-curve of ATGGTGCACC: all 9 steps and prefix sums, integer-exact.

bool check_dcurve_example() {
    const auto t0 = Clock::now();
    const auto curve = make_dcurve(DnaSequence{"s", "ATGGTGCACC"});
    // columns: a, b, c, cumulative a, b, c
    const long expected[9][6] = {
        {2, 1, 2, 2, 1, 2},     {1, -2, -2, 3, -1, 0},   {-1, 2, -2, 2, 1, -2},
        {-2, 1, -2, 0, 2, -4},  {1, -2, -2, 1, 0, -6},   {-2, 2, -4, -1, 2, -10},
        {-1, -1, 1, -2, 1, -9}, {2, 2, 4, 0, 3, -5},     {-2, -2, 4, -2, 1, -1}};
    bool ok = curve.size() == 9;
    for (std::size_t k = 0; ok && k < 9; ++k) {
        const auto& s = curve.steps[k];
        const auto& c = curve.cumulative[k];
        ok = s.k == k + 1 && s.a == expected[k][0] && s.b == expected[k][1] &&
             s.c == expected[k][2] && c.a == expected[k][3] && c.b == expected[k][4] &&
             c.c == expected[k][5];
        if (!ok) note("mismatch at step " + std::to_string(k + 1));
    }
    const double ms = elapsed_ms(t0);
    if (ms >= 1.0) note("too slow: " + std::to_string(ms) + " ms");
    return ok && ms < 1.0;
}

// ---------------------------------------------------------------------------
// 2. Weighted-digraph matrix of ACGTATC at alpha = 0.5: all 16 entries within
//    1e-4 of the worked values (the (T,C) entry is 1/sqrt(3) + 1 = 1.5774),
//    and the entries sum to sum_{d=1}^{6} (7-d) d^(-1/2) = 14.6476.

bool check_digraph_example() {
    const auto t0 = Clock::now();
    const auto r = flatten(adjacency_matrix(DnaSequence{"s", "ACGTATC"}, WeightParams{0.5, {}}));
    const double expected[16] = {0.5000, 2.1154, 0.7071, 2.0246, 0.5774, 0.4472, 1.0000, 1.2071,
                                 0.7071, 0.5000, 0.0000, 1.5774, 1.0000, 1.5774, 0.0000, 0.7071};
    bool ok = true;
    for (int i = 0; i < 16; ++i)
        if (std::abs(r[static_cast<std::size_t>(i)] - expected[i]) > 1e-4) {
            note("entry " + std::to_string(i) + " off");
            ok = false;
        }
    const double tc = r[13];
    if (std::abs(tc - (1.0 / std::sqrt(3.0) + 1.0)) > 1e-4) {
        note("(T,C) entry is not 1/sqrt(3)+1");
        ok = false;
    }
    double total = 0, identity = 0;
    for (const double v : r) total += v;
    for (int d = 1; d <= 6; ++d) identity += (7 - d) / std::sqrt(static_cast<double>(d));
    if (std::abs(total - identity) > 1e-3 || std::abs(total - 14.6476) > 1e-3) {
        note("total weight " + std::to_string(total) + " != " + std::to_string(identity));
        ok = false;
    }
    const double ms = elapsed_ms(t0);
    if (ms >= 1.0) note("too slow: " + std::to_string(ms) + " ms");
    return ok && ms < 1.0;
}

// ---------------------------------------------------------------------------
// 3. Total-weight identity within 1e-9 relative error and exact
//    reverse => transpose, over 1000 random sequences.

bool check_digraph_identities() {
    std::mt19937 rng(20260823);
    const double alphas[] = {0.25, 0.5, 1.0, 2.0};
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng() % 199;
        const DnaSequence seq{"s", random_residues(rng, n)};
        const double alpha = alphas[rng() % 4];
        const auto m = adjacency_matrix(seq, WeightParams{alpha, {}});

        double total = 0, identity = 0;
        for (const auto& row : m.m)
            for (const double v : row) total += v;
        for (std::size_t d = 1; d < n; ++d)
            identity += static_cast<double>(n - d) * std::pow(static_cast<double>(d), -alpha);
        if (std::abs(total - identity) / identity >= 1e-9) {
            note("total-weight identity violated at trial " + std::to_string(trial));
            return false;
        }

        DnaSequence rev{"r", {seq.residues.rbegin(), seq.residues.rend()}};
        const auto mr = adjacency_matrix(rev, WeightParams{alpha, {}});
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                if (mr.m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] !=
                    m.m[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) {
                    note("reverse is not the exact transpose at trial " + std::to_string(trial));
                    return false;
                }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 4. Standard genetic code: all 64 codons, with the unambiguous anchor cells
//    asserted explicitly.

bool check_genetic_code() {
    // one-letter codes in lexicographic (A,C,G,U) codon order
    const std::string expected =
        "KNKNTTTTRSRSIIMI"
        "QHQHPPPPRRRRLLLL"
        "EDEDAAAAGGGGVVVV"
        "*Y*YSSSS*CWCLFLF";
    const auto table = codon_table();
    if (table.size() != 64) {
        note("codon table has " + std::to_string(table.size()) + " entries");
        return false;
    }
    for (std::size_t i = 0; i < 64; ++i)
        if (table[i].second != expected[i]) {
            note("codon " + table[i].first + " translates to " +
                 std::string(1, table[i].second));
            return false;
        }
    return translate_codon("UUU") == 'F' && translate_codon("UGG") == 'W' &&
           translate_codon("AUG") == 'M' && translate_codon("UAA") == '*' &&
           translate_codon("UAG") == '*' && translate_codon("UGA") == '*';
}

// ---------------------------------------------------------------------------
// 5. Alignment scores equal brute-force enumeration on 500 random short pairs.

long nw_brute(const std::string& a, const std::string& b, std::size_t i, std::size_t j,
              const ScoringScheme& s) {
    if (i == a.size()) return static_cast<long>(b.size() - j) * s.gap;
    if (j == b.size()) return static_cast<long>(a.size() - i) * s.gap;
    const long diag = nw_brute(a, b, i + 1, j + 1, s) + (a[i] == b[j] ? s.match : s.mismatch);
    return std::max({diag, nw_brute(a, b, i + 1, j, s) + s.gap,
                     nw_brute(a, b, i, j + 1, s) + s.gap});
}

long sw_brute(const std::string& a, const std::string& b, const ScoringScheme& s) {
    long best = 0;
    for (std::size_t i0 = 0; i0 <= a.size(); ++i0)
        for (std::size_t i1 = i0; i1 <= a.size(); ++i1)
            for (std::size_t j0 = 0; j0 <= b.size(); ++j0)
                for (std::size_t j1 = j0; j1 <= b.size(); ++j1)
                    best = std::max(best, nw_brute(a.substr(i0, i1 - i0), b.substr(j0, j1 - j0),
                                                   0, 0, s));
    return best;
}

bool check_alignment_oracle() {
    const auto t0 = Clock::now();
    std::mt19937 rng(424243);
    const ScoringScheme schemes[] = {{1, -1, -2}, {2, -1, -1}, {1, 0, -1}};
    for (int trial = 0; trial < 500; ++trial) {
        const std::string a = random_residues(rng, rng() % 6);
        const std::string b = random_residues(rng, rng() % 6);
        const auto& s = schemes[rng() % 3];
        if (needleman_wunsch(DnaSequence{"a", a}, DnaSequence{"b", b}, s).score !=
            nw_brute(a, b, 0, 0, s)) {
            note("global score mismatch on " + a + " / " + b);
            return false;
        }
        if (smith_waterman(DnaSequence{"a", a}, DnaSequence{"b", b}, s).score !=
            sw_brute(a, b, s)) {
            note("local score mismatch on " + a + " / " + b);
            return false;
        }
    }
    const double ms = elapsed_ms(t0);
    if (ms >= 10000) {
        note("too slow: " + std::to_string(ms) + " ms");
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 6. Covariance descriptor: the two cross moments coincide exactly, the
//    descriptor is translation-invariant, and the spot count obeys
//    #spots = #G + #C + 2*#T.

bool check_covariance_invariants() {
    std::mt19937 rng(515253);
    for (int trial = 0; trial < 1000; ++trial) {
        SpotSet spots;
        spots.width = 1 + rng() % 16;
        const std::size_t count = 1 + rng() % 40;
        for (std::size_t i = 0; i < count; ++i)
            spots.points.emplace_back(rng() % 32, rng() % 32);
        const auto d = covariance_descriptor(spots);
        if (d.d[1] != d.d[2]) {
            note("cross moments differ at trial " + std::to_string(trial));
            return false;
        }
        SpotSet shifted = spots;
        const std::int64_t dx = static_cast<std::int64_t>(rng() % 1000) - 500;
        const std::int64_t dy = static_cast<std::int64_t>(rng() % 1000) - 500;
        for (auto& p : shifted.points) {
            p.first += dx;
            p.second += dy;
        }
        const auto ds = covariance_descriptor(shifted);
        for (int k = 0; k < 4; ++k)
            if (std::abs(d.d[static_cast<std::size_t>(k)] - ds.d[static_cast<std::size_t>(k)]) >
                1e-12) {
                note("translation changed the descriptor at trial " + std::to_string(trial));
                return false;
            }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const DnaSequence seq{"s", random_residues(rng, 1 + rng() % 120)};
        const auto spots = spot_set(encode_binary(seq));
        std::size_t want = 0;
        for (const char c : seq.residues)
            want += c == 'G' || c == 'C' ? 1 : c == 'T' ? 2 : 0;
        if (spots.points.size() != want) {
            note("spot count law violated for " + seq.residues);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 7. Metric axioms on 1000 random triples: zero self-distance and exact
//    symmetry for d1/d2/d3 and the covariance-descriptor distance; triangle
//    inequality (1e-12 slack) for the two Euclidean forms; scale invariance
//    of d2 and affine invariance of d3.

bool check_metric_axioms() {
    std::mt19937 rng(616263);
    std::uniform_real_distribution<double> unit(-5.0, 5.0);
    std::uniform_real_distribution<double> pos(0.1, 5.0);
    for (int trial = 0; trial < 1000; ++trial) {
        std::array<std::array<double, 16>, 3> v;
        for (auto& x : v)
            for (auto& e : x) e = unit(rng);
        // keep the vectors safely nonzero and nonconstant
        v[0][0] += 10;
        v[1][1] += 10;
        v[2][2] += 10;

        for (auto metric : {d1, d2, d3}) {
            for (int i = 0; i < 3; ++i) {
                if (metric(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]) >
                    1e-12) {
                    note("nonzero self-distance");
                    return false;
                }
                for (int j = 0; j < 3; ++j)
                    if (metric(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]) !=
                        metric(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(i)])) {
                        note("asymmetric metric");
                        return false;
                    }
            }
        }
        if (d1(v[0], v[2]) > d1(v[0], v[1]) + d1(v[1], v[2]) + 1e-12) {
            note("d1 triangle inequality violated");
            return false;
        }

        std::array<double, 16> scaled, affine;
        const double c = pos(rng), a = pos(rng), b = unit(rng);
        for (std::size_t i = 0; i < 16; ++i) {
            scaled[i] = c * v[0][i];
            affine[i] = a * v[0][i] + b;
        }
        if (d2(v[0], scaled) > 1e-12) {
            note("d2 not scale invariant");
            return false;
        }
        if (d3(v[0], affine) > 1e-12) {
            note("d3 not affine invariant");
            return false;
        }

        // covariance-descriptor distance on three random spot sets
        std::array<CovarianceDescriptor, 3> cd;
        for (auto& d : cd) {
            SpotSet spots;
            spots.width = 4;
            const std::size_t count = 1 + rng() % 20;
            for (std::size_t i = 0; i < count; ++i)
                spots.points.emplace_back(rng() % 16, rng() % 16);
            d = covariance_descriptor(spots);
        }
        if (descriptor_distance(cd[0], cd[0]) != 0.0 ||
            descriptor_distance(cd[0], cd[1]) != descriptor_distance(cd[1], cd[0])) {
            note("descriptor distance axioms violated");
            return false;
        }
        if (descriptor_distance(cd[0], cd[2]) >
            descriptor_distance(cd[0], cd[1]) + descriptor_distance(cd[1], cd[2]) + 1e-12) {
            note("descriptor distance triangle inequality violated");
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 8. Tree recovery: NJ rebuilds random additive matrices, UPGMA rebuilds
//    random ultrametric ones -- path distances within 1e-9 and the planted
//    topology (as a split set).

using Split = std::set<std::string>;

Split canonical(Split s, const std::set<std::string>& all, const std::string& anchor) {
    if (s.count(anchor)) {
        Split flipped;
        std::set_difference(all.begin(), all.end(), s.begin(), s.end(),
                            std::inserter(flipped, flipped.begin()));
        return flipped;
    }
    return s;
}

struct Planted {
    DistanceMatrix matrix;
    std::set<Split> splits;
};

Planted plant(std::mt19937& rng, std::size_t taxa, bool ultrametric) {
    Planted out;
    for (std::size_t i = 0; i < taxa; ++i) out.matrix.labels.push_back("t" + std::to_string(i));
    out.matrix.d.assign(taxa, std::vector<double>(taxa, 0.0));

    struct Cluster {
        std::map<std::size_t, double> depth;  // leaf index -> distance to cluster root
        double height = 0;
    };
    std::uniform_real_distribution<double> edge(0.5, 3.0);
    std::uniform_real_distribution<double> rise(0.2, 1.0);
    std::vector<Cluster> active(taxa);
    for (std::size_t i = 0; i < taxa; ++i) active[i].depth[i] = 0.0;

    const std::set<std::string> all(out.matrix.labels.begin(), out.matrix.labels.end());
    while (active.size() > 1) {
        const std::size_t i = rng() % active.size();
        std::size_t j = rng() % (active.size() - 1);
        if (j >= i) ++j;
        Cluster a = active[std::min(i, j)], b = active[std::max(i, j)];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));

        Cluster merged;
        if (ultrametric) {
            merged.height = std::max(a.height, b.height) + rise(rng);
            for (auto& [leaf, d] : a.depth) merged.depth[leaf] = merged.height;
            for (auto& [leaf, d] : b.depth) merged.depth[leaf] = merged.height;
        } else {
            const double ea = edge(rng), eb = edge(rng);
            for (auto& [leaf, d] : a.depth) merged.depth[leaf] = d + ea;
            for (auto& [leaf, d] : b.depth) merged.depth[leaf] = d + eb;
        }
        for (const auto& [u, du] : a.depth)
            for (const auto& [v, dv] : b.depth)
                out.matrix.d[u][v] = out.matrix.d[v][u] =
                    ultrametric ? 2 * merged.height : merged.depth[u] + merged.depth[v];

        for (const Cluster* side : {&a, &b})
            if (side->depth.size() >= 2 && side->depth.size() <= taxa - 2) {
                Split s;
                for (const auto& [leaf, d] : side->depth) s.insert(out.matrix.labels[leaf]);
                out.splits.insert(canonical(s, all, out.matrix.labels[0]));
            }
        active.push_back(std::move(merged));
    }
    return out;
}

std::set<Split> tree_splits(const PhyloTree& t, const std::vector<std::string>& labels) {
    const std::set<std::string> all(labels.begin(), labels.end());
    std::set<Split> out;
    for (int idx = 0; idx < static_cast<int>(t.nodes.size()); ++idx) {
        if (idx == t.root || t.nodes[static_cast<std::size_t>(idx)].is_leaf()) continue;
        // leaves below this node
        Split below;
        std::vector<int> stack{idx};
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            const auto& node = t.nodes[static_cast<std::size_t>(cur)];
            if (node.is_leaf()) below.insert(node.label);
            for (const int child : node.children) stack.push_back(child);
        }
        if (below.size() >= 2 && below.size() <= all.size() - 2)
            out.insert(canonical(below, all, labels[0]));
    }
    return out;
}

bool check_tree_recovery() {
    const auto t0 = Clock::now();
    std::mt19937 rng(717273);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t taxa = 4 + rng() % 5;
        for (const bool ultrametric : {false, true}) {
            const auto planted = plant(rng, taxa, ultrametric);
            const auto tree =
                ultrametric ? upgma(planted.matrix) : neighbor_joining(planted.matrix);
            const auto paths = leaf_path_distances(tree, planted.matrix.labels);
            for (std::size_t i = 0; i < taxa; ++i)
                for (std::size_t j = 0; j < taxa; ++j)
                    if (std::abs(paths.d[i][j] - planted.matrix.d[i][j]) > 1e-9) {
                        note(std::string(ultrametric ? "upgma" : "nj") +
                             " path distance off at trial " + std::to_string(trial));
                        return false;
                    }
            if (tree_splits(tree, planted.matrix.labels) != planted.splits) {
                note(std::string(ultrametric ? "upgma" : "nj") + " topology wrong at trial " +
                     std::to_string(trial));
                return false;
            }
        }
    }
    const double ms = elapsed_ms(t0);
    if (ms >= 5000) {
        note("too slow: " + std::to_string(ms) + " ms");
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 9. End-to-end on a 12-record FASTA: three digraph matrices (euclidean,
//    one-minus-cosine, one-minus-pcc), three Newick trees, and byte-identical
//    output across worker counts.

bool check_pipeline_12_records() {
    std::mt19937 rng(818283);
    std::string fasta;
    for (int i = 0; i < 12; ++i)
        fasta += ">species" + std::to_string(i) + "\n" + random_residues(rng, 40 + rng() % 80) +
                 "\n";
    const auto seqs = parse_fasta(fasta);
    if (seqs.size() != 12) {
        note("expected 12 records");
        return false;
    }
    for (const auto metric :
         {Metric::Euclidean, Metric::OneMinusCosine, Metric::OneMinusPcc}) {
        DistanceParams params;
        params.workers = 1;
        const auto m = distance_matrix(seqs, Method::Digraph, metric, params);
        try {
            m.validate();
        } catch (const std::exception& e) {
            note(std::string("matrix axioms violated: ") + e.what());
            return false;
        }
        if (m.size() != 12) {
            note("matrix is not 12x12");
            return false;
        }
        if (metric == Metric::Euclidean)
            for (std::size_t i = 0; i < 12; ++i)
                for (std::size_t j = 0; j < 12; ++j)
                    for (std::size_t k = 0; k < 12; ++k)
                        if (m.d[i][k] > m.d[i][j] + m.d[j][k] + 1e-12) {
                            note("euclidean matrix breaks the triangle inequality");
                            return false;
                        }

        const auto tree = neighbor_joining(m);
        const auto newick = to_newick(tree);
        if (newick.empty() || newick.back() != ';' || tree.leaves().size() != 12) {
            note("bad tree serialization");
            return false;
        }

        const auto reference = matrix_csv(m);
        for (const unsigned workers : {2u, 5u, 0u}) {
            DistanceParams p;
            p.workers = workers;
            const auto again = distance_matrix(seqs, Method::Digraph, metric, p);
            if (matrix_csv(again) != reference || to_newick(neighbor_joining(again)) != newick) {
                note("output differs with " + std::to_string(workers) + " workers");
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 10. 2-bit encoding: the worked string and the 2n length law.

bool check_binary_encoding() {
    if (encode_binary(DnaSequence{"s", "ATGGTGGGA"}) != "001101011101010100") {
        note("worked encoding mismatch");
        return false;
    }
    std::mt19937 rng(919293);
    for (int trial = 0; trial < 200; ++trial) {
        const DnaSequence seq{"s", random_residues(rng, rng() % 300)};
        if (encode_binary(seq).size() != 2 * seq.size()) {
            note("bit length is not 2n");
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    report("1. dinucleotide curve worked example (ATGGTGCACC)", check_dcurve_example());
    report("2. digraph worked matrix (ACGTATC, alpha=0.5)", check_digraph_example());
    report("3. digraph total-weight and reverse-transpose identities",
           check_digraph_identities());
    report("4. standard genetic code (64 codons)", check_genetic_code());
    report("5. alignment scores vs exhaustive enumeration", check_alignment_oracle());
    report("6. covariance descriptor invariants", check_covariance_invariants());
    report("7. distance metric axioms", check_metric_axioms());
    report("8. tree recovery from additive and ultrametric matrices", check_tree_recovery());
    report("9. 12-record pipeline: matrices, trees, reproducibility",
           check_pipeline_12_records());
    report("10. two-bit binary encoding", check_binary_encoding());
    return failures;
}
