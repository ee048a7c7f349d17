#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seqsim/sequence.hpp"

namespace seqsim {

// Linear gap model scores. match > 0, mismatch <= 0, gap <= 0.
struct ScoringScheme {
    int match = 1;
    int mismatch = -1;
    int gap = -2;

    void validate() const;
};

struct AlignmentResult {
    long score = 0;
    std::string aligned_a;  // gaps as '-'
    std::string aligned_b;
    // Half-open input ranges covered by the alignment (whole inputs for
    // global mode, matched substrings for local mode).
    std::size_t start_a = 0, end_a = 0;
    std::size_t start_b = 0, end_b = 0;
};

struct DotMatrix {
    std::size_t rows = 0;  // second sequence
    std::size_t cols = 0;  // first sequence
    std::size_t window = 1;
    std::size_t stringency = 1;
    std::vector<bool> cells;  // row-major

    bool at(std::size_t row, std::size_t col) const { return cells[row * cols + col]; }
};

// Cell (i,j) is set when the length-w windows anchored at s2[i] and s1[j]
// agree in at least `stringency` positions.
DotMatrix dot_matrix(const DnaSequence& s1, const DnaSequence& s2, std::size_t window = 1,
                     std::size_t stringency = 1);

// Global alignment; traceback ties broken diagonal > up > left.
AlignmentResult needleman_wunsch(const DnaSequence& s1, const DnaSequence& s2,
                                 const ScoringScheme& scheme = {});

// Local alignment; DP cells clamped at 0, traceback from the first maximum
// in row-major scan order, stopping at the first zero cell.
AlignmentResult smith_waterman(const DnaSequence& s1, const DnaSequence& s2,
                               const ScoringScheme& scheme = {});

// Recomputes the score from the aligned strings; used for self-checks.
long alignment_score(const AlignmentResult& r, const ScoringScheme& scheme);

// Two aligned lines with a '|' midline at matches.
std::string alignment_text(const AlignmentResult& r);

// PBM-style text grid (P1 header, 1 = dot).
std::string dot_matrix_pbm(const DotMatrix& m);

std::string dot_matrix_svg(const DotMatrix& m);

// Inputs longer than this are rejected to bound DP memory.
inline constexpr std::size_t kMaxAlignmentLength = 100000;

}  // namespace seqsim
