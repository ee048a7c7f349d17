#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqsim {

// Validated DNA sequence over {A,C,G,T}, uppercase canonical.
struct DnaSequence {
    std::string id;
    std::string residues;

    std::size_t size() const { return residues.size(); }
};

// RNA sequence over {A,C,G,U}.
struct RnaSequence {
    std::string id;
    std::string residues;
};

class FastaError : public std::runtime_error {
  public:
    FastaError(std::string record, std::size_t line, std::size_t column,
               const std::string& what_arg)
        : std::runtime_error(what_arg), record_(std::move(record)), line_(line),
          column_(column) {}

    const std::string& record() const { return record_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::string record_;
    std::size_t line_;
    std::size_t column_;
};

struct FastaOptions {
    // Drop IUPAC ambiguity codes (N, R, Y, ...) instead of failing on them.
    bool strip_ambiguous = false;
};

// Parses FASTA text. Lowercase residues are folded to uppercase; line breaks
// and surrounding whitespace within records are ignored. Any residue outside
// {A,C,G,T} raises FastaError with the record id, line and column.
std::vector<DnaSequence> parse_fasta(std::istream& in, const FastaOptions& opts = {});
std::vector<DnaSequence> parse_fasta(std::string_view text, const FastaOptions& opts = {});

// Serializes records as '>' + id, then the sequence wrapped at 60 columns.
std::string write_fasta(const std::vector<DnaSequence>& seqs);

// The n-1 overlapping base pairs S1S2, S2S3, ..., S(n-1)Sn.
std::vector<std::string> dinucleotides(const DnaSequence& seq);

// T -> U substitution.
RnaSequence transcribe(const DnaSequence& seq);

struct Translation {
    std::string amino_acids;             // one-letter codes, '*' marks a stop codon
    std::vector<std::size_t> stop_positions;  // 0-based codon indices of stops
    std::size_t leftover_bases = 0;      // trailing bases not forming a triplet
};

// Standard genetic code lookup; codon is an RNA triplet (DNA triplets with T
// are accepted too). Returns the one-letter amino-acid code or '*' for a stop.
char translate_codon(std::string_view codon);

// Reads complete triplets starting at offset frame (0, 1 or 2).
Translation translate(const RnaSequence& rna, int frame = 0);

// All 64 RNA codons in lexicographic (A,C,G,U) order paired with their code.
std::vector<std::pair<std::string, char>> codon_table();

// 0..3 index for A,C,G,T (or U). Throws std::invalid_argument otherwise.
int base_index(char base);

inline constexpr std::array<char, 4> kBases = {'A', 'C', 'G', 'T'};

}  // namespace seqsim
