#include "seqsim/sequence.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace seqsim {

namespace {

bool is_standard_base(char c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T';
}

bool is_ambiguity_code(char c) {
    // IUPAC nucleotide ambiguity codes.
    static const std::string codes = "NRYKMSWBDHV";
    return codes.find(c) != std::string::npos;
}

}  // namespace

int base_index(char base) {
    switch (base) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T':
        case 'U': return 3;
        default:
            throw std::invalid_argument(std::string("invalid base '") + base + "'");
    }
}

std::vector<DnaSequence> parse_fasta(std::istream& in, const FastaOptions& opts) {
    std::vector<DnaSequence> out;
    std::string line;
    std::size_t line_no = 0;
    bool have_record = false;

    auto finish_record = [&] {
        if (have_record && out.back().residues.empty())
            throw FastaError(out.back().id, line_no, 0,
                             "empty record '" + out.back().id + "'");
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            finish_record();
            std::string id = line.substr(1);
            // trim surrounding whitespace
            const auto first = id.find_first_not_of(" \t");
            const auto last = id.find_last_not_of(" \t");
            id = (first == std::string::npos) ? std::string() : id.substr(first, last - first + 1);
            out.push_back(DnaSequence{id, {}});
            have_record = true;
            continue;
        }
        if (!have_record)
            throw FastaError("", line_no, 1, "sequence data before any '>' header");
        DnaSequence& rec = out.back();
        for (std::size_t col = 0; col < line.size(); ++col) {
            char c = line[col];
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (is_standard_base(c)) {
                rec.residues.push_back(c);
            } else if (opts.strip_ambiguous && is_ambiguity_code(c)) {
                continue;
            } else {
                std::ostringstream msg;
                msg << "invalid residue '" << line[col] << "' in record '" << rec.id
                    << "' at line " << line_no << ", column " << (col + 1)
                    << " (sequence position " << (rec.residues.size() + 1) << ")";
                throw FastaError(rec.id, line_no, col + 1, msg.str());
            }
        }
    }
    finish_record();
    return out;
}

std::vector<DnaSequence> parse_fasta(std::string_view text, const FastaOptions& opts) {
    std::istringstream in{std::string(text)};
    return parse_fasta(in, opts);
}

std::string write_fasta(const std::vector<DnaSequence>& seqs) {
    std::string out;
    for (const auto& s : seqs) {
        out += '>';
        out += s.id;
        out += '\n';
        for (std::size_t i = 0; i < s.residues.size(); i += 60) {
            out += s.residues.substr(i, 60);
            out += '\n';
        }
    }
    return out;
}

std::vector<std::string> dinucleotides(const DnaSequence& seq) {
    std::vector<std::string> pairs;
    if (seq.size() <= 1) return pairs;
    pairs.reserve(seq.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        pairs.push_back(seq.residues.substr(i, 2));
    return pairs;
}

RnaSequence transcribe(const DnaSequence& seq) {
    RnaSequence rna{seq.id, seq.residues};
    for (char& c : rna.residues)
        if (c == 'T') c = 'U';
    return rna;
}

namespace {

// Standard genetic code, codon index = 16*b1 + 4*b2 + b3 with U,C,A,G order.
constexpr std::string_view kCodeUCAG =
    "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG";

int ucag_index(char base) {
    switch (base) {
        case 'U':
        case 'T': return 0;
        case 'C': return 1;
        case 'A': return 2;
        case 'G': return 3;
        default:
            throw std::invalid_argument(std::string("invalid base '") + base + "'");
    }
}

}  // namespace

char translate_codon(std::string_view codon) {
    if (codon.size() != 3)
        throw std::invalid_argument("codon must have exactly 3 bases");
    const int idx = 16 * ucag_index(codon[0]) + 4 * ucag_index(codon[1]) + ucag_index(codon[2]);
    return kCodeUCAG[idx];
}

Translation translate(const RnaSequence& rna, int frame) {
    if (frame < 0 || frame > 2)
        throw std::invalid_argument("frame must be 0, 1 or 2");
    Translation t;
    const std::string& r = rna.residues;
    std::size_t pos = static_cast<std::size_t>(frame);
    if (pos > r.size()) pos = r.size();
    while (pos + 3 <= r.size()) {
        const char aa = translate_codon(std::string_view(r).substr(pos, 3));
        if (aa == '*') t.stop_positions.push_back(t.amino_acids.size());
        t.amino_acids.push_back(aa);
        pos += 3;
    }
    t.leftover_bases = r.size() - pos;
    return t;
}

std::vector<std::pair<std::string, char>> codon_table() {
    static const char rna_bases[4] = {'A', 'C', 'G', 'U'};
    std::vector<std::pair<std::string, char>> table;
    table.reserve(64);
    for (char b1 : rna_bases)
        for (char b2 : rna_bases)
            for (char b3 : rna_bases) {
                std::string codon{b1, b2, b3};
                table.emplace_back(codon, translate_codon(codon));
            }
    return table;
}

}  // namespace seqsim
