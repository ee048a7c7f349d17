#include "seqsim/align.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace seqsim {

void ScoringScheme::validate() const {
    if (match <= 0) throw std::invalid_argument("match reward must be > 0");
    if (mismatch > 0) throw std::invalid_argument("mismatch penalty must be <= 0");
    if (gap > 0) throw std::invalid_argument("gap penalty must be <= 0");
}

namespace {

void check_lengths(const DnaSequence& s1, const DnaSequence& s2) {
    if (s1.size() > kMaxAlignmentLength || s2.size() > kMaxAlignmentLength)
        throw std::invalid_argument("sequence exceeds the alignment length limit of " +
                                    std::to_string(kMaxAlignmentLength) + " bases");
}

}  // namespace

DotMatrix dot_matrix(const DnaSequence& s1, const DnaSequence& s2, std::size_t window,
                     std::size_t stringency) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (stringency < 1 || stringency > window)
        throw std::invalid_argument("stringency must be in [1, window]");
    DotMatrix m;
    m.window = window;
    m.stringency = stringency;
    m.rows = s2.size() + 1 >= window + 1 ? s2.size() - window + 1 : 0;
    m.cols = s1.size() + 1 >= window + 1 ? s1.size() - window + 1 : 0;
    m.cells.assign(m.rows * m.cols, false);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            std::size_t matches = 0;
            for (std::size_t k = 0; k < window; ++k)
                if (s2.residues[i + k] == s1.residues[j + k]) ++matches;
            m.cells[i * m.cols + j] = matches >= stringency;
        }
    }
    return m;
}

namespace {

enum Move : unsigned char { kNone = 0, kDiag = 1, kUp = 2, kLeft = 3 };

struct DpTables {
    std::vector<long> h;
    std::vector<unsigned char> from;
    std::size_t cols = 0;

    long& score(std::size_t i, std::size_t j) { return h[i * cols + j]; }
    unsigned char& move(std::size_t i, std::size_t j) { return from[i * cols + j]; }
};

AlignmentResult traceback(const DnaSequence& s1, const DnaSequence& s2, DpTables& t,
                          std::size_t i, std::size_t j, bool local) {
    AlignmentResult r;
    r.end_a = i;
    r.end_b = j;
    std::string a, b;
    while (true) {
        const unsigned char mv = t.move(i, j);
        if (mv == kNone) break;
        if (mv == kDiag) {
            a += s1.residues[i - 1];
            b += s2.residues[j - 1];
            --i;
            --j;
        } else if (mv == kUp) {
            a += s1.residues[i - 1];
            b += '-';
            --i;
        } else {
            a += '-';
            b += s2.residues[j - 1];
            --j;
        }
        if (local && t.score(i, j) == 0) break;
    }
    r.start_a = i;
    r.start_b = j;
    std::reverse(a.begin(), a.end());
    std::reverse(b.begin(), b.end());
    r.aligned_a = std::move(a);
    r.aligned_b = std::move(b);
    return r;
}

}  // namespace

AlignmentResult needleman_wunsch(const DnaSequence& s1, const DnaSequence& s2,
                                 const ScoringScheme& scheme) {
    scheme.validate();
    check_lengths(s1, s2);
    const std::size_t n1 = s1.size(), n2 = s2.size();
    DpTables t;
    t.cols = n2 + 1;
    t.h.assign((n1 + 1) * (n2 + 1), 0);
    t.from.assign((n1 + 1) * (n2 + 1), kNone);
    for (std::size_t i = 1; i <= n1; ++i) {
        t.score(i, 0) = static_cast<long>(i) * scheme.gap;
        t.move(i, 0) = kUp;
    }
    for (std::size_t j = 1; j <= n2; ++j) {
        t.score(0, j) = static_cast<long>(j) * scheme.gap;
        t.move(0, j) = kLeft;
    }
    for (std::size_t i = 1; i <= n1; ++i) {
        for (std::size_t j = 1; j <= n2; ++j) {
            const int sub = s1.residues[i - 1] == s2.residues[j - 1] ? scheme.match
                                                                     : scheme.mismatch;
            const long diag = t.score(i - 1, j - 1) + sub;
            const long up = t.score(i - 1, j) + scheme.gap;
            const long left = t.score(i, j - 1) + scheme.gap;
            long best = diag;
            unsigned char mv = kDiag;
            if (up > best) {
                best = up;
                mv = kUp;
            }
            if (left > best) {
                best = left;
                mv = kLeft;
            }
            t.score(i, j) = best;
            t.move(i, j) = mv;
        }
    }
    AlignmentResult r = traceback(s1, s2, t, n1, n2, /*local=*/false);
    r.score = t.score(n1, n2);
    return r;
}

AlignmentResult smith_waterman(const DnaSequence& s1, const DnaSequence& s2,
                               const ScoringScheme& scheme) {
    scheme.validate();
    check_lengths(s1, s2);
    const std::size_t n1 = s1.size(), n2 = s2.size();
    DpTables t;
    t.cols = n2 + 1;
    t.h.assign((n1 + 1) * (n2 + 1), 0);
    t.from.assign((n1 + 1) * (n2 + 1), kNone);
    long best = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 1; i <= n1; ++i) {
        for (std::size_t j = 1; j <= n2; ++j) {
            const int sub = s1.residues[i - 1] == s2.residues[j - 1] ? scheme.match
                                                                     : scheme.mismatch;
            const long diag = t.score(i - 1, j - 1) + sub;
            const long up = t.score(i - 1, j) + scheme.gap;
            const long left = t.score(i, j - 1) + scheme.gap;
            long v = diag;
            unsigned char mv = kDiag;
            if (up > v) {
                v = up;
                mv = kUp;
            }
            if (left > v) {
                v = left;
                mv = kLeft;
            }
            if (v <= 0) {
                v = 0;
                mv = kNone;
            }
            t.score(i, j) = v;
            t.move(i, j) = mv;
            if (v > best) {  // first maximum in row-major scan order wins
                best = v;
                bi = i;
                bj = j;
            }
        }
    }
    if (best == 0) {
        AlignmentResult r;
        return r;
    }
    AlignmentResult r = traceback(s1, s2, t, bi, bj, /*local=*/true);
    r.score = best;
    return r;
}

long alignment_score(const AlignmentResult& r, const ScoringScheme& scheme) {
    if (r.aligned_a.size() != r.aligned_b.size())
        throw std::invalid_argument("aligned strings differ in length");
    long score = 0;
    for (std::size_t i = 0; i < r.aligned_a.size(); ++i) {
        const char a = r.aligned_a[i], b = r.aligned_b[i];
        if (a == '-' && b == '-')
            throw std::invalid_argument("gap aligned to gap at column " + std::to_string(i));
        if (a == '-' || b == '-')
            score += scheme.gap;
        else
            score += a == b ? scheme.match : scheme.mismatch;
    }
    return score;
}

std::string alignment_text(const AlignmentResult& r) {
    std::string mid(r.aligned_a.size(), ' ');
    for (std::size_t i = 0; i < r.aligned_a.size(); ++i)
        if (r.aligned_a[i] == r.aligned_b[i]) mid[i] = '|';
    return r.aligned_a + '\n' + mid + '\n' + r.aligned_b + '\n';
}

std::string dot_matrix_pbm(const DotMatrix& m) {
    std::string out = "P1\n" + std::to_string(m.cols) + ' ' + std::to_string(m.rows) + '\n';
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            out += m.at(i, j) ? '1' : '0';
            out += j + 1 < m.cols ? ' ' : '\n';
        }
    }
    return out;
}

std::string dot_matrix_svg(const DotMatrix& m) {
    const double cell = 10, pad = 10, r = 3.0;
    const double w = pad * 2 + cell * static_cast<double>(std::max<std::size_t>(m.cols, 1));
    const double h = pad * 2 + cell * static_cast<double>(std::max<std::size_t>(m.rows, 1));
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j))
                svg << "  <circle cx=\"" << pad + cell * (static_cast<double>(j) + 0.5)
                    << "\" cy=\"" << pad + cell * (static_cast<double>(i) + 0.5) << "\" r=\""
                    << r << "\" fill=\"#000000\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace seqsim
