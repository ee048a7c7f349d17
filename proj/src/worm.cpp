#include "seqsim/worm.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "seqsim/numfmt.hpp"

namespace seqsim {

std::string encode_binary(const DnaSequence& seq) {
    std::string bits;
    bits.reserve(2 * seq.size());
    for (char c : seq.residues) {
        switch (c) {
            case 'A': bits += "00"; break;
            case 'G': bits += "01"; break;
            case 'C': bits += "10"; break;
            case 'T': bits += "11"; break;
            default:
                throw std::invalid_argument(std::string("invalid base '") + c + "'");
        }
    }
    return bits;
}

SpotSet spot_set(const std::string& bits, std::optional<std::int64_t> width) {
    SpotSet spots;
    const auto len = static_cast<std::int64_t>(bits.size());
    if (width) {
        if (*width < 1) throw std::invalid_argument("grid width must be >= 1");
        spots.width = *width;
    } else {
        spots.width = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(len)))));
    }
    for (std::int64_t j = 0; j < len; ++j) {
        const char c = bits[static_cast<std::size_t>(j)];
        if (c == '1') {
            spots.points.emplace_back(j % spots.width, j / spots.width);
        } else if (c != '0') {
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        }
    }
    return spots;
}

CovarianceDescriptor covariance_descriptor(const SpotSet& spots) {
    if (spots.points.empty())
        throw std::invalid_argument("descriptor undefined for empty spot set");
    CovarianceDescriptor d;
    d.count = spots.points.size();
    const auto m = static_cast<double>(d.count);
    for (const auto& [a, b] : spots.points) {
        d.mu_a += static_cast<double>(a);
        d.mu_b += static_cast<double>(b);
    }
    d.mu_a /= m;
    d.mu_b /= m;
    double m1 = 0, m2 = 0, m4 = 0;
    for (const auto& [a, b] : spots.points) {
        const double da = static_cast<double>(a) - d.mu_a;
        const double db = static_cast<double>(b) - d.mu_b;
        m1 += da * da;
        m2 += da * db;
        m4 += db * db;
    }
    d.d = {m1 / m, m2 / m, m2 / m, m4 / m};
    return d;
}

double descriptor_distance(const CovarianceDescriptor& x, const CovarianceDescriptor& y) {
    double sum = 0;
    for (int i = 0; i < 4; ++i) {
        const double diff = x.d[static_cast<std::size_t>(i)] - y.d[static_cast<std::size_t>(i)];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

std::string spots_csv(const SpotSet& spots) {
    std::string out = "a,b\n";
    for (const auto& [a, b] : spots.points)
        out += std::to_string(a) + ',' + std::to_string(b) + '\n';
    return out;
}

std::string spots_svg(const SpotSet& spots, bool grid_outline) {
    const double cell = 10, pad = 10, r = 3.5;
    std::int64_t rows = 0;
    for (const auto& [a, b] : spots.points) rows = std::max(rows, b + 1);
    const double w = pad * 2 + cell * static_cast<double>(spots.width);
    const double h = pad * 2 + cell * static_cast<double>(std::max<std::int64_t>(rows, 1));
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    if (grid_outline) {
        svg << "  <rect x=\"" << pad << "\" y=\"" << pad << "\" width=\""
            << cell * static_cast<double>(spots.width) << "\" height=\""
            << cell * static_cast<double>(std::max<std::int64_t>(rows, 1))
            << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    }
    for (const auto& [a, b] : spots.points) {
        svg << "  <circle cx=\"" << format_double(pad + cell * (static_cast<double>(a) + 0.5))
            << "\" cy=\"" << format_double(pad + cell * (static_cast<double>(b) + 0.5))
            << "\" r=\"" << r << "\" fill=\"#000000\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace seqsim
