#include "seqsim/dcurve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "seqsim/numfmt.hpp"

namespace seqsim {

namespace {

DinucleotideCoordMap build_coord_map() {
    // quadrant sign by first base, magnitudes by second base
    constexpr int sign_a[4] = {+1, -1, -1, +1};  // A C G T
    constexpr int sign_b[4] = {+1, -1, +1, -1};
    constexpr int mag_a[4] = {1, 2, 1, 2};  // second base A C G T
    constexpr int mag_b[4] = {1, 2, 2, 1};
    DinucleotideCoordMap m{};
    for (int first = 0; first < 4; ++first)
        for (int second = 0; second < 4; ++second)
            m[static_cast<std::size_t>(4 * first + second)] =
                DinucleotideCoords{sign_a[first] * mag_a[second], sign_b[first] * mag_b[second]};
    return m;
}

}  // namespace

const DinucleotideCoordMap& standard_coord_map() {
    static const DinucleotideCoordMap map = build_coord_map();
    return map;
}

DCurve make_dcurve(const DnaSequence& seq, const DinucleotideCoordMap& map) {
    if (seq.size() < 2)
        throw std::invalid_argument("sequence too short for dinucleotide curve");
    DCurve curve;
    curve.steps.reserve(seq.size() - 1);
    curve.cumulative.reserve(seq.size() - 1);
    DCurvePoint run{};
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const int first = base_index(seq.residues[i]);
        const int second = base_index(seq.residues[i + 1]);
        const auto [a, b] = map[static_cast<std::size_t>(4 * first + second)];
        DCurveStep step;
        step.dinucleotide = seq.residues.substr(i, 2);
        step.a = a;
        step.b = b;
        step.c = a * b;
        step.k = i + 1;
        run.a += a;
        run.b += b;
        run.c += step.c;
        curve.steps.push_back(std::move(step));
        curve.cumulative.push_back(run);
    }
    return curve;
}

std::array<double, 3> dcurve_descriptor(const DCurve& curve) {
    if (curve.steps.empty())
        throw std::invalid_argument("descriptor undefined for empty curve");
    const auto m = static_cast<double>(curve.size());
    const DCurvePoint& end = curve.cumulative.back();
    return {static_cast<double>(end.a) / m, static_cast<double>(end.b) / m,
            static_cast<double>(end.c) / m};
}

namespace {

// Nearest-index resampling of a series to m points.
std::vector<double> resample(const std::vector<double>& src, std::size_t m) {
    std::vector<double> out(m);
    const auto last = static_cast<double>(src.size() - 1);
    for (std::size_t t = 0; t < m; ++t) {
        const auto idx = static_cast<std::size_t>(
            std::llround(static_cast<double>(t) * last / static_cast<double>(m - 1)));
        out[t] = src[idx];
    }
    return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("PCC undefined for zero-variance series");
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> component(const DCurve& c, int which) {
    std::vector<double> v;
    v.reserve(c.size());
    for (const auto& p : c.cumulative)
        v.push_back(static_cast<double>(which == 0 ? p.a : which == 1 ? p.b : p.c));
    return v;
}

}  // namespace

double dcurve_pcc(const DCurve& x, const DCurve& y) {
    if (x.size() < 2 || y.size() < 2)
        throw std::invalid_argument("PCC needs curves with at least 2 steps");
    const std::size_t m = std::min(x.size(), y.size());
    double sum = 0;
    for (int comp = 0; comp < 3; ++comp)
        sum += pearson(resample(component(x, comp), m), resample(component(y, comp), m));
    return sum / 3.0;
}

std::string dcurve_csv(const DCurve& curve) {
    std::string out = "k,a,b,c,a_cum,b_cum,c_cum\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& s = curve.steps[i];
        const auto& p = curve.cumulative[i];
        out += std::to_string(s.k) + ',' + std::to_string(s.a) + ',' + std::to_string(s.b) +
               ',' + std::to_string(s.c) + ',' + std::to_string(p.a) + ',' +
               std::to_string(p.b) + ',' + std::to_string(p.c) + '\n';
    }
    return out;
}

namespace {

std::string polyline(const std::vector<std::pair<double, double>>& pts, const char* color) {
    std::string s = "  <polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"1\" points=\"";
    for (const auto& [x, y] : pts) {
        s += format_double(x);
        s += ',';
        s += format_double(y);
        s += ' ';
    }
    if (!pts.empty()) s.pop_back();
    s += "\"/>\n";
    return s;
}

}  // namespace

std::string dcurve_svg(const DCurve& curve) {
    const double w = 480, h = 480, pad = 30;
    std::int64_t amin = 0, amax = 0, bmin = 0, bmax = 0, cmin = 0, cmax = 0;
    for (const auto& p : curve.cumulative) {
        amin = std::min(amin, p.a);
        amax = std::max(amax, p.a);
        bmin = std::min(bmin, p.b);
        bmax = std::max(bmax, p.b);
        cmin = std::min(cmin, std::min(p.c, std::min(p.a, p.b)));
        cmax = std::max(cmax, std::max(p.c, std::max(p.a, p.b)));
    }
    auto span = [](std::int64_t lo, std::int64_t hi) {
        return std::max<std::int64_t>(1, hi - lo);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << 2 * h << "\" viewBox=\"0 0 " << w << ' ' << 2 * h << "\">\n";

    // panel 1: (a', b') projection, origin included as the curve start
    {
        const double sx = (w - 2 * pad) / static_cast<double>(span(amin, amax));
        const double sy = (h - 2 * pad) / static_cast<double>(span(bmin, bmax));
        auto px = [&](std::int64_t a) { return pad + sx * static_cast<double>(a - amin); };
        auto py = [&](std::int64_t b) { return h - pad - sy * static_cast<double>(b - bmin); };
        std::vector<std::pair<double, double>> pts{{px(0), py(0)}};
        for (const auto& p : curve.cumulative) pts.emplace_back(px(p.a), py(p.b));
        svg << "  <text x=\"" << pad << "\" y=\"18\" font-size=\"12\">a-b projection</text>\n";
        svg << polyline(pts, "#1f77b4");
    }

    // panel 2: k vs a', b', c' traces
    {
        const double ox = pad, oy = h;
        const double sx = (w - 2 * pad) / static_cast<double>(std::max<std::size_t>(1, curve.size()));
        const double sy = (h - 2 * pad) / static_cast<double>(span(cmin, cmax));
        auto py = [&](std::int64_t v) { return oy + h - pad - sy * static_cast<double>(v - cmin); };
        const char* colors[3] = {"#1f77b4", "#ff7f0e", "#2ca02c"};
        svg << "  <text x=\"" << pad << "\" y=\"" << oy + 18
            << "\" font-size=\"12\">cumulative a (blue), b (orange), c (green) vs k</text>\n";
        for (int comp = 0; comp < 3; ++comp) {
            std::vector<std::pair<double, double>> pts{{ox, py(0)}};
            for (std::size_t i = 0; i < curve.size(); ++i) {
                const auto& p = curve.cumulative[i];
                const std::int64_t v = comp == 0 ? p.a : comp == 1 ? p.b : p.c;
                pts.emplace_back(ox + sx * static_cast<double>(i + 1), py(v));
            }
            svg << polyline(pts, colors[comp]);
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace seqsim
