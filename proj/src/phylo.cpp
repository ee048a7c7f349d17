#include "seqsim/phylo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "seqsim/numfmt.hpp"

namespace seqsim {

std::vector<int> PhyloTree::leaves() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[static_cast<std::size_t>(i)].is_leaf()) out.push_back(i);
    return out;
}

namespace {

struct Cluster {
    int node = -1;       // index into tree.nodes
    int min_label = 0;   // smallest original label index, for tie-breaking
    std::size_t size = 1;
    double height = 0;   // UPGMA merge height
};

// Minimizing pair; exact ties go to the smallest (row, column) pair of
// original label indices.
template <typename DistFn>
std::pair<std::size_t, std::size_t> argmin_pair(const std::vector<Cluster>& active,
                                                DistFn dist) {
    double best = std::numeric_limits<double>::infinity();
    std::pair<int, int> best_key{0, 0};
    std::pair<std::size_t, std::size_t> arg{0, 1};
    for (std::size_t i = 0; i < active.size(); ++i)
        for (std::size_t j = i + 1; j < active.size(); ++j) {
            const double v = dist(i, j);
            const std::pair<int, int> key{std::min(active[i].min_label, active[j].min_label),
                                          std::max(active[i].min_label, active[j].min_label)};
            if (v < best || (v == best && key < best_key)) {
                best = v;
                best_key = key;
                arg = {i, j};
            }
        }
    return arg;
}

}  // namespace

PhyloTree upgma(const DistanceMatrix& m) {
    m.validate();
    const std::size_t n = m.size();
    if (n < 2) throw std::invalid_argument("UPGMA needs at least 2 labels");

    PhyloTree tree;
    std::vector<Cluster> active;
    for (std::size_t i = 0; i < n; ++i) {
        tree.nodes.push_back(PhyloNode{.label = m.labels[i]});
        active.push_back(Cluster{static_cast<int>(i), static_cast<int>(i), 1, 0.0});
    }
    // working distances between active clusters
    std::vector<std::vector<double>> d = m.d;

    while (active.size() > 1) {
        const auto [i, j] = argmin_pair(active, [&](std::size_t a, std::size_t b) { return d[a][b]; });
        const double merge_dist = d[i][j];
        const double height = merge_dist / 2.0;

        Cluster merged;
        merged.node = static_cast<int>(tree.nodes.size());
        merged.min_label = std::min(active[i].min_label, active[j].min_label);
        merged.size = active[i].size + active[j].size;
        merged.height = height;
        tree.nodes.push_back(PhyloNode{});
        // children ordered by smallest original label index
        const bool swap_children = active[j].min_label < active[i].min_label;
        for (std::size_t c : {swap_children ? j : i, swap_children ? i : j}) {
            PhyloNode& child = tree.nodes[static_cast<std::size_t>(active[c].node)];
            child.parent = merged.node;
            child.length = height - active[c].height;
            tree.nodes[static_cast<std::size_t>(merged.node)].children.push_back(active[c].node);
        }

        // average-linkage update
        std::vector<double> row;
        for (std::size_t k = 0; k < active.size(); ++k) {
            if (k == i || k == j) continue;
            row.push_back((static_cast<double>(active[i].size) * d[i][k] +
                           static_cast<double>(active[j].size) * d[j][k]) /
                          static_cast<double>(merged.size));
        }
        // drop j then i (j > i), append merged cluster
        for (std::size_t k = 0; k < active.size(); ++k) {
            d[k].erase(d[k].begin() + static_cast<std::ptrdiff_t>(j));
            d[k].erase(d[k].begin() + static_cast<std::ptrdiff_t>(i));
        }
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(j));
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(j));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t k = 0; k < active.size(); ++k) d[k].push_back(row[k]);
        row.push_back(0.0);
        d.push_back(std::move(row));
        active.push_back(merged);
    }
    tree.root = active[0].node;
    tree.rooted = true;
    return tree;
}

PhyloTree neighbor_joining(const DistanceMatrix& m) {
    m.validate();
    const std::size_t n = m.size();
    if (n < 3) throw std::invalid_argument("neighbor joining needs at least 3 labels");

    PhyloTree tree;
    std::vector<Cluster> active;
    for (std::size_t i = 0; i < n; ++i) {
        tree.nodes.push_back(PhyloNode{.label = m.labels[i]});
        active.push_back(Cluster{static_cast<int>(i), static_cast<int>(i), 1, 0.0});
    }
    std::vector<std::vector<double>> d = m.d;

    auto clamp = [&tree](double len) {
        if (len < 0) {
            ++tree.clamped_branches;
            return 0.0;
        }
        return len;
    };

    while (active.size() > 3) {
        const auto cnt = active.size();
        std::vector<double> r(cnt, 0.0);
        for (std::size_t i = 0; i < cnt; ++i)
            for (std::size_t j = 0; j < cnt; ++j) r[i] += d[i][j];
        const double nn = static_cast<double>(cnt);
        const auto [i, j] = argmin_pair(active, [&](std::size_t a, std::size_t b) {
            return (nn - 2.0) * d[a][b] - r[a] - r[b];
        });

        const double li = d[i][j] / 2.0 + (r[i] - r[j]) / (2.0 * (nn - 2.0));
        const double lj = d[i][j] - li;

        Cluster merged;
        merged.node = static_cast<int>(tree.nodes.size());
        merged.min_label = std::min(active[i].min_label, active[j].min_label);
        tree.nodes.push_back(PhyloNode{});
        tree.nodes[static_cast<std::size_t>(active[i].node)].parent = merged.node;
        tree.nodes[static_cast<std::size_t>(active[i].node)].length = clamp(li);
        tree.nodes[static_cast<std::size_t>(active[j].node)].parent = merged.node;
        tree.nodes[static_cast<std::size_t>(active[j].node)].length = clamp(lj);
        if (active[j].min_label < active[i].min_label)
            tree.nodes[static_cast<std::size_t>(merged.node)].children = {active[j].node,
                                                                          active[i].node};
        else
            tree.nodes[static_cast<std::size_t>(merged.node)].children = {active[i].node,
                                                                          active[j].node};

        std::vector<double> row;
        for (std::size_t k = 0; k < cnt; ++k) {
            if (k == i || k == j) continue;
            row.push_back((d[i][k] + d[j][k] - d[i][j]) / 2.0);
        }
        for (std::size_t k = 0; k < cnt; ++k) {
            d[k].erase(d[k].begin() + static_cast<std::ptrdiff_t>(j));
            d[k].erase(d[k].begin() + static_cast<std::ptrdiff_t>(i));
        }
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(j));
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(j));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t k = 0; k < active.size(); ++k) d[k].push_back(row[k]);
        row.push_back(0.0);
        d.push_back(std::move(row));
        active.push_back(merged);
    }

    // trifurcating root from the three-point formulas
    const int root = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(PhyloNode{});
    const double la = (d[0][1] + d[0][2] - d[1][2]) / 2.0;
    const double lb = (d[0][1] + d[1][2] - d[0][2]) / 2.0;
    const double lc = (d[0][2] + d[1][2] - d[0][1]) / 2.0;
    const double lens[3] = {la, lb, lc};
    std::array<std::size_t, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return active[a].min_label < active[b].min_label;
    });
    for (std::size_t k : order) {
        tree.nodes[static_cast<std::size_t>(active[k].node)].parent = root;
        tree.nodes[static_cast<std::size_t>(active[k].node)].length = clamp(lens[k]);
        tree.nodes[static_cast<std::size_t>(root)].children.push_back(active[k].node);
    }
    tree.root = root;
    tree.rooted = false;
    return tree;
}

namespace {

bool needs_quoting(const std::string& label) {
    return label.find_first_of(" \t()[]':;,") != std::string::npos;
}

std::string newick_label(const std::string& label) {
    if (!needs_quoting(label)) return label;
    std::string out = "'";
    for (char c : label) {
        out += c;
        if (c == '\'') out += '\'';
    }
    out += '\'';
    return out;
}

void write_newick(const PhyloTree& t, int node, bool is_root, std::string& out) {
    const PhyloNode& n = t.nodes[static_cast<std::size_t>(node)];
    if (!n.is_leaf()) {
        out += '(';
        for (std::size_t c = 0; c < n.children.size(); ++c) {
            if (c) out += ',';
            write_newick(t, n.children[c], false, out);
        }
        out += ')';
    }
    out += newick_label(n.label);
    if (!is_root) {
        out += ':';
        out += format_double(n.length);
    }
}

}  // namespace

std::string to_newick(const PhyloTree& t) {
    if (t.root < 0) throw std::invalid_argument("tree has no root");
    std::string out;
    write_newick(t, t.root, true, out);
    out += ';';
    return out;
}

namespace {

struct NewickParser {
    const std::string& text;
    std::size_t pos = 0;
    PhyloTree tree;

    explicit NewickParser(const std::string& s) : text(s) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) throw std::invalid_argument("unexpected end of Newick text");
        return text[pos];
    }

    std::string parse_label() {
        skip_ws();
        std::string label;
        if (pos < text.size() && text[pos] == '\'') {
            ++pos;
            while (pos < text.size()) {
                if (text[pos] == '\'') {
                    if (pos + 1 < text.size() && text[pos + 1] == '\'') {
                        label += '\'';
                        pos += 2;
                    } else {
                        ++pos;
                        break;
                    }
                } else {
                    label += text[pos++];
                }
            }
        } else {
            while (pos < text.size() &&
                   std::string("(),:;").find(text[pos]) == std::string::npos &&
                   !std::isspace(static_cast<unsigned char>(text[pos])))
                label += text[pos++];
        }
        return label;
    }

    int parse_node() {
        const int node = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(PhyloNode{});
        if (peek() == '(') {
            ++pos;
            while (true) {
                const int child = parse_node();
                tree.nodes[static_cast<std::size_t>(child)].parent = node;
                tree.nodes[static_cast<std::size_t>(node)].children.push_back(child);
                if (peek() == ',') {
                    ++pos;
                    continue;
                }
                if (peek() == ')') {
                    ++pos;
                    break;
                }
                throw std::invalid_argument("expected ',' or ')' in Newick text");
            }
        }
        tree.nodes[static_cast<std::size_t>(node)].label = parse_label();
        skip_ws();
        if (pos < text.size() && text[pos] == ':') {
            ++pos;
            skip_ws();
            std::size_t used = 0;
            tree.nodes[static_cast<std::size_t>(node)].length = std::stod(text.substr(pos), &used);
            pos += used;
        }
        return node;
    }
};

}  // namespace

PhyloTree parse_newick(const std::string& text) {
    NewickParser p(text);
    p.tree.root = p.parse_node();
    if (p.peek() != ';') throw std::invalid_argument("Newick text must end with ';'");
    p.tree.rooted =
        p.tree.nodes[static_cast<std::size_t>(p.tree.root)].children.size() <= 2;
    return p.tree;
}

DistanceMatrix leaf_path_distances(const PhyloTree& t, const std::vector<std::string>& labels) {
    std::map<std::string, int> by_label;
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
        if (t.nodes[static_cast<std::size_t>(i)].is_leaf())
            by_label[t.nodes[static_cast<std::size_t>(i)].label] = i;

    // depth of every node from the root
    std::vector<double> depth(t.nodes.size(), 0.0);
    std::vector<int> order{t.root};
    for (std::size_t q = 0; q < order.size(); ++q) {
        const int node = order[q];
        for (int c : t.nodes[static_cast<std::size_t>(node)].children) {
            depth[static_cast<std::size_t>(c)] =
                depth[static_cast<std::size_t>(node)] + t.nodes[static_cast<std::size_t>(c)].length;
            order.push_back(c);
        }
    }
    auto lca_depth = [&](int a, int b) {
        std::vector<int> pa;
        for (int x = a; x != -1; x = t.nodes[static_cast<std::size_t>(x)].parent) pa.push_back(x);
        for (int x = b; x != -1; x = t.nodes[static_cast<std::size_t>(x)].parent)
            if (std::find(pa.begin(), pa.end(), x) != pa.end())
                return depth[static_cast<std::size_t>(x)];
        throw std::invalid_argument("nodes share no ancestor");
    };

    DistanceMatrix out;
    out.labels = labels;
    const std::size_t n = labels.size();
    out.d.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto it_i = by_label.find(labels[i]);
        if (it_i == by_label.end())
            throw std::invalid_argument("label '" + labels[i] + "' not found in tree");
        for (std::size_t j = i + 1; j < n; ++j) {
            const int a = it_i->second;
            const int b = by_label.at(labels[j]);
            const double dist = depth[static_cast<std::size_t>(a)] +
                                depth[static_cast<std::size_t>(b)] - 2.0 * lca_depth(a, b);
            out.d[i][j] = out.d[j][i] = dist;
        }
    }
    return out;
}

std::string tree_svg(const PhyloTree& t) {
    const auto leaves = t.leaves();
    const double row_h = 18, pad = 20, label_w = 120, plot_w = 420;
    const double h = pad * 2 + row_h * static_cast<double>(std::max<std::size_t>(leaves.size(), 1));

    std::vector<double> depth(t.nodes.size(), 0.0), y(t.nodes.size(), 0.0);
    std::vector<int> order{t.root};
    double max_depth = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
        const int node = order[q];
        for (int c : t.nodes[static_cast<std::size_t>(node)].children) {
            depth[static_cast<std::size_t>(c)] =
                depth[static_cast<std::size_t>(node)] + t.nodes[static_cast<std::size_t>(c)].length;
            max_depth = std::max(max_depth, depth[static_cast<std::size_t>(c)]);
            order.push_back(c);
        }
    }
    if (max_depth <= 0) max_depth = 1;
    for (std::size_t i = 0; i < leaves.size(); ++i)
        y[static_cast<std::size_t>(leaves[i])] = pad + row_h * (static_cast<double>(i) + 0.5);
    // internal node y = mean of children, computed children-first
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const PhyloNode& n = t.nodes[static_cast<std::size_t>(*it)];
        if (n.is_leaf()) continue;
        double sum = 0;
        for (int c : n.children) sum += y[static_cast<std::size_t>(c)];
        y[static_cast<std::size_t>(*it)] = sum / static_cast<double>(n.children.size());
    }
    auto px = [&](double d) { return pad + plot_w * d / max_depth; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pad * 2 + plot_w + label_w
        << "\" height=\"" << h << "\">\n";
    for (int node : order) {
        const PhyloNode& n = t.nodes[static_cast<std::size_t>(node)];
        if (node != t.root) {
            const int p = n.parent;
            svg << "  <line x1=\"" << format_double(px(depth[static_cast<std::size_t>(p)]))
                << "\" y1=\"" << format_double(y[static_cast<std::size_t>(node)]) << "\" x2=\""
                << format_double(px(depth[static_cast<std::size_t>(node)])) << "\" y2=\""
                << format_double(y[static_cast<std::size_t>(node)])
                << "\" stroke=\"#000000\"/>\n";
            svg << "  <line x1=\"" << format_double(px(depth[static_cast<std::size_t>(p)]))
                << "\" y1=\"" << format_double(y[static_cast<std::size_t>(p)]) << "\" x2=\""
                << format_double(px(depth[static_cast<std::size_t>(p)])) << "\" y2=\""
                << format_double(y[static_cast<std::size_t>(node)])
                << "\" stroke=\"#000000\"/>\n";
        }
        if (n.is_leaf())
            svg << "  <text x=\"" << format_double(px(depth[static_cast<std::size_t>(node)]) + 4)
                << "\" y=\"" << format_double(y[static_cast<std::size_t>(node)] + 4)
                << "\" font-size=\"12\">" << n.label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace seqsim
