#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "signed_spectra/graph.hpp"

namespace signed_spectra {

/// Negative edges form one complete bipartite block on r U-vertices and
/// s V-vertices.
struct BicliquePattern {
    int r = 0;
    int s = 0;
};

/// Disjoint negative bicliques with per-part sizes (r_i, s_i).
struct BicliqueUnionPattern {
    std::vector<std::pair<int, int>> parts;
};

/// Negative edges form the path on 2r vertices, alternating U,V from u_1.
struct PathEvenPattern {
    int r = 0;
};

/// Negative path on 2r+1 vertices with both pendant vertices in U.
struct PathOddUPattern {
    int r = 0;
};

/// Negative path on 2r+1 vertices with both pendant vertices in V
/// (alternation V,U,V,...,V, so r U-vertices and r+1 V-vertices are used).
struct PathOddVPattern {
    int r = 0;
};

/// Negative edges induce a regular bipartite graph H on k+k vertices, given
/// by its 2k x 2k adjacency table. Vertices 1..k sit on the U side and
/// k+1..2k on the V side.
struct RegularPattern {
    int k = 0;
    std::vector<std::vector<int>> h_adj;
};

/// Explicit sign table; no structure assumed.
struct ArbitraryPattern {
    std::vector<std::vector<int>> signs;
};

using NegativePattern = std::variant<BicliquePattern, BicliqueUnionPattern, PathEvenPattern,
                                     PathOddUPattern, PathOddVPattern, RegularPattern,
                                     ArbitraryPattern>;

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

/// Validates a regular-pattern adjacency table (symmetric 0/1, bipartite
/// across the k|k split, constant row sums) and returns the common degree.
inline int regular_degree(int k, const std::vector<std::vector<int>>& h_adj) {
    if (k < 1) throw std::invalid_argument("regular pattern needs k >= 1");
    const int n = 2 * k;
    if (int(h_adj.size()) != n) throw std::invalid_argument("h_adj must be 2k x 2k");
    for (const auto& row : h_adj)
        if (int(row.size()) != n) throw std::invalid_argument("h_adj must be 2k x 2k");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = h_adj[i][j];
            if (v != 0 && v != 1) throw std::invalid_argument("h_adj entries must be 0 or 1");
            if (v != h_adj[j][i]) throw std::invalid_argument("h_adj must be symmetric");
            if (v != 0 && (i < k) == (j < k))
                throw std::invalid_argument("h_adj must be bipartite across the k|k split");
        }
    int degree = 0;
    for (int j = 0; j < n; ++j) degree += h_adj[0][j];
    for (int i = 1; i < n; ++i) {
        int d = 0;
        for (int j = 0; j < n; ++j) d += h_adj[i][j];
        if (d != degree) throw std::invalid_argument("h_adj must be regular");
    }
    return degree;
}

struct PathShape {
    int u_count = 0;
    int v_count = 0;
    std::vector<std::pair<int, int>> edges;  // 0-based (U index, V index)
};

/// Vertex footprint and edge set of a path pattern; throws for non-paths.
inline PathShape path_shape(const NegativePattern& pattern) {
    PathShape shape;
    if (const auto* pe = std::get_if<PathEvenPattern>(&pattern)) {
        const int r = pe->r;
        if (r < 1) throw std::invalid_argument("path patterns need r >= 1");
        shape.u_count = r;
        shape.v_count = r;
        for (int i = 0; i < r; ++i) shape.edges.emplace_back(i, i);
        for (int i = 0; i + 1 < r; ++i) shape.edges.emplace_back(i + 1, i);
    } else if (const auto* pu = std::get_if<PathOddUPattern>(&pattern)) {
        const int r = pu->r;
        if (r < 1) throw std::invalid_argument("path patterns need r >= 1");
        shape.u_count = r + 1;
        shape.v_count = r;
        for (int i = 0; i < r; ++i) {
            shape.edges.emplace_back(i, i);
            shape.edges.emplace_back(i + 1, i);
        }
    } else if (const auto* pv = std::get_if<PathOddVPattern>(&pattern)) {
        const int r = pv->r;
        if (r < 1) throw std::invalid_argument("path patterns need r >= 1");
        shape.u_count = r;
        shape.v_count = r + 1;
        for (int i = 0; i < r; ++i) {
            shape.edges.emplace_back(i, i);
            shape.edges.emplace_back(i, i + 1);
        }
    } else {
        throw std::invalid_argument("pattern is not a path");
    }
    return shape;
}

inline std::string pattern_name(const NegativePattern& pattern) {
    return std::visit(
        detail::overloaded{[](const BicliquePattern&) { return std::string("biclique"); },
                           [](const BicliqueUnionPattern&) { return std::string("bicliques"); },
                           [](const PathEvenPattern&) { return std::string("path-even"); },
                           [](const PathOddUPattern&) { return std::string("path-odd-u"); },
                           [](const PathOddVPattern&) { return std::string("path-odd-v"); },
                           [](const RegularPattern&) { return std::string("regular"); },
                           [](const ArbitraryPattern&) { return std::string("arbitrary"); }},
        pattern);
}

/// Short parameter summary, e.g. "r=2;s=3" for CSV output.
inline std::string pattern_params(const NegativePattern& pattern) {
    std::ostringstream os;
    std::visit(detail::overloaded{
                   [&](const BicliquePattern& b) { os << "r=" << b.r << ";s=" << b.s; },
                   [&](const BicliqueUnionPattern& u) {
                       os << "parts=";
                       for (std::size_t i = 0; i < u.parts.size(); ++i) {
                           if (i) os << ",";
                           os << u.parts[i].first << ":" << u.parts[i].second;
                       }
                   },
                   [&](const PathEvenPattern& pp) { os << "r=" << pp.r; },
                   [&](const PathOddUPattern& pp) { os << "r=" << pp.r; },
                   [&](const PathOddVPattern& pp) { os << "r=" << pp.r; },
                   [&](const RegularPattern& rp) { os << "k=" << rp.k; },
                   [&](const ArbitraryPattern&) {}},
               pattern);
    return os.str();
}

inline bool has_closed_form(const NegativePattern& pattern) {
    return !std::holds_alternative<ArbitraryPattern>(pattern);
}

/// Builds the graph whose negative edges are exactly the pattern's edges,
/// placed on the lowest-index vertices of each side; all other edges are
/// positive.
inline SignedBipartiteGraph build_from_pattern(int p, int q, const NegativePattern& pattern) {
    if (p < 1 || q < 1) throw std::invalid_argument("part sizes must be at least 1");
    if (p > q) throw std::invalid_argument("patterns are placed relative to p <= q");
    std::vector<std::vector<int>> rows(std::size_t(p), std::vector<int>(std::size_t(q), 1));

    std::visit(detail::overloaded{
                   [&](const BicliquePattern& b) {
                       if (b.r < 1 || b.s < 1 || b.r > p || b.s > q)
                           throw std::invalid_argument("biclique needs 1 <= r <= p and 1 <= s <= q");
                       for (int i = 0; i < b.r; ++i)
                           for (int j = 0; j < b.s; ++j) rows[std::size_t(i)][std::size_t(j)] = -1;
                   },
                   [&](const BicliqueUnionPattern& u) {
                       if (u.parts.empty()) throw std::invalid_argument("biclique union needs at least one part");
                       int ro = 0, co = 0;
                       for (const auto& [ri, si] : u.parts) {
                           if (ri < 1 || si < 1)
                               throw std::invalid_argument("biclique parts must be positive");
                           if (ro + ri > p || co + si > q)
                               throw std::invalid_argument("biclique parts exceed the bipartition");
                           for (int i = 0; i < ri; ++i)
                               for (int j = 0; j < si; ++j)
                                   rows[std::size_t(ro + i)][std::size_t(co + j)] = -1;
                           ro += ri;
                           co += si;
                       }
                   },
                   [&](const PathEvenPattern&) {
                       const auto shape = path_shape(pattern);
                       if (shape.u_count > p || shape.v_count > q)
                           throw std::invalid_argument("path does not fit in the bipartition");
                       for (const auto& [i, j] : shape.edges) rows[std::size_t(i)][std::size_t(j)] = -1;
                   },
                   [&](const PathOddUPattern&) {
                       const auto shape = path_shape(pattern);
                       if (shape.u_count > p || shape.v_count > q)
                           throw std::invalid_argument("path does not fit in the bipartition");
                       for (const auto& [i, j] : shape.edges) rows[std::size_t(i)][std::size_t(j)] = -1;
                   },
                   [&](const PathOddVPattern&) {
                       const auto shape = path_shape(pattern);
                       if (shape.u_count > p || shape.v_count > q)
                           throw std::invalid_argument("path does not fit in the bipartition");
                       for (const auto& [i, j] : shape.edges) rows[std::size_t(i)][std::size_t(j)] = -1;
                   },
                   [&](const RegularPattern& rp) {
                       regular_degree(rp.k, rp.h_adj);
                       if (rp.k > p || rp.k > q)
                           throw std::invalid_argument("regular pattern needs k <= p and k <= q");
                       for (int i = 0; i < rp.k; ++i)
                           for (int j = 0; j < rp.k; ++j)
                               if (rp.h_adj[std::size_t(i)][std::size_t(rp.k + j)] == 1)
                                   rows[std::size_t(i)][std::size_t(j)] = -1;
                   },
                   [&](const ArbitraryPattern& a) {
                       if (int(a.signs.size()) != p)
                           throw std::invalid_argument("arbitrary sign table must have p rows");
                       for (const auto& row : a.signs)
                           if (int(row.size()) != q)
                               throw std::invalid_argument("arbitrary sign table rows must have q entries");
                       rows = a.signs;
                   }},
               pattern);
    return SignedBipartiteGraph(p, q, rows);
}

/// Expected minimal negative cover (rows, cols) of a pattern instance.
inline std::pair<int, int> pattern_footprint(const NegativePattern& pattern) {
    return std::visit(
        detail::overloaded{
            [](const BicliquePattern& b) { return std::pair<int, int>{b.r, b.s}; },
            [](const BicliqueUnionPattern& u) {
                int r = 0, s = 0;
                for (const auto& [ri, si] : u.parts) {
                    r += ri;
                    s += si;
                }
                return std::pair<int, int>{r, s};
            },
            [](const PathEvenPattern& pp) { return std::pair<int, int>{pp.r, pp.r}; },
            [](const PathOddUPattern& pp) { return std::pair<int, int>{pp.r + 1, pp.r}; },
            [](const PathOddVPattern& pp) { return std::pair<int, int>{pp.r, pp.r + 1}; },
            [](const RegularPattern& rp) {
                const int degree = regular_degree(rp.k, rp.h_adj);
                return degree > 0 ? std::pair<int, int>{rp.k, rp.k} : std::pair<int, int>{0, 0};
            },
            [](const ArbitraryPattern& a) {
                int r = 0, s = 0;
                if (a.signs.empty()) return std::pair<int, int>{0, 0};
                for (const auto& row : a.signs)
                    for (int v : row)
                        if (v < 0) {
                            ++r;
                            break;
                        }
                for (std::size_t j = 0; j < a.signs.front().size(); ++j)
                    for (const auto& row : a.signs)
                        if (row[j] < 0) {
                            ++s;
                            break;
                        }
                return std::pair<int, int>{r, s};
            }},
        pattern);
}

inline nlohmann::ordered_json pattern_to_json(const NegativePattern& pattern) {
    nlohmann::ordered_json j;
    j["name"] = pattern_name(pattern);
    std::visit(detail::overloaded{
                   [&](const BicliquePattern& b) {
                       j["r"] = b.r;
                       j["s"] = b.s;
                   },
                   [&](const BicliqueUnionPattern& u) {
                       auto arr = nlohmann::ordered_json::array();
                       for (const auto& [ri, si] : u.parts) arr.push_back({ri, si});
                       j["parts"] = std::move(arr);
                   },
                   [&](const PathEvenPattern& pp) { j["r"] = pp.r; },
                   [&](const PathOddUPattern& pp) { j["r"] = pp.r; },
                   [&](const PathOddVPattern& pp) { j["r"] = pp.r; },
                   [&](const RegularPattern& rp) {
                       j["k"] = rp.k;
                       j["degree"] = regular_degree(rp.k, rp.h_adj);
                   },
                   [&](const ArbitraryPattern&) {}},
               pattern);
    return j;
}

/// Reads a regular-pattern graph from a plain-text edge list, one "u v" pair
/// per line on vertex labels 1..2k (labels 1..k form the U side). Lines that
/// are empty or start with '#' are skipped. Bipartiteness and regularity are
/// validated.
inline RegularPattern read_h_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int max_label = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        int u = 0, v = 0;
        if (!(ls >> u >> v)) throw std::invalid_argument("edge list lines must be 'u v'");
        std::string rest;
        if (ls >> rest) throw std::invalid_argument("edge list lines must be 'u v'");
        if (u < 1 || v < 1) throw std::invalid_argument("edge list labels must be >= 1");
        if (u == v) throw std::invalid_argument("edge list must not contain loops");
        edges.emplace_back(u, v);
        max_label = std::max(max_label, std::max(u, v));
    }
    if (edges.empty()) throw std::invalid_argument("edge list is empty");
    if (max_label % 2 != 0)
        throw std::invalid_argument("edge list labels must cover 1..2k for some k");
    const int k = max_label / 2;
    std::vector<std::vector<int>> h(std::size_t(2 * k), std::vector<int>(std::size_t(2 * k), 0));
    for (const auto& [u, v] : edges) {
        h[std::size_t(u - 1)][std::size_t(v - 1)] = 1;
        h[std::size_t(v - 1)][std::size_t(u - 1)] = 1;
    }
    RegularPattern rp{k, std::move(h)};
    regular_degree(rp.k, rp.h_adj);
    return rp;
}

}  // namespace signed_spectra
