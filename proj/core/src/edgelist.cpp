#include "idpoly/edgelist.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "idpoly/errors.hpp"

namespace idpoly {

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> loops;
    long long seen = 0;
    int header_line = 0;

    auto is_blank = [](const std::string& s) {
        return s.find_first_not_of(" \t\r") == std::string::npos;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("malformed header, expected \"n m\"", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("malformed header, trailing content", lineno);
            header_line = lineno;
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("expected \"u v\"", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing content after \"u v\"", lineno);
        if (u < 0 || u >= n) throw ParseError("vertex " + std::to_string(u) + " out of range", lineno);
        if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", lineno);
        ++seen;
        if (seen > m) throw ParseError("more than m = " + std::to_string(m) + " data lines", lineno);
        if (u == v) {
            if (std::find(loops.begin(), loops.end(), static_cast<int>(u)) != loops.end())
                throw ParseError("duplicate loop " + std::to_string(u), lineno);
            loops.push_back(static_cast<int>(u));
        } else {
            auto p = std::make_pair(static_cast<int>(std::min(u, v)),
                                    static_cast<int>(std::max(u, v)));
            if (std::find(edges.begin(), edges.end(), p) != edges.end())
                throw ParseError("duplicate edge {" + std::to_string(p.first) + "," +
                                     std::to_string(p.second) + "}",
                                 lineno);
            edges.push_back(p);
        }
    }
    if (n < 0) throw ParseError("missing header \"n m\"", lineno == 0 ? 1 : lineno);
    if (seen != m)
        throw ParseError("expected m = " + std::to_string(m) + " data lines, got " +
                             std::to_string(seen),
                         header_line);
    return Graph(static_cast<int>(n), std::move(edges), std::move(loops));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() + g.loops().size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    for (int v : g.loops()) os << v << ' ' << v << '\n';
    return os.str();
}

} // namespace idpoly
