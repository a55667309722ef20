#include "assoc_kneser/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace assockg {

void export_dimacs(const KneserGraph& g, std::ostream& out) {
    out << "p edge " << g.n() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.adj[u].next(u + 1); v >= 0; v = g.adj[u].next(v + 1))
            out << "e " << u + 1 << " " << v + 1 << "\n";
    if (!out) throw std::runtime_error("error writing DIMACS stream");
}

void export_dimacs(const KneserGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    export_dimacs(g, out);
}

std::vector<Bits> import_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long edges = -1, seen = 0;
    std::vector<Bits> adj;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            ls >> fmt >> n >> edges;
            if (!ls || fmt != "edge" || n < 0)
                throw std::runtime_error("malformed DIMACS problem line");
            adj.assign(n, Bits(n));
        } else if (tag == "e") {
            int u, v;
            ls >> u >> v;
            if (!ls || n < 0 || u < 1 || v < 1 || u > n || v > n)
                throw std::runtime_error("malformed DIMACS edge line");
            adj[u - 1].set(v - 1);
            adj[v - 1].set(u - 1);
            ++seen;
        }
    }
    if (n < 0) throw std::runtime_error("DIMACS stream has no problem line");
    if (edges >= 0 && seen != edges)
        throw std::runtime_error("DIMACS edge count mismatch");
    return adj;
}

}  // namespace assockg
