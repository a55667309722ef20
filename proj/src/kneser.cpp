#include "assoc_kneser/kneser.hpp"

#include <stdexcept>

namespace assockg {

long long KneserGraph::edge_count() const {
    long long deg = 0;
    for (const Bits& row : adj) deg += row.count();
    return deg / 2;
}

KneserGraph KneserGraph::without_vertices(const std::vector<int>& drop) const {
    Bits dropped(n());
    for (int v : drop) dropped.set(v);
    SetFamily fam;
    fam.ground_size = family.ground_size;
    for (int v = 0; v < n(); ++v) {
        if (dropped.test(v)) continue;
        fam.members.push_back(family.members[v]);
        if (!family.labels.empty()) fam.labels.push_back(family.labels[v]);
    }
    return build_kneser(fam);
}

std::vector<Bits> KneserGraph::complement_rows() const {
    std::vector<Bits> rows(n(), Bits(n()));
    for (int u = 0; u < n(); ++u)
        for (int v = 0; v < n(); ++v)
            if (u != v && !adj[u].test(v)) rows[u].set(v);
    return rows;
}

KneserGraph build_kneser(const SetFamily& family) {
    family.validate();
    KneserGraph g;
    g.family = family;
    const int n = family.size();
    g.adj.assign(n, Bits(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!family.members[u].intersects(family.members[v])) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
    return g;
}

SetFamily family_from_triangulations(const std::vector<Triangulation>& ts) {
    SetFamily fam;
    if (ts.empty()) throw std::invalid_argument("empty triangulation list");
    const int n = ts[0].n();
    fam.ground_size = diagonal_count(n);
    for (const Triangulation& t : ts) {
        if (t.n() != n) throw std::invalid_argument("mixed polygon sizes");
        Bits m(fam.ground_size);
        for (int b = 0; b < fam.ground_size; ++b)
            if (t.diagonals().test(b)) m.set(b);
        fam.members.push_back(m);
    }
    return fam;
}

KneserGraph kneser_of_triangulations(int n) {
    return build_kneser(family_from_triangulations(enumerate_triangulations(n)));
}

std::vector<Triangulation> zigzag_cliques(int n) {
    if (n < 4) throw std::invalid_argument("zig-zag cliques need n >= 4");
    std::vector<Triangulation> out;
    for (int i = 1; i <= n / 2; ++i) {
        // Vertex path i, i+2, i-1, i+3, i-2, ...: its first n-2 vertices
        // yield n-3 consecutive-pair diagonals.
        std::vector<int> path;
        path.push_back(i);
        for (int k = 1; static_cast<int>(path.size()) < n - 2; ++k) {
            path.push_back(cyc_label(i + 1 + k, n));
            if (static_cast<int>(path.size()) < n - 2)
                path.push_back(cyc_label(i - k, n));
        }
        std::vector<Diagonal> diags;
        for (size_t k = 0; k + 1 < path.size(); ++k)
            diags.emplace_back(path[k], path[k + 1]);
        out.emplace_back(n, diags);
    }
    return out;
}

bool cd2_witness_check(int n) {
    if (n < 4) throw std::invalid_argument("cd2 witness needs n >= 4");
    auto is_red = [&](const Diagonal& d) {
        return d.j - d.i == 2 && d.i <= n - 2;
    };
    bool ok = true;
    for_each_triangulation(n, [&](const Triangulation& t) {
        if (!ok) return;
        bool red = false, blue = false;
        for (const Diagonal& d : t.diagonal_list())
            (is_red(d) ? red : blue) = true;
        if (!red || !blue) ok = false;
    });
    return ok;
}

bool triangle_membership(const Triangulation& t, const std::vector<Triangulation>& all) {
    std::vector<const Triangulation*> candidates;
    for (const Triangulation& o : all)
        if (!o.diagonals().intersects(t.diagonals()) && !(o == t))
            candidates.push_back(&o);
    for (size_t a = 0; a < candidates.size(); ++a)
        for (size_t b = a + 1; b < candidates.size(); ++b)
            if (!candidates[a]->diagonals().intersects(candidates[b]->diagonals()))
                return true;
    return false;
}

bool triangle_membership(const Triangulation& t) {
    return triangle_membership(t, enumerate_triangulations(t.n()));
}

}  // namespace assockg
