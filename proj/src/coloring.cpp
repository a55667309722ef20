#include "assoc_kneser/coloring.hpp"

#include <stdexcept>

namespace assockg {

int fan_color(const Triangulation& t) {
    const int n = t.n();
    if (n == 3) return 1;
    // The triangle containing side {n-1, n} has its third vertex in [n-2].
    for (int i = 1; i <= n - 2; ++i)
        if (t.has_edge(i, n - 1) && t.has_edge(i, n)) return i;
    throw std::logic_error("no fan triangle found; triangulation is malformed");
}

int ear_color(const Triangulation& t) {
    const int n = t.n();
    if (n == 3) return 1;
    for (int i = 1; i <= n - 2; ++i)
        if (t.has_edge(i, i + 2)) return i;
    throw std::logic_error("every triangulation has an ear {i,i+1,i+2} with i <= n-2");
}

int star_deleted_color(const Triangulation& t, int center) {
    const int n = t.n();
    if (n < 5) throw std::invalid_argument("star-deleted coloring needs n >= 5");
    // Rotate so the deleted star's center becomes n.
    DihedralElement g{(n - center) % n, false};
    Triangulation r = g.rotation == 0 ? t : dihedral_apply(t, g);
    for (int i = 1; i <= n - 3; ++i)
        if (r.contains(Diagonal(i, i + 2))) return i;
    throw no_color_error("the deleted star itself has no {i,i+2} diagonal");
}

namespace {

Coloring make_coloring(const std::vector<Triangulation>& ts, int palette,
                       int (*fn)(const Triangulation&)) {
    Coloring c;
    c.palette = palette;
    c.color.reserve(ts.size());
    for (const Triangulation& t : ts) c.color.push_back(fn(t));
    return c;
}

}  // namespace

Coloring fan_coloring(const std::vector<Triangulation>& ts) {
    int n = ts.at(0).n();
    return make_coloring(ts, std::max(1, n - 2), &fan_color);
}

Coloring ear_coloring(const std::vector<Triangulation>& ts) {
    int n = ts.at(0).n();
    return make_coloring(ts, std::max(1, n - 2), &ear_color);
}

Coloring star_deleted_coloring(const std::vector<Triangulation>& ts, int center) {
    Coloring c;
    int n = ts.at(0).n();
    c.palette = n - 3;
    for (const Triangulation& t : ts) c.color.push_back(star_deleted_color(t, center));
    return c;
}

VerifyResult verify_coloring(const KneserGraph& graph, const Coloring& coloring) {
    if (static_cast<int>(coloring.color.size()) != graph.n())
        throw std::invalid_argument("coloring is not total on the vertex set");
    for (int v = 0; v < graph.n(); ++v)
        if (coloring.color[v] < 1 || coloring.color[v] > coloring.palette)
            throw std::invalid_argument("color out of palette range");
    for (int u = 0; u < graph.n(); ++u) {
        for (int v = graph.adj[u].next(u + 1); v >= 0; v = graph.adj[u].next(v + 1)) {
            if (coloring.color[u] == coloring.color[v])
                return {false, std::make_pair(u, v)};
        }
    }
    return {true, std::nullopt};
}

}  // namespace assockg
