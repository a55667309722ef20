#include "assoc_kneser/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace assockg {

KneserHypergraph build_kneser_hypergraph(const SetFamily& family, int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    family.validate();
    KneserHypergraph hg;
    hg.family = family;
    hg.r = r;
    const int n = family.size();
    hg.disjointness.assign(n, Bits(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!family.members[u].intersects(family.members[v])) {
                hg.disjointness[u].set(v);
                hg.disjointness[v].set(u);
            }
    return hg;
}

namespace {

bool clique_search(const std::vector<Bits>& adj, const Bits& sub, int m,
                   int min_vertex, std::vector<int>* witness) {
    if (m == 0) return true;
    Bits cand = sub;
    for (int v = cand.next(min_vertex); v >= 0; v = cand.next(v + 1)) {
        if (witness) witness->push_back(v);
        if (clique_search(adj, sub & adj[v], m - 1, v + 1, witness)) return true;
        if (witness) witness->pop_back();
    }
    return false;
}

}  // namespace

bool exists_clique(const std::vector<Bits>& adj, const Bits& sub, int m,
                   std::vector<int>* witness) {
    if (m <= 0) return true;
    if (sub.count() < m) return false;
    return clique_search(adj, sub, m, 0, witness);
}

HyperVerifyResult verify_hypergraph_coloring(const KneserHypergraph& hg,
                                             const Coloring& coloring) {
    if (static_cast<int>(coloring.color.size()) != hg.n())
        throw std::invalid_argument("coloring is not total on the vertex set");
    std::vector<Bits> classes(coloring.palette + 1, Bits(hg.n()));
    for (int v = 0; v < hg.n(); ++v) {
        int c = coloring.color[v];
        if (c < 1 || c > coloring.palette)
            throw std::invalid_argument("color out of palette range");
        classes[c].set(v);
    }
    for (int c = 1; c <= coloring.palette; ++c) {
        std::vector<int> edge;
        if (exists_clique(hg.disjointness, classes[c], hg.r, &edge))
            return {false, edge};
    }
    return {true, std::nullopt};
}

namespace {

using Clock = std::chrono::steady_clock;

// Complete k-colorability decision for the "no monochromatic r-clique"
// constraint. For r = 3 the per-vertex allowed masks are maintained
// incrementally (color c is forbidden for w exactly when class c already
// holds a disjoint pair both disjoint from w); for r > 3 feasibility is
// checked at assignment time.
struct HyperKSolver {
    const std::vector<Bits>& adj;
    int n, r, k;
    bool has_deadline = false;
    Clock::time_point deadline;
    bool timed_out = false;
    long long nodes = 0;

    std::vector<int> color;
    std::vector<uint64_t> allowed;
    std::vector<Bits> classes;
    std::vector<int> order_rank;  // static branching rank
    int uncolored;
    int max_used = 0;

    HyperKSolver(const std::vector<Bits>& a, int rr, int kk, double timeout)
        : adj(a), n(static_cast<int>(a.size())), r(rr), k(kk) {
        if (k > 62) throw std::invalid_argument("palette limit is 62 colors");
        color.assign(n, 0);
        allowed.assign(n, (uint64_t(1) << (k + 1)) - 2);
        classes.assign(k + 1, Bits(n));
        uncolored = n;
        if (timeout > 0) {
            has_deadline = true;
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(timeout));
        }
        // Branch on high-degree vertices of the disjointness graph first.
        std::vector<int> vs(n), deg(n);
        for (int v = 0; v < n; ++v) {
            vs[v] = v;
            deg[v] = adj[v].count();
        }
        std::stable_sort(vs.begin(), vs.end(),
                         [&](int a2, int b2) { return deg[a2] > deg[b2]; });
        order_rank.assign(n, 0);
        for (int i = 0; i < n; ++i) order_rank[vs[i]] = i;
    }

    bool feasible(int v, int c) const {
        if (r == 3) return (allowed[v] >> c) & 1;
        Bits s = classes[c] & adj[v];
        return !exists_clique(adj, s, r - 1);
    }

    // r = 3 only: forbid c for every uncolored w adjacent to v and to some
    // member of class c that is itself adjacent to v.
    bool propagate(int v, int c, std::vector<int>& touched) {
        Bits pairs = classes[c] & adj[v];  // v completes an edge with these
        if (!pairs.any()) return true;
        bool ok = true;
        uint64_t bit = uint64_t(1) << c;
        adj[v].for_each([&](int w) {
            if (color[w] || !(allowed[w] & bit)) return;
            if (adj[w].intersects(pairs)) {
                allowed[w] &= ~bit;
                touched.push_back(w);
                if (!allowed[w]) ok = false;
            }
        });
        return ok;
    }

    bool assign(int v, int c, std::vector<int>& touched, int& saved_max) {
        saved_max = max_used;
        color[v] = c;
        classes[c].set(v);
        --uncolored;
        max_used = std::max(max_used, c);
        if (r == 3) return propagate(v, c, touched);
        return true;
    }

    void undo(int v, int c, const std::vector<int>& touched, int saved_max) {
        color[v] = 0;
        classes[c].reset(v);
        ++uncolored;
        max_used = saved_max;
        uint64_t bit = uint64_t(1) << c;
        for (int w : touched) allowed[w] |= bit;
    }

    int pick_vertex() const {
        int best = -1, best_cnt = 65;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int cnt = (r == 3) ? std::popcount(allowed[v]) : 1;
            if (best < 0 || cnt < best_cnt ||
                (cnt == best_cnt && order_rank[v] < order_rank[best])) {
                best = v;
                best_cnt = cnt;
            }
        }
        return best;
    }

    bool solve() {
        if (uncolored == 0) return true;
        if ((++nodes & 511) == 0 && has_deadline && Clock::now() >= deadline) {
            timed_out = true;
            return false;
        }
        int v = pick_vertex();
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (!feasible(v, c)) continue;
            std::vector<int> touched;
            int saved_max = 0;
            bool ok = assign(v, c, touched, saved_max);
            if (ok && solve()) return true;
            undo(v, c, touched, saved_max);
            if (timed_out) return false;
        }
        return false;
    }
};

}  // namespace

Coloring grouped_fan_coloring(const std::vector<Triangulation>& ts, int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    const int n = ts.at(0).n();
    Coloring c;
    c.palette = std::max(1, (n - 2 + r - 2) / (r - 1));
    for (const Triangulation& t : ts)
        c.color.push_back(1 + (fan_color(t) - 1) / (r - 1));
    return c;
}

Coloring grouped_star_deleted_coloring(const std::vector<Triangulation>& ts, int r) {
    if (r < 3)
        throw std::invalid_argument("grouped star-deleted coloring requires r >= 3");
    const int n = ts.at(0).n();
    if (n < 5) throw std::invalid_argument("needs n >= 5");
    Coloring c;
    c.palette = std::max(1, (n - 3 + r - 2) / (r - 1));
    for (const Triangulation& t : ts) {
        auto center = star_center(t);
        if (center && *center == n) {
            c.color.push_back(1);  // stars lie in no hyperedge when r >= 3
        } else {
            c.color.push_back(1 + (star_deleted_color(t, n) - 1) / (r - 1));
        }
    }
    return c;
}

HyperChromaticResult hypergraph_chromatic(const SetFamily& family, int r,
                                          const SolveOptions& opt) {
    if (r == 2) {
        ChromaticCertificate cert = chromatic_number(build_kneser(family), opt);
        HyperChromaticResult res;
        res.exact = cert.exact;
        res.value = cert.value;
        res.lower_bound = cert.lower_bound;
        res.upper_bound = cert.upper_bound;
        res.coloring = cert.coloring;
        res.refutation_complete = cert.refutation_complete;
        return res;
    }
    KneserHypergraph hg = build_kneser_hypergraph(family, r);
    const int n = hg.n();
    if (n == 0) throw std::invalid_argument("empty family");
    HyperChromaticResult res;

    Bits all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    if (!exists_clique(hg.disjointness, all, r)) {
        res.exact = true;
        res.value = res.lower_bound = res.upper_bound = 1;
        res.coloring.palette = 1;
        res.coloring.color.assign(n, 1);
        return res;
    }
    res.lower_bound = 2;

    // Greedy upper bound: smallest color whose class stays r-clique-free.
    Coloring greedy;
    greedy.color.assign(n, 0);
    std::vector<Bits> classes;
    for (int v = 0; v < n; ++v) {
        int c = 1;
        while (true) {
            if (c > static_cast<int>(classes.size())) classes.emplace_back(n);
            Bits s = classes[c - 1] & hg.disjointness[v];
            if (!exists_clique(hg.disjointness, s, r - 1)) break;
            ++c;
        }
        greedy.color[v] = c;
        classes[c - 1].set(v);
        greedy.palette = std::max(greedy.palette, c);
    }
    res.coloring = greedy;
    res.upper_bound = greedy.palette;

    auto start = Clock::now();
    auto remaining = [&]() -> double {
        if (opt.timeout_seconds <= 0) return 0;
        double used = std::chrono::duration<double>(Clock::now() - start).count();
        return std::max(opt.timeout_seconds - used, 1e-3);
    };
    while (res.lower_bound < res.upper_bound) {
        int k = res.upper_bound - 1;
        HyperKSolver solver(hg.disjointness, r, k, remaining());
        bool sat = solver.solve();
        if (solver.timed_out) {
            res.exact = false;
            res.value = res.upper_bound;
            return res;
        }
        if (sat) {
            res.upper_bound = k;
            res.coloring.palette = k;
            res.coloring.color = solver.color;
        } else {
            res.lower_bound = res.upper_bound;
            res.refutation_complete = true;
        }
    }
    res.exact = true;
    res.value = res.upper_bound;
    return res;
}

}  // namespace assockg
