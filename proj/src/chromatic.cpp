#include "assoc_kneser/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace assockg {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    bool enabled = false;
    Clock::time_point at;

    static Deadline from_seconds(double s) {
        Deadline d;
        if (s > 0) {
            d.enabled = true;
            d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(s));
        }
        return d;
    }
    bool expired() const { return enabled && Clock::now() >= at; }
};

}  // namespace

std::vector<int> degeneracy_order(const std::vector<Bits>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = adj[v].count();
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        adj[best].for_each([&](int u) {
            if (!removed[u]) --deg[u];
        });
    }
    return order;
}

Coloring greedy_coloring(const std::vector<Bits>& adj) {
    const int n = static_cast<int>(adj.size());
    Coloring c;
    c.color.assign(n, 0);
    if (n == 0) return c;
    std::vector<uint64_t> neighbor_colors(n, 0);  // bitmask of colors 1..63
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = adj[v].count();
    int colored = 0, palette = 0;
    while (colored < n) {
        // Most saturated first; ties by degree, then index.
        int best = -1, best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (c.color[v]) continue;
            int sat = std::popcount(neighbor_colors[v]);
            if (sat > best_sat ||
                (sat == best_sat && degree[v] > degree[best])) {
                best = v;
                best_sat = sat;
            }
        }
        uint64_t used = neighbor_colors[best];
        int col = 1;
        while (used & (uint64_t(1) << col)) ++col;
        if (col > 63) throw std::runtime_error("greedy coloring exceeded 63 colors");
        c.color[best] = col;
        palette = std::max(palette, col);
        adj[best].for_each([&](int u) { neighbor_colors[u] |= uint64_t(1) << col; });
        ++colored;
    }
    c.palette = palette;
    return c;
}

namespace {

// ---------------------------------------------------------------------------
// Exact maximum clique: branch and bound with greedy-coloring upper bounds
// (Tomita-style). Candidate sets are bitsets; all choices deterministic.
// ---------------------------------------------------------------------------
struct CliqueSolver {
    const std::vector<Bits>& adj;
    int n;
    Deadline deadline;
    bool timed_out = false;
    long long nodes = 0;

    std::vector<int> best;
    std::vector<int> current;

    explicit CliqueSolver(const std::vector<Bits>& a, Deadline d)
        : adj(a), n(static_cast<int>(a.size())), deadline(d) {}

    // Color the candidates greedily; emit vertices ordered by color class so
    // that color(v) bounds the clique size extendable through v.
    void color_sort(const Bits& cand, std::vector<int>& verts, std::vector<int>& bound) {
        verts.clear();
        bound.clear();
        Bits uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bits cls = uncolored;
            while (true) {
                int v = cls.first();
                if (v < 0) break;
                verts.push_back(v);
                bound.push_back(color);
                uncolored.reset(v);
                cls.reset(v);
                // Remove v's neighbors from this color class.
                for (int u = cls.next(0); u >= 0; u = cls.next(u + 1))
                    if (adj[v].test(u)) cls.reset(u);
            }
        }
    }

    void expand(Bits cand) {
        if ((++nodes & 1023) == 0 && deadline.expired()) {
            timed_out = true;
            return;
        }
        std::vector<int> verts, bound;
        color_sort(cand, verts, bound);
        for (int idx = static_cast<int>(verts.size()) - 1; idx >= 0; --idx) {
            if (timed_out) return;
            if (current.size() + bound[idx] <= best.size()) return;
            int v = verts[idx];
            current.push_back(v);
            Bits next = cand & adj[v];
            if (!next.any()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            cand.reset(v);
        }
    }
};

}  // namespace

CliqueResult max_clique(const std::vector<Bits>& adj, const SolveOptions& opt) {
    const int n = static_cast<int>(adj.size());
    CliqueResult res;
    if (n == 0) throw std::invalid_argument("empty graph");
    CliqueSolver solver(adj, Deadline::from_seconds(opt.timeout_seconds));
    Bits all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    solver.expand(all);
    res.vertices = solver.best;
    std::sort(res.vertices.begin(), res.vertices.end());
    res.lower_bound = static_cast<int>(res.vertices.size());
    if (solver.timed_out) {
        res.exact = false;
        res.upper_bound = n;
        res.value = 0;
    } else {
        res.exact = true;
        res.value = res.lower_bound;
        res.upper_bound = res.value;
    }
    return res;
}

CliqueResult clique_number(const KneserGraph& g, const SolveOptions& opt) {
    return max_clique(g.adj, opt);
}

CliqueResult independence_number(const KneserGraph& g, const SolveOptions& opt) {
    return max_clique(g.complement_rows(), opt);
}

namespace {

// ---------------------------------------------------------------------------
// Complete k-colorability decision: DSATUR branching with forward checking,
// new-color canonicalization, and optional clique seeding.
// ---------------------------------------------------------------------------
struct KColorSolver {
    const std::vector<Bits>& adj;
    int n, k;
    Deadline deadline;
    bool timed_out = false;
    long long nodes = 0;

    std::vector<int> color;         // 0 = unassigned
    std::vector<uint64_t> allowed;  // bitmask over colors 1..k
    std::vector<int> degree;
    std::vector<int> tie_rank;      // static rank (reverse degeneracy order)
    int uncolored = 0;
    int max_used = 0;

    KColorSolver(const std::vector<Bits>& a, int kk, Deadline d)
        : adj(a), n(static_cast<int>(a.size())), k(kk), deadline(d) {
        if (k > 62) throw std::invalid_argument("palette limit is 62 colors");
        color.assign(n, 0);
        uint64_t full = (k >= 1) ? ((uint64_t(1) << (k + 1)) - 2) : 0;  // bits 1..k
        allowed.assign(n, full);
        degree.resize(n);
        for (int v = 0; v < n; ++v) degree[v] = adj[v].count();
        tie_rank.assign(n, 0);
        auto order = degeneracy_order(adj);
        // Later removal in degeneracy order = likely denser core; branch there
        // first.
        for (int i = 0; i < n; ++i) tie_rank[order[i]] = i;
        uncolored = n;
    }

    // Returns false if some uncolored vertex loses all its colors.
    bool assign(int v, int c, std::vector<int>& touched) {
        color[v] = c;
        --uncolored;
        max_used = std::max(max_used, c);
        uint64_t bit = uint64_t(1) << c;
        bool ok = true;
        adj[v].for_each([&](int u) {
            if (color[u] || !(allowed[u] & bit)) return;
            allowed[u] &= ~bit;
            touched.push_back(u);
            if (!allowed[u]) ok = false;
        });
        return ok;
    }

    void undo(int v, int c, int saved_max_used, const std::vector<int>& touched) {
        color[v] = 0;
        ++uncolored;
        max_used = saved_max_used;
        uint64_t bit = uint64_t(1) << c;
        for (int u : touched) allowed[u] |= bit;
    }

    bool solve() {
        if (uncolored == 0) return true;
        if ((++nodes & 1023) == 0 && deadline.expired()) {
            timed_out = true;
            return false;
        }
        // Most saturated vertex = fewest allowed colors; ties by higher
        // degree, then higher static rank, then lower index.
        int best = -1, best_cnt = 65;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int cnt = std::popcount(allowed[v]);
            if (cnt < best_cnt ||
                (cnt == best_cnt &&
                 (degree[v] > degree[best] ||
                  (degree[v] == degree[best] && tie_rank[v] > tie_rank[best])))) {
                best = v;
                best_cnt = cnt;
            }
        }
        int limit = std::min(k, max_used + 1);
        uint64_t options = allowed[best] & ((uint64_t(1) << (limit + 1)) - 2);
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            std::vector<int> touched;
            int saved = max_used;
            bool ok = assign(best, c, touched);
            if (ok && solve()) return true;
            undo(best, c, saved, touched);
            if (timed_out) return false;
        }
        return false;
    }
};

}  // namespace

DecideResult decide_k_colorable(const std::vector<Bits>& adj, int k,
                                const std::vector<int>& seed_clique,
                                double timeout_seconds) {
    const int n = static_cast<int>(adj.size());
    DecideResult res;
    if (k <= 0) {
        res.status = n == 0 ? DecideStatus::Colorable : DecideStatus::NotColorable;
        return res;
    }
    if (static_cast<int>(seed_clique.size()) > k) {
        res.status = DecideStatus::NotColorable;
        return res;
    }
    KColorSolver solver(adj, k, Deadline::from_seconds(timeout_seconds));
    int next = 1;
    for (int v : seed_clique) {
        std::vector<int> touched;
        if (!solver.assign(v, next++, touched)) {
            res.status = DecideStatus::NotColorable;
            return res;
        }
    }
    bool sat = solver.solve();
    if (solver.timed_out) {
        res.status = DecideStatus::Timeout;
        return res;
    }
    if (!sat) {
        res.status = DecideStatus::NotColorable;
        return res;
    }
    res.status = DecideStatus::Colorable;
    res.coloring.palette = k;
    res.coloring.color = solver.color;
    return res;
}

ChromaticCertificate chromatic_number(const KneserGraph& g, const SolveOptions& opt) {
    const int n = g.n();
    if (n == 0) throw std::invalid_argument("empty graph");
    ChromaticCertificate cert;
    Deadline deadline = Deadline::from_seconds(opt.timeout_seconds);
    auto remaining = [&]() -> double {
        if (!deadline.enabled) return 0;
        double s = std::chrono::duration<double>(deadline.at - Clock::now()).count();
        return std::max(s, 1e-3);
    };

    // Lower bound: a maximum clique (exact unless the budget expires).
    SolveOptions clique_opt = opt;
    clique_opt.timeout_seconds = deadline.enabled ? remaining() / 4 : 0;
    CliqueResult cq = max_clique(g.adj, clique_opt);
    cert.clique = cq.vertices;
    cert.lower_bound = std::max(1, cq.lower_bound);

    // Upper bound: DSATUR greedy.
    Coloring greedy = greedy_coloring(g.adj);
    cert.upper_bound = std::max(1, greedy.palette);
    cert.coloring = greedy;
    if (cert.coloring.palette == 0) {  // n >= 1 with no edges
        cert.coloring.palette = 1;
        cert.coloring.color.assign(n, 1);
        cert.upper_bound = 1;
    }

    const std::vector<int> seed = opt.clique_seed ? cq.vertices : std::vector<int>{};
    while (cert.lower_bound < cert.upper_bound) {
        if (deadline.expired()) {
            cert.exact = false;
            cert.value = cert.upper_bound;
            return cert;
        }
        int k = cert.upper_bound - 1;
        DecideResult dr = decide_k_colorable(g.adj, k, seed,
                                             deadline.enabled ? remaining() : 0);
        if (dr.status == DecideStatus::Colorable) {
            cert.upper_bound = k;
            cert.coloring = dr.coloring;
        } else if (dr.status == DecideStatus::NotColorable) {
            cert.lower_bound = cert.upper_bound;
            cert.refutation_complete = true;
        } else {
            cert.exact = false;
            cert.value = cert.upper_bound;
            return cert;
        }
    }
    cert.exact = true;
    cert.value = cert.upper_bound;
    return cert;
}

}  // namespace assockg
