#include "assoc_kneser/permutohedron.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace assockg {

namespace {

void check_permutation(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of [n]");
        seen[v] = true;
    }
}

}  // namespace

PrismTriangulation perm_to_prism(const Permutation& sigma) {
    check_permutation(sigma);
    const int n = static_cast<int>(sigma.size());
    PrismTriangulation pt;
    pt.n = n;
    pt.removal_order = sigma;
    std::vector<int> current;  // V_{t-1}
    for (int i = 1; i <= n; ++i) current.push_back(i);
    for (int t = 0; t < n; ++t) {
        int v = sigma[t];
        std::vector<int> simplex = current;
        simplex.push_back(n + v);  // primed copy
        std::sort(simplex.begin(), simplex.end());
        pt.simplices.push_back(simplex);
        auto it = std::find(current.begin(), current.end(), v);
        if (it == current.end())
            throw std::invalid_argument("removal order revisits a vertex");
        *it = n + v;
    }
    return pt;
}

Permutation prism_to_perm(const PrismTriangulation& pt) {
    const int n = pt.n;
    if (static_cast<int>(pt.simplices.size()) != n)
        throw std::invalid_argument("prism triangulation must have n simplices");
    Permutation sigma;
    std::vector<bool> primed_seen(n + 1, false);
    for (int t = 0; t < n; ++t) {
        // The new primed copy in simplex t identifies the removed vertex.
        int found = 0;
        for (int v : pt.simplices[t]) {
            if (v <= n) continue;
            int orig = v - n;
            if (!primed_seen[orig]) {
                if (found) throw std::invalid_argument("ambiguous simplex chain");
                found = orig;
            }
        }
        if (!found) throw std::invalid_argument("simplex adds no primed vertex");
        primed_seen[found] = true;
        sigma.push_back(found);
    }
    check_permutation(sigma);
    // Round-trip to confirm the simplex chain itself is consistent.
    PrismTriangulation rebuilt = perm_to_prism(sigma);
    if (rebuilt.simplices != pt.simplices)
        throw std::invalid_argument("simplex chain is not a valid prism triangulation");
    return sigma;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    Permutation sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

KneserGraph perm_kneser(int n) {
    if (n < 2) throw std::invalid_argument("needs n >= 2");
    if (n > 20) throw std::invalid_argument("ground set of subsets too large");
    auto perms = all_permutations(n);
    SetFamily fam;
    fam.ground_size = (1 << n) - 2;  // nonempty proper subsets, mask - 1
    for (const Permutation& sigma : perms) {
        Bits member(fam.ground_size);
        std::string label;
        // The facets containing sigma are the prefix preimages sigma^{-1}([k]).
        int mask = 0;
        std::vector<int> inv(n + 1);
        for (int i = 1; i <= n; ++i) inv[sigma[i - 1]] = i;
        for (int k = 1; k <= n - 1; ++k) {
            mask |= 1 << (inv[k] - 1);
            member.set(mask - 1);
        }
        for (int v : sigma) label += (label.empty() ? "" : ",") + std::to_string(v);
        fam.members.push_back(member);
        fam.labels.push_back(label);
    }
    return build_kneser(fam);
}

bool perm_adjacent(const Permutation& a, const Permutation& b) {
    const int n = static_cast<int>(a.size());
    std::vector<int> inva(n + 1), invb(n + 1);
    for (int i = 1; i <= n; ++i) {
        inva[a[i - 1]] = i;
        invb[b[i - 1]] = i;
    }
    int ma = 0, mb = 0;
    for (int k = 1; k <= n - 1; ++k) {
        ma |= 1 << inva[k];
        mb |= 1 << invb[k];
        if (ma == mb) return false;
    }
    return true;
}

Coloring prefix_coloring(int n) {
    auto perms = all_permutations(n);
    Coloring c;
    c.palette = n;
    for (const Permutation& sigma : perms) {
        int pos = 0;
        for (int i = 1; i <= n; ++i)
            if (sigma[i - 1] == 1) pos = i;
        c.color.push_back(pos);
    }
    return c;
}

std::vector<std::vector<int>> cyclic_cliques(int n) {
    auto perms = all_permutations(n);
    std::map<Permutation, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    std::vector<bool> used(perms.size(), false);
    std::vector<std::vector<int>> cosets;
    for (size_t i = 0; i < perms.size(); ++i) {
        if (used[i]) continue;
        // Right coset {rho^j o sigma}: (rho^j sigma)(v) = sigma(v) + j mod n.
        std::vector<int> coset;
        for (int j = 0; j < n; ++j) {
            Permutation tau(n);
            for (int v = 0; v < n; ++v) tau[v] = (perms[i][v] - 1 + j) % n + 1;
            int idx = index.at(tau);
            coset.push_back(idx);
            used[idx] = true;
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(coset);
    }
    return cosets;
}

}  // namespace assockg
