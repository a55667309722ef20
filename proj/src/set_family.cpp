#include "assoc_kneser/set_family.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace assockg {

int Bits::count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
}

bool Bits::any() const {
    for (uint64_t x : w_)
        if (x) return true;
    return false;
}

bool Bits::intersects(const Bits& o) const {
    size_t m = std::min(w_.size(), o.w_.size());
    for (size_t k = 0; k < m; ++k)
        if (w_[k] & o.w_[k]) return true;
    return false;
}

int Bits::count_and(const Bits& o) const {
    int c = 0;
    size_t m = std::min(w_.size(), o.w_.size());
    for (size_t k = 0; k < m; ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
}

Bits& Bits::operator&=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
}

Bits& Bits::operator|=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
}

Bits Bits::operator&(const Bits& o) const {
    Bits r = *this;
    r &= o;
    return r;
}

int Bits::first() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

int Bits::next(int from) const {
    if (from >= nbits_) return -1;
    size_t k = from >> 6;
    uint64_t cur = w_[k] & (~uint64_t(0) << (from & 63));
    while (true) {
        if (cur) return static_cast<int>(k * 64 + std::countr_zero(cur));
        if (++k >= w_.size()) return -1;
        cur = w_[k];
    }
}

void Bits::for_each(const std::function<void(int)>& fn) const {
    for (size_t k = 0; k < w_.size(); ++k) {
        uint64_t cur = w_[k];
        while (cur) {
            fn(static_cast<int>(k * 64 + std::countr_zero(cur)));
            cur &= cur - 1;
        }
    }
}

std::vector<int> Bits::to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int b) { out.push_back(b); });
    return out;
}

uint64_t Bits::hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint64_t x : w_) {
        h ^= x;
        h *= 0x100000001b3ull;
    }
    return h;
}

void SetFamily::validate() const {
    std::unordered_set<uint64_t> seen;
    for (const Bits& m : members) {
        if (m.size() != ground_size)
            throw std::invalid_argument("family member has wrong ground size");
        if (!seen.insert(m.hash()).second) {
            // Hash collision or true duplicate; confirm by scan.
            int dup = 0;
            for (const Bits& o : members)
                if (o == m) ++dup;
            if (dup > 1) throw std::invalid_argument("family members must be distinct");
        }
    }
    if (!labels.empty() && labels.size() != members.size())
        throw std::invalid_argument("label count mismatch");
}

SetFamily k_subsets_family(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    SetFamily fam;
    fam.ground_size = n;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        Bits m(n);
        std::string label;
        for (int v : comb) {
            m.set(v);
            label += (label.empty() ? "{" : ",") + std::to_string(v + 1);
        }
        fam.members.push_back(m);
        fam.labels.push_back(label + "}");
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return fam;
}

}  // namespace assockg
