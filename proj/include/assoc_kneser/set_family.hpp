#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace assockg {

/// Dynamically sized bitset used for family members and adjacency rows.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    void set(int b) { w_[b >> 6] |= uint64_t(1) << (b & 63); }
    void reset(int b) { w_[b >> 6] &= ~(uint64_t(1) << (b & 63)); }
    bool test(int b) const { return (w_[b >> 6] >> (b & 63)) & 1; }

    int count() const;
    bool any() const;
    bool intersects(const Bits& o) const;
    int count_and(const Bits& o) const;

    Bits& operator&=(const Bits& o);
    Bits& operator|=(const Bits& o);
    Bits operator&(const Bits& o) const;

    /// Index of the lowest set bit, or -1.
    int first() const;
    /// Index of the lowest set bit >= from, or -1.
    int next(int from) const;

    void for_each(const std::function<void(int)>& fn) const;
    std::vector<int> to_indices() const;

    bool operator==(const Bits& o) const = default;
    uint64_t hash() const;

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

/// A finite set system over ground set [0, ground_size): the vertex set of
/// the Kneser graphs and hypergraphs built from it.
struct SetFamily {
    int ground_size = 0;
    std::vector<Bits> members;
    std::vector<std::string> labels;  // optional, empty or one per member

    int size() const { return static_cast<int>(members.size()); }

    /// Throws if members are not distinct or sized inconsistently.
    void validate() const;
};

/// All k-element subsets of [n], in lexicographic order (the classical
/// Kneser family; (5, 2) gives the Petersen graph).
SetFamily k_subsets_family(int n, int k);

}  // namespace assockg
