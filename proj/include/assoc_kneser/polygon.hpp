#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace assockg {

/// A chord {i, j} of a convex n-gon with 1 <= i < j <= n that is not a
/// polygon side. Vertex labels are always 1-based.
struct Diagonal {
    int i = 0;
    int j = 0;

    Diagonal() = default;
    Diagonal(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

    auto operator<=>(const Diagonal&) const = default;
};

/// True iff {i, j} is a diagonal of the n-gon (i.e. i != j and the two
/// labels are not adjacent modulo n).
bool is_diagonal(int n, int i, int j);

/// n(n-3)/2, the size of Diag_n. Throws for n < 3.
int diagonal_count(int n);

/// All diagonals of the n-gon in lexicographic (i, j) order. This order is
/// canonical: it fixes the bit indexing of DiagonalSet and every file format.
std::vector<Diagonal> all_diagonals(int n);

/// Position of d in the canonical order (O(1) arithmetic).
int diagonal_index(int n, const Diagonal& d);

/// Inverse of diagonal_index.
Diagonal diagonal_at(int n, int index);

/// Strict interleaving test: true iff the open chords cross, i.e.
/// a.i < b.i < a.j < b.j or b.i < a.i < b.j < a.j. Shared endpoints never
/// cross.
bool crosses(const Diagonal& a, const Diagonal& b);

/// Fixed-size bitmask over the canonical ordering of Diag_n.
class DiagonalSet {
public:
    DiagonalSet() = default;
    explicit DiagonalSet(int n);

    int n() const { return n_; }
    int capacity() const { return nbits_; }

    void set(int bit);
    void set(const Diagonal& d) { set(diagonal_index(n_, d)); }
    void reset(int bit);
    bool test(int bit) const;
    bool test(const Diagonal& d) const { return test(diagonal_index(n_, d)); }

    int count() const;
    bool empty() const;
    bool intersects(const DiagonalSet& other) const;
    bool contains(const DiagonalSet& other) const;

    std::vector<Diagonal> to_diagonals() const;

    bool operator==(const DiagonalSet& other) const = default;

    /// Strict weak order (by n, then words); gives deterministic sorting.
    bool operator<(const DiagonalSet& other) const;

    uint64_t hash() const;

private:
    int n_ = 0;
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

/// Cyclic successor/predecessor on vertex labels [1, n].
inline int cyc_next(int v, int n) { return v == n ? 1 : v + 1; }
inline int cyc_prev(int v, int n) { return v == 1 ? n : v - 1; }

/// Maps any integer (possibly negative) into the label range [1, n].
inline int cyc_label(long long v, int n) {
    long long m = (v - 1) % n;
    if (m < 0) m += n;
    return static_cast<int>(m + 1);
}

}  // namespace assockg
