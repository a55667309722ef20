#include "assoc_kneser/polygon.hpp"

#include <bit>
#include <stdexcept>

namespace assockg {

bool is_diagonal(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) return false;
    int d = (j - i) % n;
    if (d < 0) d += n;
    return d != 1 && d != n - 1;
}

int diagonal_count(int n) {
    if (n < 3) throw std::invalid_argument("polygon size must be at least 3");
    return n * (n - 3) / 2;
}

std::vector<Diagonal> all_diagonals(int n) {
    diagonal_count(n);  // validates n
    std::vector<Diagonal> out;
    out.reserve(diagonal_count(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!(i == 1 && j == n)) out.emplace_back(i, j);
    return out;
}

int diagonal_index(int n, const Diagonal& d) {
    if (!is_diagonal(n, d.i, d.j))
        throw std::invalid_argument("not a diagonal of the n-gon");
    // Diagonals with first endpoint a: j in [a+2, n], except {1, n}.
    // Count of entries with first endpoint < d.i, then the offset within row i.
    int idx = 0;
    for (int a = 1; a < d.i; ++a) idx += (a == 1) ? n - 3 : n - a - 1;
    return idx + (d.j - (d.i + 2));
}

Diagonal diagonal_at(int n, int index) {
    int idx = index;
    for (int a = 1; a <= n - 2; ++a) {
        int row = (a == 1) ? n - 3 : n - a - 1;
        if (idx < row) return Diagonal(a, a + 2 + idx);
        idx -= row;
    }
    throw std::out_of_range("diagonal index out of range");
}

bool crosses(const Diagonal& a, const Diagonal& b) {
    return (a.i < b.i && b.i < a.j && a.j < b.j) ||
           (b.i < a.i && a.i < b.j && b.j < a.j);
}

DiagonalSet::DiagonalSet(int n) : n_(n), nbits_(diagonal_count(n)) {
    words_.assign((nbits_ + 63) / 64, 0);
}

void DiagonalSet::set(int bit) { words_[bit >> 6] |= uint64_t(1) << (bit & 63); }

void DiagonalSet::reset(int bit) { words_[bit >> 6] &= ~(uint64_t(1) << (bit & 63)); }

bool DiagonalSet::test(int bit) const {
    return (words_[bit >> 6] >> (bit & 63)) & 1;
}

int DiagonalSet::count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool DiagonalSet::empty() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

bool DiagonalSet::intersects(const DiagonalSet& other) const {
    for (size_t k = 0; k < words_.size(); ++k)
        if (words_[k] & other.words_[k]) return true;
    return false;
}

bool DiagonalSet::contains(const DiagonalSet& other) const {
    for (size_t k = 0; k < words_.size(); ++k)
        if (other.words_[k] & ~words_[k]) return false;
    return true;
}

std::vector<Diagonal> DiagonalSet::to_diagonals() const {
    std::vector<Diagonal> out;
    out.reserve(count());
    for (int b = 0; b < nbits_; ++b)
        if (test(b)) out.push_back(diagonal_at(n_, b));
    return out;
}

bool DiagonalSet::operator<(const DiagonalSet& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    // Lexicographic on the sorted diagonal lists: at the first differing bit
    // index, the set containing that (earlier) diagonal sorts first.
    for (int b = 0; b < nbits_; ++b) {
        bool x = test(b), y = other.test(b);
        if (x != y) return x;
    }
    return false;
}

uint64_t DiagonalSet::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(n_);
    for (uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace assockg
