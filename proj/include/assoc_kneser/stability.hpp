#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "assoc_kneser/parens.hpp"
#include "assoc_kneser/triangulation.hpp"

namespace assockg {

/// The swapping relation on diagonals: d ⊏ d' iff they do not cross, or they
/// cross in the pattern i' < i < j' < j < n with j' - i > 1 (d = {i, j},
/// d' = {i', j'}). Not symmetric, and vertex n is pinned: normalize by the
/// dihedral action before calling, never after.
bool rsqa_diag(int n, const Diagonal& d, const Diagonal& d2);

/// Lift to triangulations: T ⊏ T' iff d ⊏ d' for all pairs. Reflexive.
bool rsqa_tri(const Triangulation& t, const Triangulation& t2);

/// All members of T^(3)_n (triangulations of 3-parenthesization shape),
/// generated constructively; |result| = F_{2n-5}.
std::vector<Triangulation> enumerate_T3(int n);

/// Membership test via the parenthesization bijection.
bool in_T3(const Triangulation& t);

/// Number of k-parenthesizations on n-1 symbols by the generating-function
/// recurrence f_k = t / (1 - f_{k-1}), f_0 = t, with exact integers.
mpz_class count_Tk(int n, int k);

/// Fibonacci with F_1 = F_2 = 1.
mpz_class fibonacci(int k);

/// The data recovered from T that determines its T^(3) successor:
/// a_1 = 1 < ... < a_l = n-1 are the neighbors of n (by side or diagonal),
/// and J[i] lists the j in [a_i + 2, a_{i+1} - 1] that receive a diagonal
/// from some smaller-labelled vertex in T.
struct T3Witness {
    int n = 0;
    std::vector<int> a;
    std::vector<std::vector<int>> J;  // one entry per gap, size a.size() - 1
};

T3Witness t3_witness_of(const Triangulation& t);

/// Assembles the triangulation determined by a witness (the four diagonal
/// families: {a_i, n}, {a_i, a_{i+1}}, {a_i, j} for j in J_i, and the chain
/// fill-ins {j-1, j'}).
Triangulation t3_from_witness(const T3Witness& w);

/// T' in T^(3)_n with T ⊏ T'; fixed on T^(3)_n itself.
Triangulation map_to_T3(const Triangulation& t);

/// True iff for every T in T^(3)_n the only T' with T ⊏ T' is T itself
/// (exhaustive scan over T_n).
bool check_nobetter(int n);

/// The Z-copy swap: a dihedral image T' of T whose Z-copy is normalized to
/// i1 < ... < i5 < i6 = n, and T'' = T' with {i2, i5} replaced by {i1, i4}.
/// Exists whenever T has a Z-copy.
struct ZSwap {
    DihedralElement g;   // the normalizing element
    ZTuple z;            // the normalized Z-copy inside image
    Triangulation image;    // T' = g(T)
    Triangulation swapped;  // T''
};

std::optional<ZSwap> z_swap(const Triangulation& t);

}  // namespace assockg
