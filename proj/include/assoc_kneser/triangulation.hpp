#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "assoc_kneser/polygon.hpp"

namespace assockg {

/// A triangle of the decomposition, stored as sorted vertex labels.
using Triangle = std::array<int, 3>;

/// A triangulation of the convex n-gon: exactly n-3 pairwise noncrossing
/// diagonals. Immutable after construction; the constructor validates.
class Triangulation {
public:
    Triangulation(int n, const std::vector<Diagonal>& diagonals);
    Triangulation(int n, DiagonalSet diagonals);

    int n() const { return n_; }
    const DiagonalSet& diagonals() const { return diags_; }
    std::vector<Diagonal> diagonal_list() const { return diags_.to_diagonals(); }
    bool contains(const Diagonal& d) const { return diags_.test(d); }

    /// True iff {u, v} is a polygon side or a diagonal of this triangulation.
    bool has_edge(int u, int v) const;

    bool operator==(const Triangulation& other) const {
        return diags_ == other.diags_;
    }
    bool operator<(const Triangulation& other) const {
        return diags_ < other.diags_;
    }

private:
    int n_;
    DiagonalSet diags_;
};

/// A rotation/reflection of the n-gon: v -> rotate_r(reflect^s(v)), where
/// reflect(v) = n+1-v and rotate_r(v) = v + r (labels mod n into [1, n]).
struct DihedralElement {
    int rotation = 0;   // in [0, n)
    bool reflect = false;
};

/// Group composition: apply(T, compose(h, g, n)) == apply(apply(T, g), h).
DihedralElement dihedral_compose(const DihedralElement& h,
                                 const DihedralElement& g, int n);

int dihedral_apply_vertex(int v, const DihedralElement& g, int n);
Diagonal dihedral_apply(const Diagonal& d, const DihedralElement& g, int n);
Triangulation dihedral_apply(const Triangulation& t, const DihedralElement& g);

/// All 2n elements of D_n in a fixed order (rotations first, then
/// reflections, each by increasing rotation amount).
std::vector<DihedralElement> dihedral_group(int n);

/// Visits every triangulation of the n-gon exactly once, in a deterministic
/// order (recursive apex expansion on the edge {1, n}).
void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& fn);

std::vector<Triangulation> enumerate_triangulations(int n);

/// Number of triangulations by the Catalan recurrence (independent of the
/// enumeration path): C_0 = 1, C_{m+1} = sum C_i C_{m-i}; |T_n| = C_{n-2}.
unsigned long long catalan_number(int k);

/// The n-2 triangles of the decomposition induced by T, sorted.
std::vector<Triangle> triangles_of(const Triangulation& t);

/// Ears of T: triangles {i, i+1, i+2} (labels mod n); returned as the sorted
/// list of middle vertices i+1.
std::vector<int> ears_of(const Triangulation& t);

/// The common vertex of all diagonals if T is a star, else nullopt. Ties
/// (possible only for n <= 4) resolve to the smallest label; the empty
/// triangulation of the 3-gon is a star with center 1 by convention.
std::optional<int> star_center(const Triangulation& t);

using ZTuple = std::array<int, 6>;

/// True iff the labels of `z` are distinct, follow each other around the
/// polygon (in either direction), and {z2,z3,z4}, {z2,z4,z5}, {z1,z2,z5},
/// {z1,z5,z6} are all triangles of T.
bool is_z_tuple(const Triangulation& t, const ZTuple& z);

/// Searches all cyclically ordered 6-tuples for a Z-copy; deterministic
/// first match or nullopt. None exists exactly when T is a star or (n = 6)
/// one of the two triangle-type triangulations.
std::optional<ZTuple> find_z_copy(const Triangulation& t);

/// The hexagon triangulations that play a special role throughout:
/// Z = {{1,5},{2,4},{2,5}}, Delta = {{1,3},{1,5},{3,5}} and its rotation.
Triangulation hexagon_Z();
Triangulation hexagon_Delta();
Triangulation hexagon_DeltaPrime();

/// True iff T equals Delta or Delta' (n = 6 only; false otherwise).
bool is_delta_type(const Triangulation& t);

}  // namespace assockg
