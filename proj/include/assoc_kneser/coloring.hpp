#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "assoc_kneser/kneser.hpp"

namespace assockg {

/// A total assignment of colors 1..palette to the vertices of a graph.
struct Coloring {
    int palette = 0;
    std::vector<int> color;  // one entry per vertex, in [1, palette]
};

/// Color of T in the fan coloring: the unique i in [n-2] such that
/// {i, n-1, n} is a triangle of T.
int fan_color(const Triangulation& t);

/// Color of T in the ear coloring: the least i in [n-2] such that
/// {i, i+1, i+2} is a triangle of T (n >= 4; n = 3 maps to 1).
int ear_color(const Triangulation& t);

/// Color of T in the star-deleted coloring with the star at `center`
/// removed: after rotating center to n, the least i in [n-3] with
/// {i, i+2} in T. Throws no_color_error when T is the deleted star itself.
struct no_color_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
int star_deleted_color(const Triangulation& t, int center);

Coloring fan_coloring(const std::vector<Triangulation>& ts);
Coloring ear_coloring(const std::vector<Triangulation>& ts);
Coloring star_deleted_coloring(const std::vector<Triangulation>& ts, int center);

struct VerifyResult {
    bool proper = false;
    /// First monochromatic edge if not proper.
    std::optional<std::pair<int, int>> violation;
};

/// Checks that no edge of the graph is monochromatic. The coloring must be
/// total.
VerifyResult verify_coloring(const KneserGraph& graph, const Coloring& coloring);

}  // namespace assockg
