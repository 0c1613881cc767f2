#pragma once

#include <cstdint>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

/// Points of PG(dim-1, q) given by coordinate vectors.
struct PointSet {
    FieldPtr field;
    std::size_t dim = 0;
    std::vector<Word> points;

    std::size_t size() const { return points.size(); }
    /// The points as the columns of a dim x size() matrix.
    Matrix as_columns() const;
};

/// True when no point is zero and no two points are scalar multiples.
bool points_distinct(const PointSet& ps);

/// {(0,0,1,0)} u {(x, y, x^2 + xy + a y^2, 1)} with the smallest a making x^2 + x + a
/// rootless. BadParameters for q <= 2.
PointSet elliptic_quadric(std::uint64_t q);
/// {(0,0,1,0)} u {(x, y, x^s + xy + y^(s+2), 1)}, s = 2^(e+1), for q = 2^(2e+1), e >= 1.
/// WrongFieldForm otherwise.
PointSet tits_ovoid(std::uint64_t q);
/// q^2 + 1 points of PG(3, q), no three linearly dependent.
bool is_ovoid(const PointSet& ps);
/// The points as generator columns; NotAnOvoid unless is_ovoid(ps).
LinearCode ovoid_code(const PointSet& ps);

/// Denniston maximal arc {(x, y, 1) : x^2 + xy + c y^2 in H} of size hq + h - q, with c the
/// smallest element of absolute trace 1 and H the additive subgroup of encodings below h.
/// Requires q = 2^m, m >= 3, h = 2^i, 2 <= i < m; BadParameters otherwise.
PointSet denniston_arc(std::uint64_t q, std::uint64_t h);
/// hq + h - q distinct points of PG(2, q) meeting every line in 0 or h points.
bool is_maximal_arc(const PointSet& ps, std::uint64_t h);
/// The degree h is read off the size; NotMaximalArc unless the set is a maximal arc.
LinearCode arc_code(const PointSet& ps);

}  // namespace lrc
