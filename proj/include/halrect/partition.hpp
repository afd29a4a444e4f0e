#pragma once

#include "halrect/core.hpp"

namespace halrect {

// Pick the coordinate to halve: among the least-halved sides, the one whose
// midpoint coordinate is farthest from the incumbent point (exact float
// comparison; all coordinates are dyadic), lowest index on ties. 0-based.
int select_branching_coordinate(const HyperRect& rect, const Vec& c_mid, const Vec& c_min);

struct ChildGeometry {
    Vec lo;
    Vec hi;
    std::vector<int> depth;
};

// Halve `rect` across coordinate br; returns (left, right) child boxes.
std::pair<ChildGeometry, ChildGeometry> bisect(const HyperRect& rect, int br);

// Midpoints of the two children: the parent midpoint shifted by a quarter of
// the parent side along br.  Exact dyadic arithmetic.
std::pair<Vec, Vec> child_midpoints(const Vec& c_mid, const HyperRect& rect, int br);

// Split the parent's representative set between the children: a point goes
// left when its br-coordinate is <= the parent midpoint's, right when >=,
// so the parent midpoint itself lands in both.  The child midpoint ids are
// appended by the caller.
std::pair<std::vector<int>, std::vector<int>> inherit_rep_sets(
    const std::vector<int>& parent_rep, int mid_id, int br, const PointStore& store);

// Subdivide live rect `rect_id`: evaluate the two child midpoints, build both
// children with inherited representative sets, retire the parent.  `c_min` is
// the incumbent snapshot used for the branching-coordinate rule.  Returns the
// two new rect ids (left, right).
std::pair<int, int> apply_subdivision(PartitionState& state, int rect_id,
                                      const Problem& problem, const Vec& c_min);

}  // namespace halrect
