#include "halrect/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace halrect {

int select_branching_coordinate(const HyperRect& rect, const Vec& c_mid, const Vec& c_min) {
    int n = static_cast<int>(rect.depth.size());
    int min_depth = *std::min_element(rect.depth.begin(), rect.depth.end());
    int br = -1;
    double best = -1.0;
    for (int j = 0; j < n; ++j) {
        if (rect.depth[j] != min_depth) continue;
        double d = std::fabs(c_mid[j] - c_min[j]);
        if (d > best) {  // strict: keeps the lowest index on exact ties
            best = d;
            br = j;
        }
    }
    return br;
}

std::pair<ChildGeometry, ChildGeometry> bisect(const HyperRect& rect, int br) {
    ChildGeometry left{rect.lo, rect.hi, rect.depth};
    ChildGeometry right{rect.lo, rect.hi, rect.depth};
    double mid = 0.5 * (rect.lo[br] + rect.hi[br]);
    left.hi[br] = mid;
    right.lo[br] = mid;
    ++left.depth[br];
    ++right.depth[br];
    return {std::move(left), std::move(right)};
}

std::pair<Vec, Vec> child_midpoints(const Vec& c_mid, const HyperRect& rect, int br) {
    double quarter = 0.25 * (rect.hi[br] - rect.lo[br]);
    Vec cl = c_mid;
    Vec cr = c_mid;
    cl[br] -= quarter;
    cr[br] += quarter;
    return {std::move(cl), std::move(cr)};
}

std::pair<std::vector<int>, std::vector<int>> inherit_rep_sets(
    const std::vector<int>& parent_rep, int mid_id, int br, const PointStore& store) {
    double pivot = store.coord(mid_id)[br];
    std::vector<int> left, right;
    for (int id : parent_rep) {
        double c = store.coord(id)[br];
        if (pivot >= c) left.push_back(id);
        if (pivot <= c) right.push_back(id);
    }
    return {std::move(left), std::move(right)};
}

std::pair<int, int> apply_subdivision(PartitionState& state, int rect_id,
                                      const Problem& problem, const Vec& c_min) {
    const HyperRect& parent = state.rect(rect_id);
    if (!parent.live)
        throw std::logic_error("apply_subdivision: rect " + std::to_string(rect_id) +
                               " is not live");
    const Vec c_mid = state.store.coord(parent.mid_id);
    int br = select_branching_coordinate(parent, c_mid, c_min);

    auto [geo_l, geo_r] = bisect(parent, br);
    auto [cl, cr] = child_midpoints(c_mid, parent, br);
    auto [id_l, fl] = state.evaluate(problem, cl);
    auto [id_r, fr] = state.evaluate(problem, cr);
    (void)fl;
    (void)fr;

    auto [rep_l, rep_r] = inherit_rep_sets(parent.rep_set, parent.mid_id, br, state.store);
    rep_l.push_back(id_l);
    rep_r.push_back(id_r);

    HyperRect left;
    left.lo = std::move(geo_l.lo);
    left.hi = std::move(geo_l.hi);
    left.depth = std::move(geo_l.depth);
    left.mid_id = id_l;
    left.rep_set = std::move(rep_l);

    HyperRect right;
    right.lo = std::move(geo_r.lo);
    right.hi = std::move(geo_r.hi);
    right.depth = std::move(geo_r.depth);
    right.mid_id = id_r;
    right.rep_set = std::move(rep_r);

    state.remove_rect(rect_id);
    int left_id = state.add_rect(std::move(left));
    int right_id = state.add_rect(std::move(right));
    return {left_id, right_id};
}

}  // namespace halrect
