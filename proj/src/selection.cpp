#include "halrect/selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace halrect {

double aggregate(const HyperRect& rect, const PointStore& store, Aggregation variant) {
    auto a = compute_aggregations(rect.mid_id, rect.rep_set, store);
    return a[static_cast<std::size_t>(variant)];
}

std::vector<GroupRep> group_reps(const PartitionState& state) {
    std::vector<GroupRep> reps;
    reps.reserve(state.groups().size());
    std::size_t v = static_cast<std::size_t>(state.aggregation());
    for (const auto& [key, g] : state.groups()) {
        int best = *g.by_value.begin();
        reps.push_back({key, g.delta, best, state.rect(best).agg[v]});
    }
    std::sort(reps.begin(), reps.end(), [&](const GroupRep& a, const GroupRep& b) {
        if (a.delta != b.delta) return a.delta < b.delta;
        if (a.best_f != b.best_f) return a.best_f < b.best_f;
        return a.best_rect_id < b.best_rect_id;
    });
    return reps;
}

std::vector<int> lipschitz_select(const std::vector<std::pair<double, double>>& pts,
                                  double f_min, double eps) {
    if (pts.empty()) return {};
    std::vector<int> order(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pts[a].first != pts[b].first) return pts[a].first < pts[b].first;
        if (pts[a].second != pts[b].second) return pts[a].second < pts[b].second;
        return a < b;
    });
    // one candidate per measure: the lowest value wins
    std::vector<int> uniq;
    for (int i : order)
        if (uniq.empty() || pts[uniq.back()].first != pts[i].first) uniq.push_back(i);

    // anchor: the point with the smallest value; among equal values the one
    // with the largest measure (anything left of it admits no positive slope)
    std::size_t anchor = 0;
    for (std::size_t i = 1; i < uniq.size(); ++i)
        if (pts[uniq[i]].second <= pts[uniq[anchor]].second) anchor = i;

    // lower convex hull from the anchor rightwards, collinear points kept
    std::vector<int> hull;
    auto cross = [&](int o, int a, int b) {
        double ox = pts[o].first, oy = pts[o].second;
        return (pts[a].first - ox) * (pts[b].second - oy) -
               (pts[a].second - oy) * (pts[b].first - ox);
    };
    for (std::size_t i = anchor; i < uniq.size(); ++i) {
        int p = uniq[i];
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) < 0.0)
            hull.pop_back();
        hull.push_back(p);
    }

    // slope filter: a hull point stays when the best Lipschitz guess along its
    // right edge undercuts the incumbent by the relative margin eps
    double target = f_min - eps * std::fabs(f_min);
    std::vector<int> out;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (i + 1 == hull.size()) {
            out.push_back(hull[i]);  // the largest-measure point always stays
            continue;
        }
        double slope = (pts[hull[i + 1]].second - pts[hull[i]].second) /
                       (pts[hull[i + 1]].first - pts[hull[i]].first);
        if (pts[hull[i]].second - slope * pts[hull[i]].first <= target)
            out.push_back(hull[i]);
    }
    return out;
}

namespace {

// Reduce group reps with bit-identical measure to a single candidate.
std::vector<GroupRep> reduce_equal_measure(const PartitionState& state,
                                           std::vector<GroupRep> reps) {
    std::vector<GroupRep> out;
    for (auto& r : reps) {
        if (!out.empty() && out.back().delta == r.delta) {
            GroupRep& prev = out.back();
            bool take = r.best_f < prev.best_f ||
                        (r.best_f == prev.best_f &&
                         more_promising(state.rect(r.best_rect_id), r.best_rect_id,
                                        state.rect(prev.best_rect_id), prev.best_rect_id));
            if (take) prev = std::move(r);
        } else {
            out.push_back(std::move(r));
        }
    }
    return out;
}

void finish(SelectionOutcome& o, const PartitionState& state) {
    std::sort(o.selected.begin(), o.selected.end(), [&](int a, int b) {
        double da = state.rect(a).delta, db = state.rect(b).delta;
        if (da != db) return da > db;
        return a < b;
    });
    o.selected.erase(std::unique(o.selected.begin(), o.selected.end()), o.selected.end());
    std::vector<GroupRep> diag = group_reps(state);
    std::reverse(diag.begin(), diag.end());
    o.diagnostics = std::move(diag);
}

}  // namespace

SelectionOutcome poh_lipschitz(const PartitionState& state, double eps) {
    SelectionOutcome o;
    o.scheme = SelectionScheme::Lipschitz;
    auto reps = reduce_equal_measure(state, group_reps(state));
    std::vector<std::pair<double, double>> pts;
    pts.reserve(reps.size());
    for (const auto& r : reps) pts.emplace_back(r.delta, r.best_f);
    for (int i : lipschitz_select(pts, state.f_min, eps))
        o.selected.push_back(reps[i].best_rect_id);
    finish(o, state);
    return o;
}

double delta_limit(int n, int multiplier) {
    return std::sqrt(static_cast<double>(n)) * std::exp2(-multiplier);
}

SelectionOutcome poh_aggressive(const PartitionState& state, double limit) {
    SelectionOutcome o;
    o.scheme = SelectionScheme::ImprovedAggressive;
    auto reps = group_reps(state);
    for (const auto& r : reps)
        if (r.delta >= limit) o.selected.push_back(r.best_rect_id);
    if (o.selected.empty() && !reps.empty())
        o.selected.push_back(reps.back().best_rect_id);  // largest measure survives
    finish(o, state);
    return o;
}

SelectionOutcome poh_pareto_gl(const PartitionState& state) {
    SelectionOutcome o;
    o.scheme = SelectionScheme::ParetoGL;
    std::size_t v = static_cast<std::size_t>(state.aggregation());

    struct Cand {
        double delta;
        double value;
        int id;
    };
    std::vector<Cand> by_f, by_d;
    for (const auto& [key, g] : state.groups()) {
        int bf = *g.by_value.begin();
        by_f.push_back({g.delta, state.rect(bf).agg[v], bf});
        int bd = *g.by_dist.begin();
        double dd = dist2(state.store.coord(state.rect(bd).mid_id), state.dist_ref());
        by_d.push_back({g.delta, dd, bd});
    }
    auto scan = [&](std::vector<Cand>& cands) {
        std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
            if (a.delta != b.delta) return a.delta > b.delta;
            if (a.value != b.value) return a.value < b.value;
            return more_promising(state.rect(a.id), a.id, state.rect(b.id), b.id);
        });
        double thr = kInf;
        for (const auto& c : cands) {
            if (c.value < thr) {
                o.selected.push_back(c.id);
                thr = c.value;
            }
        }
    };
    scan(by_f);
    scan(by_d);
    finish(o, state);
    return o;
}

int break_ties(const std::vector<int>& candidates, const PartitionState& state) {
    if (candidates.empty()) throw std::invalid_argument("break_ties: no candidates");
    int best = candidates[0];
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (more_promising(state.rect(candidates[i]), candidates[i], state.rect(best), best))
            best = candidates[i];
    return best;
}

SelectionOutcome select_poh(PartitionState& state, const SolverConfig& config) {
    switch (config.selection) {
        case SelectionScheme::Lipschitz:
            return poh_lipschitz(state, config.eps);
        case SelectionScheme::ImprovedAggressive:
            return poh_aggressive(state, delta_limit(state.dim(), config.delta_limit_multiplier));
        case SelectionScheme::ParetoGL:
            state.refresh_dist_order();
            return poh_pareto_gl(state);
    }
    throw std::logic_error("select_poh: bad scheme");
}

}  // namespace halrect
