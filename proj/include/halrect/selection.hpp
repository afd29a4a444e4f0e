#pragma once

#include "halrect/core.hpp"

namespace halrect {

// Per-shape-group candidate: the group's measure and its most promising
// member under the run's aggregation variant.
struct GroupRep {
    std::vector<int> key;  // sorted depth vector
    double delta = 0.0;
    int best_rect_id = 0;
    double best_f = 0.0;
};

struct SelectionOutcome {
    SelectionScheme scheme = SelectionScheme::Lipschitz;
    std::vector<int> selected;        // rect ids, unique
    std::vector<GroupRep> diagnostics;  // group reps, descending delta
};

// Aggregated value of one rect under a variant (recomputed from the store;
// the cached copy on the rect must agree).
double aggregate(const HyperRect& rect, const PointStore& store, Aggregation variant);

// Winner of each shape group, ascending delta.
std::vector<GroupRep> group_reps(const PartitionState& state);

// Lower-right convex hull selection with the epsilon filter on the hull
// slopes; the largest-measure point is always retained.  Pure kernel on
// (delta, f) pairs, exposed for direct testing; returns indices into `pts`.
std::vector<int> lipschitz_select(const std::vector<std::pair<double, double>>& pts,
                                  double f_min, double eps);

SelectionOutcome poh_lipschitz(const PartitionState& state, double eps);

// Measure below which a group is ignored by the aggressive scheme: the
// measure of a rect whose every side has been halved `multiplier` times.
double delta_limit(int n, int multiplier = 50);

SelectionOutcome poh_aggressive(const PartitionState& state, double limit);

SelectionOutcome poh_pareto_gl(const PartitionState& state);

// Resolve a set of otherwise-equal candidates to a single rect id.
int break_ties(const std::vector<int>& candidates, const PartitionState& state);

// Dispatch on config.selection.  Refreshes the distance ordering first when
// the scheme needs it.
SelectionOutcome select_poh(PartitionState& state, const SolverConfig& config);

}  // namespace halrect
