#include "halrect/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace halrect {

Vec to_original(const Vec& c, const Problem& problem) {
    if (static_cast<int>(c.size()) != problem.n)
        throw std::invalid_argument("to_original: point dimension " +
                                    std::to_string(c.size()) + " != problem dimension " +
                                    std::to_string(problem.n));
    Vec x(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        x[j] = (problem.upper[j] - problem.lower[j]) * c[j] + problem.lower[j];
    return x;
}

int PointStore::append(Vec coord, double fval) {
    coords_.push_back(std::move(coord));
    fvals_.push_back(fval);
    return static_cast<int>(fvals_.size());
}

const char* aggregation_name(Aggregation a) {
    switch (a) {
        case Aggregation::Midpoint: return "13a";
        case Aggregation::Minimum: return "13b";
        case Aggregation::Mean: return "13c";
        case Aggregation::MidMin: return "13d";
    }
    throw std::logic_error("aggregation_name: bad enum");
}

const char* selection_name(SelectionScheme s) {
    switch (s) {
        case SelectionScheme::Lipschitz: return "lipschitz";
        case SelectionScheme::ImprovedAggressive: return "ia";
        case SelectionScheme::ParetoGL: return "gl";
    }
    throw std::logic_error("selection_name: bad enum");
}

Aggregation parse_aggregation(const std::string& token) {
    if (token == "13a") return Aggregation::Midpoint;
    if (token == "13b") return Aggregation::Minimum;
    if (token == "13c") return Aggregation::Mean;
    if (token == "13d") return Aggregation::MidMin;
    throw std::invalid_argument("unknown aggregation '" + token + "'");
}

SelectionScheme parse_selection(const std::string& token) {
    if (token == "lipschitz") return SelectionScheme::Lipschitz;
    if (token == "ia") return SelectionScheme::ImprovedAggressive;
    if (token == "gl") return SelectionScheme::ParetoGL;
    throw std::invalid_argument("unknown selection scheme '" + token + "'");
}

double HyperRect::volume() const {
    double v = 1.0;
    for (std::size_t j = 0; j < lo.size(); ++j) v *= hi[j] - lo[j];
    return v;
}

double HyperRect::side(int j) const { return std::exp2(-depth[j]); }

double measure_from_key(const std::vector<int>& sorted_depths) {
    double s = 0.0;
    for (int d : sorted_depths) s += std::exp2(-2.0 * d);
    return std::sqrt(s);
}

double measure(const HyperRect& rect) {
    std::vector<int> key = rect.depth;
    std::sort(key.begin(), key.end());
    return measure_from_key(key);
}

std::array<double, 4> compute_aggregations(int mid_id, const std::vector<int>& rep_set,
                                           const PointStore& store) {
    if (rep_set.empty())
        throw std::logic_error("compute_aggregations: empty representative set");
    double mid = store.fval(mid_id);
    double mn = kInf;
    double sum = 0.0;
    for (int id : rep_set) {
        double f = store.fval(id);
        mn = std::min(mn, f);
        sum += f;
    }
    double mean = sum / static_cast<double>(rep_set.size());
    return {mid, mn, mean, 0.5 * (mid + mn)};
}

bool more_promising(const HyperRect& a, int id_a, const HyperRect& b, int id_b) {
    const auto& va = a.rep_sorted;
    const auto& vb = b.rep_sorted;
    std::size_t common = std::min(va.size(), vb.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (va[i] != vb[i]) return va[i] < vb[i];
    }
    if (va.size() != vb.size()) return va.size() < vb.size();
    return id_a < id_b;
}

double dist2(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double d = a[j] - b[j];
        s += d * d;
    }
    return std::sqrt(s);
}

namespace detail {

bool ValueOrder::operator()(int a, int b) const {
    const HyperRect& ra = s->rect(a);
    const HyperRect& rb = s->rect(b);
    std::size_t v = static_cast<std::size_t>(s->aggregation());
    if (ra.agg[v] != rb.agg[v]) return ra.agg[v] < rb.agg[v];
    return more_promising(ra, a, rb, b);
}

bool DistOrder::operator()(int a, int b) const {
    const HyperRect& ra = s->rect(a);
    const HyperRect& rb = s->rect(b);
    double da = dist2(s->store.coord(ra.mid_id), s->dist_ref());
    double db = dist2(s->store.coord(rb.mid_id), s->dist_ref());
    if (da != db) return da < db;
    return more_promising(ra, a, rb, b);
}

}  // namespace detail

PartitionState::PartitionState(int n, Aggregation aggregation)
    : n_(n), aggregation_(aggregation), dist_ref_(n, 0.0) {
    if (n < 1) throw std::invalid_argument("PartitionState: dimension must be >= 1");
}

std::pair<int, double> PartitionState::evaluate(const Problem& problem, const Vec& c) {
    Vec x = to_original(c, problem);
    double f = problem.objective(x);
    if (!std::isfinite(f)) {
        f = kInf;  // keep orderings total; NaN would poison the comparators
        ++nonfinite;
    }
    int id = store.append(c, f);
    if (f < f_min) history.emplace_back(m(), f);
    if (f <= f_min) {
        f_min = f;
        min_id = id;
    }
    return {id, f};
}

int PartitionState::add_rect(HyperRect rect) {
    if (static_cast<int>(rect.lo.size()) != n_ || static_cast<int>(rect.depth.size()) != n_)
        throw std::invalid_argument("add_rect: dimension mismatch");
    for (int d : rect.depth)
        if (d > 1000) throw std::logic_error("add_rect: subdivision depth limit exceeded");

    std::vector<int> key = rect.depth;
    std::sort(key.begin(), key.end());
    rect.delta = measure_from_key(key);

    rect.rep_sorted.clear();
    rect.rep_sorted.reserve(rect.rep_set.size());
    for (int id : rect.rep_set) rect.rep_sorted.push_back(store.fval(id));
    std::sort(rect.rep_sorted.begin(), rect.rep_sorted.end());

    rect.agg = compute_aggregations(rect.mid_id, rect.rep_set, store);
    rect.live = true;

    rects_.push_back(std::move(rect));
    int id = static_cast<int>(rects_.size());
    auto it = groups_.find(key);
    if (it == groups_.end())
        it = groups_.try_emplace(std::move(key), rects_.back().delta, this).first;
    it->second.by_value.insert(id);
    it->second.by_dist.insert(id);
    ++live_count_;
    return id;
}

void PartitionState::remove_rect(int id) {
    HyperRect& r = rects_[id - 1];
    if (!r.live) throw std::logic_error("remove_rect: rect " + std::to_string(id) + " not live");
    std::vector<int> key = r.depth;
    std::sort(key.begin(), key.end());
    auto it = groups_.find(key);
    if (it == groups_.end()) throw std::logic_error("remove_rect: missing group");
    it->second.by_value.erase(id);
    it->second.by_dist.erase(id);
    if (it->second.by_value.empty()) groups_.erase(it);
    r.live = false;
    --live_count_;
}

void PartitionState::refresh_dist_order() {
    if (min_id == 0) return;
    const Vec& target = store.coord(min_id);
    if (target == dist_ref_) return;
    std::vector<std::vector<int>> members;
    members.reserve(groups_.size());
    for (auto& [key, g] : groups_) {
        members.emplace_back(g.by_dist.begin(), g.by_dist.end());
        g.by_dist.clear();
    }
    dist_ref_ = target;
    std::size_t i = 0;
    for (auto& [key, g] : groups_) {
        for (int id : members[i]) g.by_dist.insert(id);
        ++i;
    }
}

double PartitionState::total_volume() const {
    double v = 0.0;
    for (const auto& r : rects_)
        if (r.live) v += r.volume();
    return v;
}

std::vector<int> PartitionState::live_ids() const {
    std::vector<int> ids;
    ids.reserve(live_count_);
    for (int id = 1; id <= rect_count(); ++id)
        if (rects_[id - 1].live) ids.push_back(id);
    return ids;
}

}  // namespace halrect
