#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace halrect {

using Vec = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A box-constrained test problem.  The objective is evaluated in original
// coordinates; the solver itself works on the unit cube [0,1]^n.
struct Problem {
    std::string name;
    int n = 0;
    Vec lower;
    Vec upper;
    double f_star = 0.0;
    Vec x_star;  // empty when no reference minimizer is known
    bool convex = false;
    bool multimodal = false;
    std::function<double(const Vec&)> objective;

    bool has_x_star() const { return !x_star.empty(); }
};

// Map a unit-cube point c into the problem's original domain.
Vec to_original(const Vec& c, const Problem& problem);

// Append-only store of sampled unit-cube points and their objective values.
// Ids are 1-based and never reused.
class PointStore {
public:
    int append(Vec coord, double fval);
    int size() const { return static_cast<int>(fvals_.size()); }
    const Vec& coord(int id) const { return coords_[id - 1]; }
    double fval(int id) const { return fvals_[id - 1]; }

private:
    std::vector<Vec> coords_;
    std::vector<double> fvals_;
};

enum class Aggregation { Midpoint, Minimum, Mean, MidMin };
enum class SelectionScheme { Lipschitz, ImprovedAggressive, ParetoGL };

const char* aggregation_name(Aggregation a);       // "13a".."13d" style tokens
const char* selection_name(SelectionScheme s);     // "lipschitz", "ia", "gl"
Aggregation parse_aggregation(const std::string& token);
SelectionScheme parse_selection(const std::string& token);

struct SolverConfig {
    SelectionScheme selection = SelectionScheme::Lipschitz;
    Aggregation aggregation = Aggregation::Midpoint;
    double eps = 1e-4;
    double eps_pe = 1e-2;
    std::uint64_t m_max = 1000000;
    std::uint64_t k_max = std::numeric_limits<std::uint64_t>::max();
    int delta_limit_multiplier = 50;
};

// One hyper-rectangle of the partition, kept in unit-cube coordinates.
// depth[j] counts how many times side j has been halved, so the side length
// is exactly 2^-depth[j]; all midpoint coordinates are dyadic rationals and
// may be compared with exact floating-point equality.
struct HyperRect {
    Vec lo;
    Vec hi;
    std::vector<int> depth;
    int mid_id = 0;               // point id of the rect midpoint
    std::vector<int> rep_set;     // representative sampling point ids, ascending
    std::vector<double> rep_sorted;  // their fvals, ascending (tie-break key)
    double delta = 0.0;           // diagonal measure, derived from depth
    std::array<double, 4> agg{};  // cached aggregation values, all four variants
    bool live = false;

    double volume() const;
    double side(int j) const;
};

// Diagonal measure of a rect: ||hi - lo||_2 computed from the integer depth
// vector.  Using the sorted depths makes the value bit-identical for every
// rect of the same shape class.
double measure(const HyperRect& rect);
double measure_from_key(const std::vector<int>& sorted_depths);

std::array<double, 4> compute_aggregations(int mid_id, const std::vector<int>& rep_set,
                                           const PointStore& store);

struct RunResult {
    double f_min = kInf;
    Vec x_min;          // original coordinates
    double pe = kInf;
    std::uint64_t m = 0;
    std::uint64_t k = 0;
    std::uint64_t nonfinite = 0;
    bool solved = false;
    // (evaluation count, f_min) at each strict improvement, first point included
    std::vector<std::pair<std::uint64_t, double>> history;
};

class PartitionState;

namespace detail {
// Orders rect ids by cached aggregation value, then by the promising-rect
// tie-break, then by id.  Stateful: reads through the owning state.
struct ValueOrder {
    const PartitionState* s = nullptr;
    bool operator()(int a, int b) const;
};
// Orders rect ids by midpoint distance to the state's distance reference
// point, then by the same tie-break chain.
struct DistOrder {
    const PartitionState* s = nullptr;
    bool operator()(int a, int b) const;
};
}  // namespace detail

// Shape-class bucket: every member rect has the same multiset of depths and
// hence the same measure.  Members are kept in two orders so the selection
// schemes can read each group's best candidate in O(log) time.
struct Group {
    double delta = 0.0;
    std::set<int, detail::ValueOrder> by_value;
    std::set<int, detail::DistOrder> by_dist;

    Group(double d, const PartitionState* s)
        : delta(d),
          by_value(detail::ValueOrder{s}),
          by_dist(detail::DistOrder{s}) {}
};

// Full partition bookkeeping for one run.  Not copyable or movable: the
// group orderings hold a pointer back to the state.
class PartitionState {
public:
    PartitionState(int n, Aggregation aggregation);
    PartitionState(const PartitionState&) = delete;
    PartitionState& operator=(const PartitionState&) = delete;

    int dim() const { return n_; }
    Aggregation aggregation() const { return aggregation_; }

    PointStore store;
    double f_min = kInf;
    int min_id = 0;
    std::uint64_t k = 1;
    std::uint64_t nonfinite = 0;
    std::vector<std::pair<std::uint64_t, double>> history;

    std::uint64_t m() const { return static_cast<std::uint64_t>(store.size()); }

    // Evaluate the objective at unit-cube point c, record the sample and
    // update the incumbent.  Non-finite objective values are stored as +inf.
    // Returns (point id, stored value).
    std::pair<int, double> evaluate(const Problem& problem, const Vec& c);

    // Finalizes delta / rep_sorted / cached aggregations, registers the rect
    // in its shape group and returns the new 1-based rect id.
    int add_rect(HyperRect rect);
    void remove_rect(int id);

    const HyperRect& rect(int id) const { return rects_[id - 1]; }
    int rect_count() const { return static_cast<int>(rects_.size()); }
    std::size_t live_count() const { return live_count_; }
    const std::map<std::vector<int>, Group>& groups() const { return groups_; }

    // Re-sorts the per-group distance orderings against the current incumbent
    // point.  No-op when the incumbent has not moved since the last call.
    void refresh_dist_order();
    const Vec& dist_ref() const { return dist_ref_; }

    double total_volume() const;
    std::vector<int> live_ids() const;

private:
    friend struct detail::ValueOrder;
    friend struct detail::DistOrder;

    int n_;
    Aggregation aggregation_;
    std::deque<HyperRect> rects_;
    std::map<std::vector<int>, Group> groups_;
    Vec dist_ref_;
    std::size_t live_count_ = 0;
};

// Tie-break between rects whose comparison key is otherwise equal: the rect
// whose ascending list of representative values is lexicographically smaller
// is more promising; a list that is a prefix of the other wins; final
// fallback is the smaller rect id.  Strict total order.
bool more_promising(const HyperRect& a, int id_a, const HyperRect& b, int id_b);

double dist2(const Vec& a, const Vec& b);

}  // namespace halrect
