#pragma once

#include <functional>
#include <memory>

#include "halrect/core.hpp"
#include "halrect/selection.hpp"

namespace halrect {

// Relative distance of f to the reference optimum, in percent.  Falls back
// to the raw value scaled to percent when the optimum is zero.
double percent_error(double f, double f_star);

// One complete run: the unit cube is seeded with its midpoint sample, then
// each iteration selects potentially optimal rects and halves them until a
// stopping rule fires.
class Solver {
public:
    using Observer =
        std::function<void(const SelectionOutcome&, const PartitionState&)>;

    Solver(const Problem& problem, const SolverConfig& config);

    const PartitionState& state() const { return *state_; }
    PartitionState& state() { return *state_; }
    const SolverConfig& config() const { return config_; }

    double pe() const;
    bool should_stop() const;

    // One pass: select, snapshot the incumbent, subdivide every selected rect.
    // The observer, when given, sees the selection before any subdivision.
    void iterate(const Observer& observer = nullptr);

    RunResult result() const;
    RunResult run(const Observer& observer = nullptr);

private:
    const Problem& problem_;
    SolverConfig config_;
    std::unique_ptr<PartitionState> state_;
};

RunResult run(const Problem& problem, const SolverConfig& config);

}  // namespace halrect
