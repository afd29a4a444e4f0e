#include "halrect/solver.hpp"

#include <cmath>

#include "halrect/partition.hpp"

namespace halrect {

double percent_error(double f, double f_star) {
    if (f_star != 0.0) return 100.0 * (f - f_star) / std::fabs(f_star);
    return 100.0 * f;
}

Solver::Solver(const Problem& problem, const SolverConfig& config)
    : problem_(problem), config_(config) {
    state_ = std::make_unique<PartitionState>(problem.n, config.aggregation);
    HyperRect root;
    root.lo.assign(problem.n, 0.0);
    root.hi.assign(problem.n, 1.0);
    root.depth.assign(problem.n, 0);
    Vec mid(problem.n, 0.5);
    auto [id, f] = state_->evaluate(problem_, mid);
    (void)f;
    root.mid_id = id;
    root.rep_set = {id};
    state_->add_rect(std::move(root));
}

double Solver::pe() const { return percent_error(state_->f_min, problem_.f_star); }

bool Solver::should_stop() const {
    if (pe() <= config_.eps_pe) return true;
    if (state_->m() >= config_.m_max) return true;
    // k counts the iteration about to run; k_max completed iterations allowed
    if (state_->k > config_.k_max) return true;
    return false;
}

void Solver::iterate(const Observer& observer) {
    SelectionOutcome outcome = select_poh(*state_, config_);
    if (observer) observer(outcome, *state_);
    // the branching rule sees one incumbent snapshot for the whole iteration
    const Vec c_min = state_->store.coord(state_->min_id);
    for (int id : outcome.selected) apply_subdivision(*state_, id, problem_, c_min);
    ++state_->k;
}

RunResult Solver::result() const {
    RunResult r;
    r.f_min = state_->f_min;
    if (state_->min_id != 0) r.x_min = to_original(state_->store.coord(state_->min_id), problem_);
    r.pe = pe();
    r.m = state_->m();
    r.k = state_->k - 1;  // completed iterations
    r.nonfinite = state_->nonfinite;
    r.solved = r.pe <= config_.eps_pe;
    r.history = state_->history;
    return r;
}

RunResult Solver::run(const Observer& observer) {
    while (!should_stop()) iterate(observer);
    return result();
}

RunResult run(const Problem& problem, const SolverConfig& config) {
    Solver s(problem, config);
    return s.run();
}

}  // namespace halrect
