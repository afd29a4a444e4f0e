#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "halrect/problems.hpp"
#include "halrect/solver.hpp"

using namespace halrect;

TEST_CASE("percent error is relative to the optimum, absolute when it is zero") {
    CHECK(percent_error(1.05, 1.0) == doctest::Approx(5.0));
    CHECK(percent_error(-1.9, -2.0) == doctest::Approx(5.0));
    CHECK(percent_error(0.5, 0.0) == doctest::Approx(50.0));
    CHECK(percent_error(2.0, 2.0) == 0.0);
}

TEST_CASE("a fresh run starts from the sampled unit-cube midpoint") {
    Problem p = lookup("Bukin6", 2);
    SolverConfig cfg;
    Solver s(p, cfg);
    CHECK(s.state().m() == 1);
    CHECK(s.state().k == 1);
    CHECK(s.state().live_count() == 1);
    CHECK(s.state().store.coord(1) == Vec{0.5, 0.5});
    CHECK(s.state().f_min == doctest::Approx(50.05));
    CHECK(s.state().rect(1).delta == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("a single-iteration budget halves the root across the first coordinate") {
    Problem p = lookup("Bukin6", 2);
    SolverConfig cfg;
    cfg.k_max = 1;
    RunResult r = run(p, cfg);
    CHECK(r.m == 3);
    CHECK(r.k == 1);
    Solver s(p, cfg);
    s.run();
    CHECK(s.state().store.coord(2) == Vec{0.25, 0.5});
    CHECK(s.state().store.coord(3) == Vec{0.75, 0.5});
}

TEST_CASE("stopping honors the evaluation budget") {
    Problem p = lookup("Bukin6", 2);
    SolverConfig cfg;
    cfg.m_max = 10;
    RunResult r = run(p, cfg);
    CHECK(r.m >= 10);
    CHECK(r.m < 10 + 64);  // overshoot bounded by the final iteration's batch
    CHECK_FALSE(r.solved);
}

TEST_CASE("easy convex problems are solved to the percent-error target") {
    for (const auto& v : std::vector<std::pair<SelectionScheme, Aggregation>>{
             {SelectionScheme::Lipschitz, Aggregation::Midpoint},
             {SelectionScheme::Lipschitz, Aggregation::MidMin},
             {SelectionScheme::ImprovedAggressive, Aggregation::Minimum},
             {SelectionScheme::ParetoGL, Aggregation::Mean},
             {SelectionScheme::ParetoGL, Aggregation::MidMin}}) {
        Problem p = lookup("Sphere", 2);
        SolverConfig cfg;
        cfg.selection = v.first;
        cfg.aggregation = v.second;
        RunResult r = run(p, cfg);
        INFO(selection_name(v.first), "-", aggregation_name(v.second));
        CHECK(r.solved);
        CHECK(r.pe <= cfg.eps_pe);
        CHECK(r.m < 100000);
        // minimizer reported in original coordinates, inside the box
        REQUIRE(r.x_min.size() == 2);
        for (int j = 0; j < 2; ++j) {
            CHECK(r.x_min[j] >= p.lower[j]);
            CHECK(r.x_min[j] <= p.upper[j]);
        }
    }
}

TEST_CASE("negative-optimum problems use the relative percent error") {
    Problem p = lookup("Styblinski_Tang", 2);
    SolverConfig cfg;
    cfg.selection = SelectionScheme::ParetoGL;
    cfg.aggregation = Aggregation::MidMin;
    RunResult r = run(p, cfg);
    CHECK(r.solved);
    CHECK(r.f_min <= p.f_star * (1.0 - 1e-4));  // within 0.01% of a negative optimum
}

TEST_CASE("improvement history is strictly decreasing and starts at the first sample") {
    Problem p = lookup("Rastrigin", 2);
    SolverConfig cfg;
    cfg.m_max = 2000;
    Solver s(p, cfg);
    RunResult r = s.run();
    REQUIRE_FALSE(r.history.empty());
    CHECK(r.history.front().first == 1);
    for (std::size_t i = 1; i < r.history.size(); ++i) {
        CHECK(r.history[i].second < r.history[i - 1].second);
        CHECK(r.history[i].first > r.history[i - 1].first);
    }
    CHECK(r.history.back().second == r.f_min);
}

TEST_CASE("runs are bit-for-bit deterministic") {
    for (auto scheme : {SelectionScheme::Lipschitz, SelectionScheme::ImprovedAggressive,
                        SelectionScheme::ParetoGL}) {
        Problem p = lookup("Branin", 2);
        SolverConfig cfg;
        cfg.selection = scheme;
        cfg.aggregation = Aggregation::MidMin;
        cfg.m_max = 5000;
        RunResult a = run(p, cfg);
        RunResult b = run(p, cfg);
        CHECK(a.f_min == b.f_min);
        CHECK(a.m == b.m);
        CHECK(a.k == b.k);
        CHECK(a.history == b.history);
        CHECK(a.x_min == b.x_min);
    }
}

TEST_CASE("the observer sees every selection before it is applied") {
    Problem p = lookup("Hump", 2);
    SolverConfig cfg;
    cfg.selection = SelectionScheme::ParetoGL;
    cfg.m_max = 500;
    Solver s(p, cfg);
    std::uint64_t calls = 0;
    RunResult r = s.run([&](const SelectionOutcome& o, const PartitionState& st) {
        ++calls;
        REQUIRE_FALSE(o.selected.empty());
        for (int id : o.selected) CHECK(st.rect(id).live);
    });
    CHECK(calls == r.k);
}
