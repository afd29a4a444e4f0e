#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "halrect/bench.hpp"
#include "halrect/problems.hpp"

using namespace halrect;

TEST_CASE("variant labels round-trip") {
    CHECK(Variant::all().size() == 12);
    for (const auto& v : Variant::all()) {
        Variant w = Variant::parse(v.label());
        CHECK(w.selection == v.selection);
        CHECK(w.aggregation == v.aggregation);
    }
    CHECK(Variant::parse("gl-13d").label() == "gl-13d");
    CHECK_THROWS_AS(Variant::parse("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(Variant::parse("gl-13e"), std::invalid_argument);
}

TEST_CASE("sweep configs are parsed from key=value lines") {
    std::istringstream in(
        "# comment\n"
        "variants = gl-13d, lipschitz-13a\n"
        "problems = Branin:2, Sphere:5\n"
        "rho = 0, 0.05\n"
        "eps_pe = 0.1\n"
        "m_max = 5000\n"
        "timings = 0\n");
    SweepConfig cfg = parse_sweep_config(in);
    REQUIRE(cfg.variants.size() == 2);
    CHECK(cfg.variants[0].label() == "gl-13d");
    REQUIRE(cfg.problems.size() == 2);
    CHECK(cfg.problems[1] == std::pair<std::string, int>{"Sphere", 5});
    CHECK(cfg.rhos == std::vector<double>{0.0, 0.05});
    CHECK(cfg.eps_pe == 0.1);
    CHECK(cfg.m_max == 5000);
    CHECK_FALSE(cfg.timings);

    std::istringstream bad("frobnicate = 7\n");
    CHECK_THROWS_AS(parse_sweep_config(bad), std::invalid_argument);
    std::istringstream unknown("problems = NoSuch:2\n");
    CHECK_THROWS_AS(parse_sweep_config(unknown), std::out_of_range);

    std::istringstream filtered("problems = all\nnmax = 2\n");
    SweepConfig small = parse_sweep_config(filtered);
    CHECK(small.variants.size() == 12);
    for (const auto& [name, n] : small.problems) CHECK(n <= 2);
    CHECK_FALSE(small.problems.empty());
}

TEST_CASE("budget grid spans six decades, 25 points per decade") {
    auto b = default_budget_grid();
    REQUIRE(b.size() == 126);
    CHECK(b.front() == doctest::Approx(10.0));
    CHECK(b.back() == doctest::Approx(1e6));
    for (std::size_t i = 1; i < b.size(); ++i) {
        CHECK(b[i] > b[i - 1]);
        CHECK(b[i] / b[i - 1] == doctest::Approx(std::pow(10.0, 0.04)).epsilon(1e-12));
    }
}

namespace {

std::vector<SweepRecord> toy_records() {
    // one variant, three runs: two solved, one exhausted at the budget
    SweepRecord a{"Sphere", 2, "gl-13d", 0.0, true, 200, 0.001, 10, 0.0};
    SweepRecord b{"Branin", 2, "gl-13d", 0.0, true, 1000, 0.002, 20, 0.0};
    SweepRecord c{"Bukin6", 2, "gl-13d", 0.0, false, 1000000, 5.0, 900, 0.0};
    return {a, b, c};
}

}  // namespace

TEST_CASE("operational characteristics count solved runs within each budget") {
    auto recs = toy_records();
    auto pts = operational_characteristics(recs, {10.0, 500.0, 2000.0, 1e6});
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].proportion == 0.0);
    CHECK(pts[1].proportion == doctest::Approx(1.0 / 3.0));
    CHECK(pts[2].proportion == doctest::Approx(2.0 / 3.0));
    CHECK(pts[3].proportion == doctest::Approx(2.0 / 3.0));  // the failed run never counts
    for (std::size_t i = 1; i < pts.size(); ++i)
        CHECK(pts[i].proportion >= pts[i - 1].proportion);
    CHECK_THROWS_AS(operational_characteristics({}, {10.0}), std::invalid_argument);
}

TEST_CASE("summaries report failures and budget-inclusive averages") {
    auto rows = summarize(toy_records());
    REQUIRE_FALSE(rows.empty());
    const SummaryRow* all = nullptr;
    for (const auto& r : rows)
        if (r.subset == "all") all = &r;
    REQUIRE(all != nullptr);
    CHECK(all->variant == "gl-13d");
    CHECK(all->count == 3);
    CHECK(all->failures == 1);
    CHECK(all->median_m == 1000.0);
    CHECK(all->mean_m == doctest::Approx((200.0 + 1000.0 + 1e6) / 3.0));
    // subset partitions: convex + non-convex == all
    std::size_t convex = 0, nonconvex = 0;
    for (const auto& r : rows) {
        if (r.subset == "convex") convex = r.count;
        if (r.subset == "non-convex") nonconvex = r.count;
    }
    CHECK(convex + nonconvex == all->count);
}

TEST_CASE("records survive a CSV round-trip byte for byte") {
    auto recs = toy_records();
    recs[0].pe = 1.0 / 3.0;
    recs[0].seconds = 0.123456789012345678;
    std::ostringstream out;
    write_records_csv(out, recs);
    std::string text = out.str();
    CHECK(text.rfind("problem,n,variant,rho,solved,m,pe,k,seconds\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);

    std::istringstream in(text);
    auto back = read_records_csv(in);
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].problem == recs[i].problem);
        CHECK(back[i].m == recs[i].m);
        CHECK(back[i].pe == recs[i].pe);          // 17 digits round-trip exactly
        CHECK(back[i].seconds == recs[i].seconds);
        CHECK(back[i].solved == recs[i].solved);
    }
    std::ostringstream again;
    write_records_csv(again, back);
    CHECK(again.str() == text);

    std::istringstream bad("wrong,header\n");
    CHECK_THROWS_AS(read_records_csv(bad), std::invalid_argument);
}

TEST_CASE("sweeps run in canonical order and deterministically") {
    std::istringstream in(
        "variants = lipschitz-13a, gl-13d\n"
        "problems = Sphere:2, Branin:2\n"
        "m_max = 20000\n"
        "timings = 0\n");
    SweepConfig cfg = parse_sweep_config(in);

    setenv("HALRECT_THREADS", "2", 1);
    auto recs = run_sweep(cfg);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].problem == "Sphere");
    CHECK(recs[0].variant == "lipschitz-13a");
    CHECK(recs[1].variant == "gl-13d");
    CHECK(recs[2].problem == "Branin");
    for (const auto& r : recs) {
        CHECK(r.solved);
        CHECK(r.seconds == 0.0);
    }

    setenv("HALRECT_THREADS", "1", 1);
    auto recs2 = run_sweep(cfg);
    std::ostringstream a, b;
    write_records_csv(a, recs);
    write_records_csv(b, recs2);
    CHECK(a.str() == b.str());
    unsetenv("HALRECT_THREADS");
}

TEST_CASE("oc and summary CSV writers emit the documented headers") {
    std::ostringstream oc;
    write_oc_csv(oc, {{"gl-13d", 10.0, 0.5}});
    CHECK(oc.str() == "variant,budget,proportion\ngl-13d,10,0.5\n");

    std::ostringstream sm;
    write_summary_csv(sm, {{"gl-13d", "all", 3, 1, 1000.0, 333733.0}});
    CHECK(sm.str() ==
          "variant,subset,count,failures,median_m,mean_m\ngl-13d,all,3,1,1000,333733\n");
}
