#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "halrect/core.hpp"
#include "halrect/problems.hpp"

using namespace halrect;

TEST_CASE("to_original maps the unit cube onto the problem box") {
    Problem p = lookup("Bukin6", 2);
    Vec x = to_original({0.5, 0.5}, p);
    CHECK(x[0] == doctest::Approx(-5.0));
    CHECK(x[1] == doctest::Approx(0.0));
    CHECK(to_original({0.0, 0.0}, p) == Vec{-15.0, -3.0});
    CHECK(to_original({1.0, 1.0}, p) == Vec{5.0, 3.0});
    CHECK_THROWS_AS(to_original({0.5}, p), std::invalid_argument);
}

TEST_CASE("point store hands out dense 1-based ids") {
    PointStore s;
    CHECK(s.append({0.5, 0.5}, 1.0) == 1);
    CHECK(s.append({0.25, 0.5}, 2.0) == 2);
    CHECK(s.size() == 2);
    CHECK(s.fval(1) == 1.0);
    CHECK(s.coord(2) == Vec{0.25, 0.5});
}

TEST_CASE("measure is the diagonal length derived from halving depths") {
    HyperRect r;
    r.depth = {1, 0};
    CHECK(measure(r) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
    r.depth = {0, 0, 0, 0};
    CHECK(measure(r) == doctest::Approx(2.0).epsilon(1e-15));

    // permuting the depth vector must give the bit-identical value
    HyperRect a, b;
    a.depth = {3, 1, 2};
    b.depth = {1, 2, 3};
    CHECK(measure(a) == measure(b));
}

TEST_CASE("aggregation values: midpoint, minimum, mean and their blend") {
    PointStore s;
    int mid = s.append({0.5, 0.5}, 50.05);
    int other = s.append({0.25, 0.5}, 100.0);
    auto agg = compute_aggregations(mid, {mid, other}, s);
    CHECK(agg[0] == doctest::Approx(50.05));
    CHECK(agg[1] == doctest::Approx(50.05));
    CHECK(agg[2] == doctest::Approx(75.025));
    CHECK(agg[3] == doctest::Approx(50.05));
}

TEST_CASE("minimum aggregation never exceeds the midpoint aggregation") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uf(-100.0, 100.0);
    std::uniform_int_distribution<int> usz(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        PointStore s;
        int mid = s.append({0.5}, uf(rng));
        std::vector<int> rep{mid};
        int extra = usz(rng);
        for (int i = 0; i < extra; ++i) rep.push_back(s.append({0.5}, uf(rng)));
        auto agg = compute_aggregations(mid, rep, s);
        CHECK(agg[1] <= agg[0]);               // min includes the midpoint
        CHECK(agg[1] <= agg[2]);               // min below mean
        CHECK(agg[3] == doctest::Approx(0.5 * (agg[0] + agg[1])));
    }
}

TEST_CASE("evaluate records samples, updates the incumbent, flags non-finite values") {
    Problem p = lookup("Bukin6", 2);
    PartitionState st(2, Aggregation::Midpoint);
    auto [id1, f1] = st.evaluate(p, {0.5, 0.5});
    CHECK(id1 == 1);
    CHECK(f1 == doctest::Approx(50.05));
    CHECK(st.f_min == doctest::Approx(50.05));
    CHECK(st.min_id == 1);

    auto [id2, f2] = st.evaluate(p, {0.75, 0.5});
    CHECK(f2 == doctest::Approx(0.1));
    CHECK(st.min_id == id2);

    // ties move the incumbent to the newest point
    Problem flat;
    flat.name = "flat";
    flat.n = 1;
    flat.lower = {0.0};
    flat.upper = {1.0};
    flat.objective = [](const Vec&) { return 1.0; };
    PartitionState st2(1, Aggregation::Midpoint);
    st2.evaluate(flat, {0.5});
    st2.evaluate(flat, {0.25});
    CHECK(st2.min_id == 2);
    CHECK(st2.history.size() == 1);  // only strict improvements are logged

    Problem bad = flat;
    bad.objective = [](const Vec& x) { return x[0] < 0.3 ? std::nan("") : x[0]; };
    PartitionState st3(1, Aggregation::Midpoint);
    auto [ida, fa] = st3.evaluate(bad, {0.1});
    CHECK(fa == kInf);
    CHECK(st3.nonfinite == 1);
    auto [idb, fb] = st3.evaluate(bad, {0.5});
    CHECK(fb == doctest::Approx(0.5));
    CHECK(st3.min_id == idb);
}

TEST_CASE("promising-rect ordering is a strict total order with prefix rule") {
    HyperRect a, b;
    a.rep_sorted = {1.0, 5.0};
    b.rep_sorted = {1.0, 6.0};
    CHECK(more_promising(a, 1, b, 2));
    CHECK_FALSE(more_promising(b, 2, a, 1));

    b.rep_sorted = {1.0};  // prefix of a: the shorter list wins
    CHECK(more_promising(b, 2, a, 1));
    CHECK_FALSE(more_promising(a, 1, b, 2));

    b.rep_sorted = {1.0, 5.0};  // identical: lower id wins
    CHECK(more_promising(a, 1, b, 2));
    CHECK_FALSE(more_promising(b, 2, a, 1));
    CHECK_FALSE(more_promising(a, 1, a, 1));
}

TEST_CASE("rect registration tracks shape groups and conserves volume") {
    PartitionState st(2, Aggregation::Midpoint);
    Problem p = lookup("Bukin6", 2);
    auto [mid, f] = st.evaluate(p, {0.5, 0.5});
    HyperRect root;
    root.lo = {0.0, 0.0};
    root.hi = {1.0, 1.0};
    root.depth = {0, 0};
    root.mid_id = mid;
    root.rep_set = {mid};
    int id = st.add_rect(std::move(root));
    CHECK(id == 1);
    CHECK(st.live_count() == 1);
    CHECK(st.groups().size() == 1);
    CHECK(st.rect(1).delta == doctest::Approx(std::sqrt(2.0)));
    CHECK(st.total_volume() == doctest::Approx(1.0));

    st.remove_rect(1);
    CHECK(st.live_count() == 0);
    CHECK(st.groups().empty());
    CHECK_THROWS_AS(st.remove_rect(1), std::logic_error);
}
