#pragma once

#include <iosfwd>

#include "halrect/core.hpp"

namespace halrect {

// One (selection scheme, aggregation) pairing, e.g. "gl-13d".
struct Variant {
    SelectionScheme selection = SelectionScheme::Lipschitz;
    Aggregation aggregation = Aggregation::Midpoint;

    std::string label() const;
    static Variant parse(const std::string& label);
    static std::vector<Variant> all();  // all 12 pairings, scheme-major order
};

struct SweepConfig {
    std::vector<Variant> variants;
    std::vector<std::pair<std::string, int>> problems;
    std::vector<double> rhos = {0.0};  // 0 means the unperturbed domain
    double eps = 1e-4;
    double eps_pe = 1e-2;
    std::uint64_t m_max = 1000000;
    bool timings = true;  // false zeroes the seconds column (deterministic output)
};

struct SweepRecord {
    std::string problem;
    int n = 0;
    std::string variant;
    double rho = 0.0;
    bool solved = false;
    std::uint64_t m = 0;
    double pe = 0.0;
    std::uint64_t k = 0;
    double seconds = 0.0;
};

// Line-oriented key=value configuration; '#' starts a comment.
SweepConfig parse_sweep_config(std::istream& in);

// Runs every (problem, variant, rho) combination.  Worker threads are capped
// by the HALRECT_THREADS environment variable; records come back in the
// canonical (problem, variant, rho) input order regardless of scheduling.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

struct CurvePoint {
    std::string variant;
    double budget = 0.0;
    double proportion = 0.0;
};

// log-spaced budgets, 25 per decade, 1e1 .. 1e6 inclusive
std::vector<double> default_budget_grid();

// Fraction of a variant's runs solved within each budget.
std::vector<CurvePoint> operational_characteristics(const std::vector<SweepRecord>& records,
                                                    const std::vector<double>& budgets);

struct SummaryRow {
    std::string variant;
    std::string subset;
    std::size_t count = 0;
    std::size_t failures = 0;
    double median_m = 0.0;
    double mean_m = 0.0;
};

// Per-variant aggregates over the standard problem subsets (all, by
// dimension, by convexity, by modality).
std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records);

void write_records_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_records_csv(std::istream& in);
void write_oc_csv(std::ostream& out, const std::vector<CurvePoint>& points);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

// 17-significant-digit shortest-faithful formatting used by every CSV.
std::string format_double(double v);

}  // namespace halrect
