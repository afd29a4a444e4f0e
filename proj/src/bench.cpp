#include "halrect/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "halrect/problems.hpp"
#include "halrect/solver.hpp"

namespace halrect {

std::string Variant::label() const {
    return std::string(selection_name(selection)) + "-" + aggregation_name(aggregation);
}

Variant Variant::parse(const std::string& label) {
    auto dash = label.rfind('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("bad variant '" + label + "', expected e.g. gl-13d");
    return {parse_selection(label.substr(0, dash)), parse_aggregation(label.substr(dash + 1))};
}

std::vector<Variant> Variant::all() {
    std::vector<Variant> v;
    for (auto s : {SelectionScheme::Lipschitz, SelectionScheme::ImprovedAggressive,
                   SelectionScheme::ParetoGL})
        for (auto a : {Aggregation::Midpoint, Aggregation::Minimum, Aggregation::Mean,
                       Aggregation::MidMin})
            v.push_back({s, a});
    return v;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    cfg.variants.clear();
    std::vector<std::string> problem_tokens;
    int nmin = 1, nmax = 1000;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("sweep config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "variants") {
            if (value == "all") {
                cfg.variants = Variant::all();
            } else {
                for (const auto& t : split(value, ','))
                    cfg.variants.push_back(Variant::parse(trim(t)));
            }
        } else if (key == "problems") {
            for (const auto& t : split(value, ',')) problem_tokens.push_back(trim(t));
        } else if (key == "nmin") {
            nmin = std::stoi(value);
        } else if (key == "nmax") {
            nmax = std::stoi(value);
        } else if (key == "rho") {
            cfg.rhos.clear();
            for (const auto& t : split(value, ',')) cfg.rhos.push_back(std::stod(trim(t)));
        } else if (key == "eps") {
            cfg.eps = std::stod(value);
        } else if (key == "eps_pe") {
            cfg.eps_pe = std::stod(value);
        } else if (key == "m_max") {
            cfg.m_max = std::stoull(value);
        } else if (key == "timings") {
            cfg.timings = value != "0" && value != "false";
        } else {
            throw std::invalid_argument("sweep config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    if (cfg.variants.empty()) cfg.variants = Variant::all();
    if (problem_tokens.empty()) problem_tokens.push_back("all");
    for (const auto& t : problem_tokens) {
        if (t == "all") {
            for (const auto& [name, n] : catalog_entries())
                if (n >= nmin && n <= nmax) cfg.problems.emplace_back(name, n);
        } else {
            auto colon = t.rfind(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("bad problem token '" + t + "', expected Name:n");
            cfg.problems.emplace_back(t.substr(0, colon), std::stoi(t.substr(colon + 1)));
        }
    }
    for (const auto& [name, n] : cfg.problems) lookup(name, n);  // validate early
    return cfg;
}

namespace {

int worker_count(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("HALRECT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = static_cast<unsigned>(v);
    }
    return static_cast<int>(std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    struct Job {
        std::string name;
        int n;
        Variant variant;
        double rho;
    };
    std::vector<Job> jobs;
    for (const auto& [name, n] : config.problems)
        for (const auto& v : config.variants)
            for (double rho : config.rhos) jobs.push_back({name, n, v, rho});

    std::vector<SweepRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& j = jobs[i];
            Problem p = lookup(j.name, j.n);
            if (j.rho != 0.0) p = perturb(p, j.rho);
            SolverConfig sc;
            sc.selection = j.variant.selection;
            sc.aggregation = j.variant.aggregation;
            sc.eps = config.eps;
            sc.eps_pe = config.eps_pe;
            sc.m_max = config.m_max;
            auto t0 = std::chrono::steady_clock::now();
            RunResult r = run(p, sc);
            auto t1 = std::chrono::steady_clock::now();
            SweepRecord& rec = records[i];
            rec.problem = j.name;
            rec.n = j.n;
            rec.variant = j.variant.label();
            rec.rho = j.rho;
            rec.solved = r.solved;
            rec.m = r.m;
            rec.pe = r.pe;
            rec.k = r.k;
            rec.seconds =
                config.timings ? std::chrono::duration<double>(t1 - t0).count() : 0.0;
        }
    };
    int workers = worker_count(jobs.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return records;
}

std::vector<double> default_budget_grid() {
    std::vector<double> b;
    for (int j = 0; j <= 125; ++j) b.push_back(std::pow(10.0, 1.0 + j / 25.0));
    return b;
}

std::vector<CurvePoint> operational_characteristics(const std::vector<SweepRecord>& records,
                                                    const std::vector<double>& budgets) {
    if (records.empty())
        throw std::invalid_argument("operational_characteristics: no records");
    std::vector<std::string> variants;
    for (const auto& r : records)
        if (std::find(variants.begin(), variants.end(), r.variant) == variants.end())
            variants.push_back(r.variant);
    std::vector<CurvePoint> out;
    for (const auto& v : variants) {
        std::size_t total = 0;
        std::vector<std::uint64_t> solved_m;
        for (const auto& r : records) {
            if (r.variant != v) continue;
            ++total;
            if (r.solved) solved_m.push_back(r.m);
        }
        for (double b : budgets) {
            std::size_t hit = 0;
            for (auto m : solved_m)
                if (static_cast<double>(m) <= b) ++hit;
            out.push_back({v, b, static_cast<double>(hit) / static_cast<double>(total)});
        }
    }
    return out;
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records) {
    struct Subset {
        const char* name;
        std::function<bool(const Problem&)> pred;
    };
    const std::vector<Subset> subsets = {
        {"all", [](const Problem&) { return true; }},
        {"n<=4", [](const Problem& p) { return p.n <= 4; }},
        {"n>4", [](const Problem& p) { return p.n > 4; }},
        {"convex", [](const Problem& p) { return p.convex; }},
        {"non-convex", [](const Problem& p) { return !p.convex; }},
        {"uni-modal", [](const Problem& p) { return !p.multimodal; }},
        {"multi-modal", [](const Problem& p) { return p.multimodal; }},
    };
    std::vector<std::string> variants;
    for (const auto& r : records)
        if (std::find(variants.begin(), variants.end(), r.variant) == variants.end())
            variants.push_back(r.variant);
    std::vector<SummaryRow> rows;
    for (const auto& v : variants) {
        for (const auto& s : subsets) {
            SummaryRow row;
            row.variant = v;
            row.subset = s.name;
            std::vector<double> ms;
            for (const auto& r : records) {
                if (r.variant != v) continue;
                Problem p = lookup(r.problem, r.n);
                if (!s.pred(p)) continue;
                ++row.count;
                if (!r.solved) ++row.failures;
                ms.push_back(static_cast<double>(r.m));
            }
            if (ms.empty()) continue;
            row.median_m = median(ms);
            double sum = 0.0;
            for (double m : ms) sum += m;
            row.mean_m = sum / static_cast<double>(ms.size());
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_records_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << "problem,n,variant,rho,solved,m,pe,k,seconds\n";
    for (const auto& r : records) {
        out << r.problem << ',' << r.n << ',' << r.variant << ',' << format_double(r.rho)
            << ',' << (r.solved ? 1 : 0) << ',' << r.m << ',' << format_double(r.pe) << ','
            << r.k << ',' << format_double(r.seconds) << '\n';
    }
}

std::vector<SweepRecord> read_records_csv(std::istream& in) {
    std::vector<SweepRecord> records;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("records csv: empty input");
    if (trim(line) != "problem,n,variant,rho,solved,m,pe,k,seconds")
        throw std::invalid_argument("records csv: unexpected header '" + line + "'");
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 9)
            throw std::invalid_argument("records csv line " + std::to_string(lineno) +
                                        ": expected 9 fields");
        SweepRecord r;
        r.problem = f[0];
        r.n = std::stoi(f[1]);
        r.variant = f[2];
        r.rho = std::stod(f[3]);
        r.solved = f[4] == "1";
        r.m = std::stoull(f[5]);
        r.pe = std::stod(f[6]);
        r.k = std::stoull(f[7]);
        r.seconds = std::stod(f[8]);
        records.push_back(std::move(r));
    }
    return records;
}

void write_oc_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
    out << "variant,budget,proportion\n";
    for (const auto& p : points)
        out << p.variant << ',' << format_double(p.budget) << ','
            << format_double(p.proportion) << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "variant,subset,count,failures,median_m,mean_m\n";
    for (const auto& r : rows)
        out << r.variant << ',' << r.subset << ',' << r.count << ',' << r.failures << ','
            << format_double(r.median_m) << ',' << format_double(r.mean_m) << '\n';
}

}  // namespace halrect
