#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "halrect/bench.hpp"
#include "halrect/problems.hpp"
#include "halrect/solver.hpp"

namespace {

using namespace halrect;

void print_result(const Problem& p, const SolverConfig& cfg, const RunResult& r) {
    std::cout << "problem   " << p.name << " (n=" << p.n << ")\n";
    std::cout << "variant   " << selection_name(cfg.selection) << "-"
              << aggregation_name(cfg.aggregation) << "\n";
    std::cout << "f_min     " << format_double(r.f_min) << "\n";
    std::cout << "x_min    ";
    for (double v : r.x_min) std::cout << " " << format_double(v);
    std::cout << "\n";
    std::cout << "pe        " << format_double(r.pe) << "\n";
    std::cout << "solved    " << (r.solved ? "yes" : "no") << "\n";
    std::cout << "evals     " << r.m << "\n";
    std::cout << "iters     " << r.k << "\n";
    if (r.nonfinite > 0) std::cout << "nonfinite " << r.nonfinite << "\n";
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    return parse_sweep_config(in);
}

void write_outputs(const std::string& out_dir, const std::vector<SweepRecord>& records) {
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream out(out_dir + "/results.csv", std::ios::binary);
        write_records_csv(out, records);
    }
    {
        std::ofstream out(out_dir + "/oc.csv", std::ios::binary);
        write_oc_csv(out, operational_characteristics(records, default_budget_grid()));
    }
    {
        std::ofstream out(out_dir + "/summary.csv", std::ios::binary);
        write_summary_csv(out, summarize(records));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"halving hyper-rectangle global optimizer"};
    app.require_subcommand(1);

    // solve
    std::string problem_name, selection = "lipschitz", agg = "13a";
    int n = 2;
    double eps = 1e-4, eps_pe = 1e-2, rho = 0.0;
    std::uint64_t m_max = 1000000;
    std::uint64_t k_max = std::numeric_limits<std::uint64_t>::max();
    auto* solve = app.add_subcommand("solve", "run one problem");
    solve->add_option("--problem", problem_name, "catalog problem name")->required();
    solve->add_option("--n", n, "dimension");
    solve->add_option("--selection", selection, "lipschitz|ia|gl");
    solve->add_option("--agg", agg, "13a|13b|13c|13d");
    solve->add_option("--eps", eps, "selection margin");
    solve->add_option("--eps-pe", eps_pe, "stop at this percent error");
    solve->add_option("--m-max", m_max, "evaluation budget");
    solve->add_option("--k-max", k_max, "iteration budget");
    solve->add_option("--rho", rho, "domain perturbation factor");

    // sweep
    std::string config_path, out_dir;
    auto* sweep = app.add_subcommand("sweep", "run a benchmark sweep");
    sweep->add_option("--config", config_path, "key=value config file")->required();
    sweep->add_option("--out", out_dir, "output directory")->required();

    // perturb-sweep
    std::string rho_list;
    auto* psweep = app.add_subcommand("perturb-sweep", "sweep over perturbed domains");
    psweep->add_option("--config", config_path, "key=value config file")->required();
    psweep->add_option("--out", out_dir, "output directory")->required();
    psweep->add_option("--rho", rho_list, "comma-separated perturbation factors")->required();

    // oc
    std::string in_csv, out_csv;
    auto* oc = app.add_subcommand("oc", "operational characteristics from results");
    oc->add_option("--in", in_csv, "results.csv path")->required();
    oc->add_option("--out", out_csv, "oc.csv path")->required();

    // manifest
    std::string manifest_out;
    auto* manifest = app.add_subcommand("manifest", "print the problem catalog");
    manifest->add_option("--out", manifest_out, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            Problem p = lookup(problem_name, n);
            if (rho != 0.0) p = perturb(p, rho);
            SolverConfig cfg;
            cfg.selection = parse_selection(selection);
            cfg.aggregation = parse_aggregation(agg);
            cfg.eps = eps;
            cfg.eps_pe = eps_pe;
            cfg.m_max = m_max;
            cfg.k_max = k_max;
            print_result(p, cfg, run(p, cfg));
        } else if (sweep->parsed()) {
            write_outputs(out_dir, run_sweep(load_config(config_path)));
        } else if (psweep->parsed()) {
            SweepConfig cfg = load_config(config_path);
            cfg.rhos.clear();
            std::stringstream ss(rho_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.rhos.push_back(std::stod(tok));
            write_outputs(out_dir, run_sweep(cfg));
        } else if (oc->parsed()) {
            std::ifstream in(in_csv);
            if (!in) throw std::runtime_error("cannot open " + in_csv);
            auto records = read_records_csv(in);
            std::ofstream out(out_csv, std::ios::binary);
            write_oc_csv(out, operational_characteristics(records, default_budget_grid()));
        } else if (manifest->parsed()) {
            if (manifest_out.empty()) {
                write_manifest(std::cout);
            } else {
                std::ofstream out(manifest_out, std::ios::binary);
                write_manifest(out);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
