// Benchmark and spectrum CLI for the tau-preconditioned Toeplitz solvers.
//
//   taubench solve    --example 2 --n 127 --alpha1 1.5 --alpha2 1.5 --out rows.csv
//   taubench spectrum --example custom --n 256 --alpha1 1.5 --dplus 1 --dminus 0.2 \
//                     --centers 1,-1 --eps 0.3 --out eigs.csv
//
// Exit codes: 0 success, 1 usage error, 2 solver did not converge.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tauprec/bench.hpp"

namespace {

struct Flags {
    std::string example = "1";
    std::vector<int> sizes;
    double alpha1 = 1.5, alpha2 = 1.5;
    double dplus = 1.0, dminus = 0.2, nu = 1.0;
    std::string precond = "symbol_tau";
    std::string solver;
    double tol = 1e-8;
    int maxit = 1000;
    std::uint64_t seed = 20240101;
    std::string out;
    std::string centers = "1,-1";
    double eps = 0.3;
};

// Flat key=value config file ('#' comments). Merged into argv before parsing;
// any key already present on the command line keeps the command-line value.
// List-valued keys (e.g. n) may hold comma-separated entries.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> out;
    std::vector<std::string> explicit_keys;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) throw std::runtime_error("--config needs a file path");
            path = args[++i];
            continue;
        }
        if (a.rfind("--config=", 0) == 0) {
            path = a.substr(9);
            continue;
        }
        if (a.rfind("--", 0) == 0) {
            const auto eq = a.find('=');
            explicit_keys.push_back(eq == std::string::npos ? a.substr(2) : a.substr(2, eq - 2));
        }
        out.push_back(a);
    }
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        bool overridden = false;
        for (const auto& k : explicit_keys)
            if (k == key) { overridden = true; break; }
        if (overridden) continue;
        std::stringstream vs(value);
        std::string item;
        while (std::getline(vs, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            out.push_back("--" + key);
            out.push_back(item);
        }
    }
    return out;
}

void add_common_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--example", f.example, "1|2|3|4|custom");
    cmd->add_option("--n", f.sizes, "grid size(s); square grids for the 2D examples");
    cmd->add_option("--alpha1", f.alpha1, "fractional order, axis 1");
    cmd->add_option("--alpha2", f.alpha2, "fractional order, axis 2");
    cmd->add_option("--dplus", f.dplus, "d+ (custom 1D example)");
    cmd->add_option("--dminus", f.dminus, "d- (custom 1D example)");
    cmd->add_option("--nu", f.nu, "nu = h^alpha/tau (custom 1D example)");
    cmd->add_option("--precond", f.precond,
                    "symbol_tau|natural_tau|abs_circulant|strang_circulant|none");
    cmd->add_option("--solver", f.solver, "minres|pcg (default per example)");
    cmd->add_option("--tol", f.tol, "relative residual tolerance");
    cmd->add_option("--maxit", f.maxit, "iteration cap");
    cmd->add_option("--seed", f.seed, "right-hand-side PRNG seed");
    cmd->add_option("--out", f.out, "CSV output path");
}

int parse_config(const Flags& f, bool spectrum, tauprec::RunConfig& cfg) {
    if (f.example == "custom") cfg.example = 0;
    else if (f.example == "1" || f.example == "2" || f.example == "3" || f.example == "4")
        cfg.example = f.example[0] - '0';
    else {
        std::cerr << "error: unknown example '" << f.example << "'\n";
        return 1;
    }
    cfg.sizes = f.sizes;
    if (cfg.sizes.empty()) {
        std::cerr << "error: at least one --n is required\n";
        return 1;
    }
    cfg.alpha1 = f.alpha1;
    cfg.alpha2 = f.alpha2;
    cfg.d_plus = f.dplus;
    cfg.d_minus = f.dminus;
    cfg.nu = f.nu;
    if (!tauprec::precond_from_string(f.precond, cfg.precond)) {
        std::cerr << "error: unknown preconditioner '" << f.precond << "'\n";
        return 1;
    }
    if (f.solver.empty()) {
        cfg.solver = cfg.example == 4 ? tauprec::SolverChoice::pcg : tauprec::SolverChoice::minres;
    } else if (f.solver == "minres") {
        cfg.solver = tauprec::SolverChoice::minres;
    } else if (f.solver == "pcg") {
        cfg.solver = tauprec::SolverChoice::pcg;
    } else {
        std::cerr << "error: unknown solver '" << f.solver << "'\n";
        return 1;
    }
    cfg.tol = f.tol;
    cfg.maxit = f.maxit;
    cfg.seed = f.seed;
    cfg.out_path = f.out;
    if (spectrum) {
        cfg.centers.clear();
        std::stringstream ss(f.centers);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.centers.push_back(std::stod(item));
        cfg.eps = f.eps;
    }
    return 0;
}

void print_rows(const std::vector<tauprec::ResultRow>& rows) {
    std::printf("%-8s %-7s %-7s %-6s %-6s %-16s %-7s %6s %10s %12s %12s\n", "example", "n1", "n2",
                "a1", "a2", "precond", "solver", "iters", "seconds", "relres", "err_inf");
    for (const auto& r : rows) {
        std::printf("%-8d %-7d %-7d %-6.3g %-6.3g %-16s %-7s %6d %10.3f %12.3e %12s\n", r.example,
                    r.n1, r.n2, r.alpha1, r.alpha2, r.precond.c_str(), r.solver.c_str(), r.iters,
                    r.seconds, r.relres,
                    r.err_inf ? (std::to_string(*r.err_inf).c_str()) : "-");
        if (r.mean_step_iters > 0.0)
            std::printf("         steps: first %d, max %d, mean %.1f per step\n", r.first_step_iters,
                        r.max_step_iters, r.mean_step_iters);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tau-preconditioned multilevel Toeplitz benchmark runner", "taubench"};
    app.require_subcommand(1);

    Flags fs, fp;
    CLI::App* solve = app.add_subcommand("solve", "assemble, precondition and solve");
    add_common_flags(solve, fs);
    CLI::App* spectrum = app.add_subcommand("spectrum", "dense spectrum of the preconditioned operator");
    add_common_flags(spectrum, fp);
    spectrum->add_option("--centers", fp.centers, "comma-separated cluster centers");
    spectrum->add_option("--eps", fp.eps, "cluster radius");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        if (!args.empty()) {
            // merge an optional config file into the subcommand's arguments
            std::vector<std::string> rest(args.begin() + 1, args.end());
            rest = merge_config(rest);
            args.assign(1, args.front());
            args.insert(args.end(), rest.begin(), rest.end());
        }
        // CLI11 consumes reversed arguments
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (solve->parsed()) {
            tauprec::RunConfig cfg;
            if (const int rc = parse_config(fs, false, cfg); rc != 0) return rc;
            const auto rows = tauprec::run_example(cfg);
            print_rows(rows);
            for (const auto& r : rows)
                if (!r.converged) {
                    std::cerr << "error: solver did not converge within maxit\n";
                    return 2;
                }
            return 0;
        }
        tauprec::RunConfig cfg;
        if (const int rc = parse_config(fp, true, cfg); rc != 0) return rc;
        const auto result = tauprec::run_spectrum(cfg);
        std::printf("N = %zu eigenvalues in [%.6g, %.6g]\n", result.eigenvalues.size(),
                    result.eigenvalues.front(), result.eigenvalues.back());
        std::printf("outliers outside B({");
        for (std::size_t i = 0; i < cfg.centers.size(); ++i)
            std::printf(i ? ", %g" : "%g", cfg.centers[i]);
        std::printf("}, %g): %d of %zu (fraction %.4f)\n", cfg.eps, result.outlier_count,
                    result.eigenvalues.size(), result.fraction);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
