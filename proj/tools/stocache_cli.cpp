// Command-line front end: single-point evaluation, parameter sweeps, Monte
// Carlo runs and density-storage tradeoff curves, all emitted as CSV.
//
//   stocache analytic --lambda 0.2 --T 0.1 --S 1
//   stocache sweep --var S --start 0 --stop 10 --step 0.1 --T 0.1
//   stocache simulate --realizations 100000 --seed 7
//   stocache tradeoff --p-dagger 0.3 --s-total-start 0.1 --s-total-stop 2 --s-total-step 0.02
//
// Units: S, L in nats; T, delivery rate and backhaul capacity in
// nats/sec/Hz (1 bit = ln 2 nats); lambda per unit area; SNR in dB.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stocache/analytic.hpp"
#include "stocache/montecarlo.hpp"
#include "stocache/tradeoff.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace stocache;

// Defaults mirror the storage-sweep figure configuration so bare commands
// produce something meaningful.
struct ParamSet {
    double lambda = 0.2;
    double alpha = 4.0;
    double snr_db = 10.0;
    double target_rate = 0.1;
    double storage = 1.0;
    double file_length = 1.0;
    double gamma = 2.0;
    double c1 = 0.0005;
    double c2 = 0.0;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string path_name(EvalPath p) {
    return p == EvalPath::ClosedForm ? "closed_form" : "general_quadrature";
}

std::string inputs_csv(const ParamSet& p) {
    return fmt(p.lambda) + "," + fmt(p.alpha) + "," + fmt(p.snr_db) + "," + fmt(p.target_rate) +
           "," + fmt(p.storage) + "," + fmt(p.file_length) + "," + fmt(p.gamma) + "," +
           fmt(p.c1) + "," + fmt(p.c2);
}

constexpr const char* kInputHeader = "lambda,alpha,snr_db,T,S,L,gamma,c1,c2";

void warn_backhaul(const ParamSet& p) {
    const NetworkParams net(p.lambda, p.alpha, p.snr_db, p.target_rate);
    const BackhaulModel bh(p.c1, p.c2);
    if (auto v = validate_backhaul_constraint(net, bh)) {
        std::cerr << "warning: backhaul capacity C(lambda) = " << fmt(v->capacity)
                  << " is not below the target rate T = " << fmt(v->target_rate)
                  << "; the delivery-rate model assumes C(lambda) < T\n";
    }
}

std::string analytic_row(const ParamSet& p, const QuadratureConfig& quad) {
    const NetworkParams net(p.lambda, p.alpha, p.snr_db, p.target_rate);
    const CacheParams cache(p.storage, p.file_length, p.gamma);
    const BackhaulModel bh(p.c1, p.c2);
    const AnalyticResult out = outage_probability(net, cache, quad);
    const AnalyticResult rate = avg_delivery_rate(net, cache, bh, quad);
    return inputs_csv(p) + "," + fmt(out.value) + "," + fmt(rate.value) + "," +
           path_name(out.path) + "," + fmt(std::max(out.estimated_error, rate.estimated_error));
}

std::string simulate_row(const ParamSet& p, const SimConfig& sim) {
    const NetworkParams net(p.lambda, p.alpha, p.snr_db, p.target_rate);
    const CacheParams cache(p.storage, p.file_length, p.gamma);
    const BackhaulModel bh(p.c1, p.c2);
    const EstimateResult est = estimate(net, cache, bh, sim);
    return inputs_csv(p) + "," + std::to_string(sim.realizations) + "," +
           std::to_string(sim.seed) + "," + fmt(est.outage_mean) + "," +
           fmt(est.outage_std_err) + "," + fmt(est.delivery_mean) + "," +
           fmt(est.delivery_std_err);
}

struct OutputSink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputSink(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        stream = &file;
    }
};

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
    if (!(start <= stop)) throw std::invalid_argument("start must be <= stop");
    const auto n = static_cast<std::size_t>((stop - start) / step + 1.0 + 1e-9);
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
}

// Flat key=value run configuration mirroring the flag names. Expanded into
// the argument list before parsing; explicit flags always win.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        const std::string content = trim(line);
        if (content.empty() || content[0] == '#') continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                        " is not key=value: " + content);
        const std::string flag = "--" + trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (flag == "--" || value.empty())
            throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                        " is not key=value: " + content);
        bool given = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
        if (!given) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

void add_param_options(CLI::App* cmd, ParamSet& p) {
    cmd->add_option("--lambda", p.lambda, "SBS density per unit area");
    cmd->add_option("--alpha", p.alpha, "pathloss exponent (> 2)");
    cmd->add_option("--snr-db", p.snr_db, "SNR in dB");
    cmd->add_option("--T", p.target_rate, "target file bitrate, nats/sec/Hz");
    cmd->add_option("--S", p.storage, "storage size per station, nats");
    cmd->add_option("--L", p.file_length, "file length, nats");
    cmd->add_option("--gamma", p.gamma, "popularity shape (> 1)");
    cmd->add_option("--c1", p.c1, "backhaul coefficient C1 in C(lambda) = C1/lambda + C2");
    cmd->add_option("--c2", p.c2, "backhaul floor C2");
}

int run(int argc, char** argv) {
    CLI::App app{
        "cache-enabled small-cell network analysis\n"
        "units: S, L in nats (1 bit = ln 2 nats); T and rates in nats/sec/Hz;\n"
        "lambda per unit area; SNR in dB"};
    app.require_subcommand(1);

    ParamSet params;
    QuadratureConfig quad;
    SimConfig sim;
    std::string output;
    std::string sweep_var = "S";
    double start = 0.0, stop = 1.0, step = 0.1;
    double p_dagger = 0.3;
    double s_start = 0.1, s_stop = 2.0, s_step = 0.02;
    double bracket_lo = 1e-4, bracket_hi = 10.0, lambda_tol = 1e-6;
    int realizations = 0;

    auto* analytic = app.add_subcommand("analytic", "closed-form / quadrature evaluation");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
    auto* sweep = app.add_subcommand("sweep", "analytic sweep over one variable");
    auto* tradeoff = app.add_subcommand("tradeoff", "minimal density vs total storage curve");

    std::string config_path;
    for (auto* cmd : {analytic, simulate, sweep, tradeoff}) {
        cmd->add_option("--output", output, "output CSV path ('-' for stdout)");
        cmd->add_option("--quad-rel-tol", quad.rel_tol, "quadrature relative tolerance");
        cmd->add_option("--config", config_path,
                        "flat key=value run configuration; flags override the file");
    }
    for (auto* cmd : {analytic, simulate, sweep}) add_param_options(cmd, params);

    for (auto* cmd : {simulate, sweep}) {
        cmd->add_option("--realizations", realizations, "Monte Carlo realizations");
        cmd->add_option("--seed", sim.seed, "master seed");
        cmd->add_option("--window-factor", sim.window_radius_factor,
                        "simulation disk radius factor k, R = k/sqrt(lambda)");
    }

    sweep->add_option("--var", sweep_var, "sweep variable: S, lambda, T or gamma")
        ->check(CLI::IsMember({"S", "lambda", "T", "gamma"}));
    sweep->add_option("--start", start, "sweep start")->required();
    sweep->add_option("--stop", stop, "sweep stop")->required();
    sweep->add_option("--step", step, "sweep step")->required();

    tradeoff->add_option("--p-dagger", p_dagger, "outage cap in (0,1)");
    tradeoff->add_option("--T", params.target_rate, "target file bitrate, nats/sec/Hz");
    tradeoff->add_option("--alpha", params.alpha, "pathloss exponent");
    tradeoff->add_option("--L", params.file_length, "file length, nats");
    tradeoff->add_option("--gamma", params.gamma, "popularity shape");
    tradeoff->add_option("--snr-db", params.snr_db, "SNR in dB");
    tradeoff->add_option("--s-total-start", s_start, "first average total storage, nats");
    tradeoff->add_option("--s-total-stop", s_stop, "last average total storage, nats");
    tradeoff->add_option("--s-total-step", s_step, "total storage step");
    tradeoff->add_option("--bracket-lo", bracket_lo, "density search bracket, lower end");
    tradeoff->add_option("--bracket-hi", bracket_hi, "density search bracket, upper end");
    tradeoff->add_option("--tol", lambda_tol, "density tolerance of the bisection");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 vector parse is reversed
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    quad.validate();
    OutputSink sink(output);
    std::ostream& os = *sink.stream;

    if (*analytic) {
        warn_backhaul(params);
        os << kInputHeader << ",p_out,delivery_rate,path,est_error\n";
        os << analytic_row(params, quad) << "\n";
    } else if (*simulate) {
        warn_backhaul(params);
        sim.realizations = realizations > 0 ? realizations : 1000;
        os << kInputHeader
           << ",realizations,seed,outage_mean,outage_std_err,delivery_mean,delivery_std_err\n";
        os << simulate_row(params, sim) << "\n";
    } else if (*sweep) {
        const std::vector<double> grid = make_grid(start, stop, step);
        std::vector<ParamSet> points(grid.size(), params);
        bool warned = false;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            ParamSet& p = points[i];
            if (sweep_var == "S")
                p.storage = grid[i];
            else if (sweep_var == "lambda")
                p.lambda = grid[i];
            else if (sweep_var == "T")
                p.target_rate = grid[i];
            else
                p.gamma = grid[i];
            const NetworkParams net(p.lambda, p.alpha, p.snr_db, p.target_rate);
            if (!warned && validate_backhaul_constraint(net, BackhaulModel(p.c1, p.c2))) {
                warn_backhaul(p);
                warned = true;
            }
        }
        const bool with_sim = realizations > 0;
        sim.realizations = realizations;
        os << kInputHeader << ",p_out,delivery_rate,path,est_error";
        if (with_sim)
            os << ",realizations,seed,outage_sim,outage_sim_std_err,delivery_sim,"
                  "delivery_sim_std_err";
        os << "\n";

        std::vector<std::string> rows(grid.size());
        std::string failure;
        // Rows are independent; compute in parallel, emit in grid order.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t i = 0; i < points.size(); ++i) {
            try {
                std::string row = analytic_row(points[i], quad);
                if (with_sim) {
                    const NetworkParams net(points[i].lambda, points[i].alpha,
                                            points[i].snr_db, points[i].target_rate);
                    const CacheParams cache(points[i].storage, points[i].file_length,
                                            points[i].gamma);
                    const BackhaulModel bh(points[i].c1, points[i].c2);
                    const EstimateResult est = estimate_serial(net, cache, bh, sim);
                    row += "," + std::to_string(sim.realizations) + "," +
                           std::to_string(sim.seed) + "," + fmt(est.outage_mean) + "," +
                           fmt(est.outage_std_err) + "," + fmt(est.delivery_mean) + "," +
                           fmt(est.delivery_std_err);
                }
                rows[i] = std::move(row);
            } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
                failure = e.what();
            }
        }
        if (!failure.empty()) throw QuadratureError("sweep point failed: " + failure);
        for (const auto& row : rows) os << row << "\n";
    } else if (*tradeoff) {
        TradeoffQuery query{s_start,
                            p_dagger,
                            {params.target_rate, params.alpha, params.file_length, params.gamma,
                             params.snr_db},
                            bracket_lo,
                            bracket_hi,
                            lambda_tol,
                            quad};
        const std::vector<double> grid = make_grid(s_start, s_stop, s_step);
        const std::vector<TradeoffPoint> curve = tradeoff_curve(grid, query);
        os << "s_total,lambda_star,achieved_outage,feasible\n";
        for (const TradeoffPoint& pt : curve) {
            if (!pt.feasible)
                std::cerr << "warning: no density in ["
                          << fmt(bracket_lo) << ", " << fmt(bracket_hi)
                          << "] meets the outage cap at s_total = " << fmt(pt.s_total)
                          << " (closest approach " << fmt(pt.achieved_outage) << ")\n";
            os << fmt(pt.s_total) << "," << fmt(pt.lambda_star) << ","
               << fmt(pt.achieved_outage) << "," << (pt.feasible ? "true" : "false") << "\n";
        }
    }
    os.flush();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const AnalyticError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
