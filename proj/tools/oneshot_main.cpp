#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oneshot/bench.hpp"
#include "oneshot/metrics.hpp"
#include "oneshot/method_spec.hpp"
#include "oneshot/rng.hpp"
#include "oneshot/sequences.hpp"

namespace {

using nlohmann::json;
using namespace oneshot;

// Exit codes: 0 ok, 2 config error, 3 numeric failure, 4 bound-check failure.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Writes through a temp file and renames, so failed runs leave no partial output.
void write_atomic(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    try {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        writer(out);
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
        out.close();
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

Prior prior_from_json(const json& j) {
    Prior prior;
    const std::string kind = j.value("kind", "normal-std");
    if (kind == "normal-std") prior.kind = Prior::Kind::NormalStd;
    else if (kind == "normal-scaled") prior.kind = Prior::Kind::NormalScaled;
    else if (kind == "cauchy-scaled") prior.kind = Prior::Kind::CauchyScaled;
    else throw std::invalid_argument("unknown prior kind '" + kind + "'");
    prior.scale = j.value("scale", 1.0);
    if (!(prior.scale > 0.0)) throw std::invalid_argument("prior scale must be > 0");
    return prior;
}

json prior_to_json(const Prior& prior) {
    const char* kind = prior.kind == Prior::Kind::NormalStd      ? "normal-std"
                       : prior.kind == Prior::Kind::NormalScaled ? "normal-scaled"
                                                                 : "cauchy-scaled";
    return json{{"kind", kind}, {"scale", prior.scale}};
}

BenchConfig bench_config_from_json(const json& j) {
    if (j.contains("kind") && j.at("kind") != "bench")
        throw std::invalid_argument("config kind '" + j.at("kind").get<std::string>() +
                                    "' is not a bench config");
    BenchConfig config;
    config.methods = j.at("methods").get<std::vector<std::string>>();
    for (const auto& dim : j.at("dims")) {
        DimSpec spec;
        spec.d = dim.at("d").get<std::size_t>();
        spec.d_prime = dim.value("d_prime", spec.d);
        config.dims.push_back(spec);
    }
    config.budgets = j.at("budgets").get<std::vector<std::size_t>>();
    for (const auto& name : j.at("functions"))
        config.functions.push_back(function_from_string(name.get<std::string>()));
    if (j.contains("prior")) config.prior = prior_from_json(j.at("prior"));
    config.replicas = j.value("replicas", std::size_t{1000});
    if (!j.contains("seed")) throw std::invalid_argument("config requires an explicit seed");
    config.seed = j.at("seed").get<std::uint64_t>();
    config.jobs = j.value("jobs", std::size_t{1});
    for (const auto& name : config.methods) parse_method_spec(name);  // validate early
    if (config.replicas < 1) throw std::invalid_argument("replicas must be >= 1");
    return config;
}

json bench_config_to_json(const BenchConfig& config) {
    json dims = json::array();
    for (const auto& dim : config.dims) dims.push_back({{"d", dim.d}, {"d_prime", dim.d_prime}});
    json functions = json::array();
    for (FunctionId f : config.functions) functions.push_back(to_string(f));
    return json{{"kind", "bench"},       {"methods", config.methods},
                {"dims", dims},          {"budgets", config.budgets},
                {"functions", functions}, {"prior", prior_to_json(config.prior)},
                {"replicas", config.replicas}, {"seed", config.seed},
                {"jobs", config.jobs}};
}

BenchConfig default_bench_config(bool full_grid) {
    BenchConfig config;
    config.methods = {"Random",
                      "LHS",
                      "ScrHalton",
                      "ScrHammersley",
                      "ScrHammersleyPlusMiddlePoint",
                      "MetaRctgScrHammersley",
                      "CauchyRctg0.55ScrHammersley",
                      "ORctg0.7ScrHalton",
                      "QORctg0.4ScrHammersley"};
    config.functions = {FunctionId::Sphere, FunctionId::Rastrigin, FunctionId::Cigar};
    if (full_grid) {
        config.dims = {{3, 3}, {18, 3}, {25, 25}, {100, 100}, {150, 25}, {600, 100}};
        config.budgets = {30, 100, 300, 1000, 3000, 10000, 30000, 100000, 300000};
        config.replicas = 7400;
    } else {
        config.dims = {{3, 3}, {18, 3}, {25, 25}, {100, 100}, {150, 25}};
        config.budgets = {30, 100, 300, 1000, 3000};
        config.replicas = 1000;
    }
    return config;
}

int run_sample(const std::string& method_name, std::size_t n, std::size_t d,
               std::uint64_t seed, const std::string& out_path, bool unbounded,
               bool apply_shift) {
    MethodSpec method = parse_method_spec(method_name);
    method.shifted = apply_shift;
    std::ostringstream body;
    if (unbounded) {
        const RealSample sample = generate_real(method, n, d, seed);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < d; ++j) body << (j ? " " : "") << fmt17(sample(i, j));
            body << '\n';
        }
    } else {
        const UnitSample sample = generate_unit(method, n, d, seed);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < d; ++j) body << (j ? " " : "") << fmt17(sample(i, j));
            body << '\n';
        }
        if (!sample.in_unit_cube()) throw NumericError("sample left the unit cube");
    }
    if (out_path == "-") {
        std::cout << body.str();
    } else {
        write_atomic(out_path, [&](std::ostream& out) { out << body.str(); });
    }
    return 0;
}

int run_bench_cmd(const BenchConfig& config, const std::string& out_dir) {
    const BenchOutput output = run_bench(config);
    for (const auto& record : output.records)
        if (!std::isfinite(record.regret) || !std::isfinite(record.min_distance))
            throw NumericError("non-finite result for method " + record.method);
    const std::filesystem::path dir(out_dir);
    write_atomic(dir / "results.csv",
                 [&](std::ostream& out) { write_results_csv(out, output.records); });
    write_atomic(dir / "wintable.txt", [&](std::ostream& out) { output.table.serialize(out); });
    write_atomic(dir / "config.json",
                 [&](std::ostream& out) { out << bench_config_to_json(config).dump(2) << '\n'; });
    return 0;
}

int run_check_bounds(std::uint64_t seed, std::size_t replicas, std::size_t mp_replicas,
                     const std::string& out_path) {
    std::vector<BoundCheckReport> reports;
    reports.push_back(check_lhs_corner_bound(64, 4, 3, replicas, substream(seed, 50)));
    reports.push_back(check_lhs_corner_bound(64, 4, 1, replicas / 10 + 1, substream(seed, 51)));
    reports.push_back(check_projected_jittered(81, 4, 2, 0.1, replicas, substream(seed, 52)));
    reports.push_back(check_middle_point_theorem(30, 100, mp_replicas, substream(seed, 53)));

    std::ostringstream body;
    bool all_pass = true;
    for (const auto& report : reports) {
        body << report.line() << '\n';
        all_pass = all_pass && report.pass;
    }
    if (out_path == "-") std::cout << body.str();
    else write_atomic(out_path, [&](std::ostream& out) { out << body.str(); });
    return all_pass ? 0 : 4;
}

struct Aggregate {
    std::vector<double> regrets;
};

int run_report(const std::string& results_path, const std::string& out_path) {
    std::ifstream in(results_path);
    if (!in) throw std::invalid_argument("cannot open results file " + results_path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("function,", 0) != 0)
        throw std::invalid_argument("results file missing header: " + results_path);

    // key: function,d,d_prime,budget,method
    std::map<std::string, Aggregate> groups;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<std::string, 9> fields;
        std::size_t start = 0;
        for (std::size_t f = 0; f < 9; ++f) {
            const std::size_t comma = f == 8 ? line.size() : line.find(',', start);
            if (comma == std::string::npos)
                throw std::invalid_argument("malformed results row: " + line);
            fields[f] = line.substr(start, comma - start);
            start = comma + 1;
        }
        const std::string key =
            fields[0] + ',' + fields[1] + ',' + fields[2] + ',' + fields[3] + ',' + fields[4];
        groups[key].regrets.push_back(std::stod(fields[6]));
    }

    auto quantile = [](std::vector<double>& v, double q) {
        const std::size_t index = std::min(
            v.size() - 1, static_cast<std::size_t>(q * static_cast<double>(v.size())));
        std::nth_element(v.begin(), v.begin() + index, v.end());
        return v[index];
    };

    std::ostringstream body;
    body << "function,d,d_prime,budget,method,mean_regret,q10,q50,q90\n";
    for (auto& [key, agg] : groups) {
        double sum = 0.0;
        for (double r : agg.regrets) sum += r;
        const double mean = sum / static_cast<double>(agg.regrets.size());
        const double q10 = quantile(agg.regrets, 0.10);
        const double q50 = quantile(agg.regrets, 0.50);
        const double q90 = quantile(agg.regrets, 0.90);
        body << key << ',' << fmt17(mean) << ',' << fmt17(q10) << ',' << fmt17(q50) << ','
             << fmt17(q90) << '\n';
    }
    if (out_path == "-") std::cout << body.str();
    else write_atomic(out_path, [&](std::ostream& out) { out << body.str(); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-shot hyperparameter search: space-filling designs, reshaping, benchmarks"};
    app.require_subcommand(1);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "generate a point set");
    std::string sample_method = "Random";
    std::size_t sample_n = 16, sample_d = 2;
    std::uint64_t sample_seed = 1;
    std::string sample_out = "-";
    bool sample_unbounded = false, sample_shift = false;
    sample_cmd->add_option("--method", sample_method, "method name (compact grammar)");
    sample_cmd->add_option("--n", sample_n, "number of points")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--d", sample_d, "dimension")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", sample_seed, "master seed");
    sample_cmd->add_option("--out", sample_out, "output file ('-' for stdout)");
    sample_cmd->add_flag("--unbounded", sample_unbounded, "convert to R^d (lambda * g^-1)");
    sample_cmd->add_flag("--shift", sample_shift, "apply a random shift modulo 1");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run the artificial one-shot benchmark grid");
    std::string bench_config_path;
    std::string bench_out = "out";
    bool full_grid = false;
    std::uint64_t bench_seed = 0;
    bool bench_seed_set = false;
    std::size_t bench_replicas = 0, bench_jobs = 0;
    bench_cmd->add_option("--config", bench_config_path, "JSON experiment config");
    bench_cmd->add_option("--out", bench_out, "output directory");
    bench_cmd->add_flag("--full-grid", full_grid, "full-scale grid instead of desk scale");
    bench_cmd->add_option("--seed", bench_seed, "master seed")->each([&](const std::string&) {
        bench_seed_set = true;
    });
    bench_cmd->add_option("--replicas", bench_replicas, "replicas per cell");
    bench_cmd->add_option("--jobs", bench_jobs, "worker threads");

    // check-bounds
    auto* check_cmd = app.add_subcommand("check-bounds", "numerically check the dispersion bounds");
    std::uint64_t check_seed = 1;
    std::size_t check_replicas = 10000, check_mp_replicas = 1000;
    std::string check_out = "-";
    check_cmd->add_option("--seed", check_seed, "master seed");
    check_cmd->add_option("--replicas", check_replicas, "Monte-Carlo replicas for corner/jittered checks");
    check_cmd->add_option("--mp-replicas", check_mp_replicas, "replicas for the middle-point check");
    check_cmd->add_option("--out", check_out, "output file ('-' for stdout)");

    // report
    auto* report_cmd = app.add_subcommand("report", "summarize results for plotting");
    std::string report_results, report_out = "-";
    report_cmd->add_option("--results", report_results, "results.csv from bench")->required();
    report_cmd->add_option("--out", report_out, "output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error kind=config msg=\"" << e.what() << "\"\n";
        return 2;
    }

    try {
        if (sample_cmd->parsed())
            return run_sample(sample_method, sample_n, sample_d, sample_seed, sample_out,
                              sample_unbounded, sample_shift);
        if (bench_cmd->parsed()) {
            BenchConfig config;
            if (!bench_config_path.empty()) {
                std::ifstream in(bench_config_path);
                if (!in) throw std::invalid_argument("cannot open config " + bench_config_path);
                json j = json::parse(in);
                config = bench_config_from_json(j);
            } else {
                config = default_bench_config(full_grid);
                config.seed = 1;
            }
            if (full_grid && !bench_config_path.empty())
                throw std::invalid_argument("--full-grid conflicts with --config");
            if (bench_seed_set) config.seed = bench_seed;
            if (bench_replicas > 0) config.replicas = bench_replicas;
            if (bench_jobs > 0) config.jobs = bench_jobs;
            return run_bench_cmd(config, bench_out);
        }
        if (check_cmd->parsed())
            return run_check_bounds(check_seed, check_replicas, check_mp_replicas, check_out);
        if (report_cmd->parsed()) return run_report(report_results, report_out);
    } catch (const NumericError& e) {
        std::cerr << "error kind=numeric msg=\"" << e.what() << "\"\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error kind=config msg=\"" << e.what() << "\"\n";
        return 2;
    }
    return 0;
}
