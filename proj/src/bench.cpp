#include "oneshot/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "oneshot/rng.hpp"

namespace oneshot {

namespace {

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < jobs; ++t)
        workers.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += jobs) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& worker : workers) worker.join();
    if (error) std::rethrow_exception(error);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// FNV-1a.  The per-method sample stream is keyed on the canonical name, so
// the same method listed twice sees identical samples (and ties every
// replica), while distinct methods get independent streams.
std::uint64_t name_hash(const std::string& name) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

DispersionEstimate stochastic_dispersion(const MethodSpec& method, std::size_t n, std::size_t d,
                                         std::size_t replicas, std::size_t probe_count,
                                         std::uint64_t seed) {
    return stochastic_dispersion(
        [&method, n, d](std::uint64_t replica_seed) {
            return generate_unit(method, n, d, replica_seed);
        },
        n, d, replicas, probe_count, seed);
}

ReplicaResult run_replica(const MethodSpec& method, const ObjectiveInstance& instance,
                          std::size_t budget, std::uint64_t seed) {
    if (budget == 0) throw std::invalid_argument("run_replica: budget must be >= 1");
    const RealSample sample = generate_real(method, budget, instance.d, seed);

    double best_value = std::numeric_limits<double>::infinity();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < budget; ++i) {
        best_value = std::min(best_value, evaluate(instance, sample.row(i)));
        best_dist = std::min(best_dist, distance_to_optimum(instance, sample.row(i)));
    }

    ReplicaResult result;
    result.function = instance.function;
    result.d = instance.d;
    result.d_prime = instance.d_prime();
    result.budget = budget;
    result.method = method.canonical_name();
    result.regret = std::max(0.0, best_value);
    result.min_distance = best_dist;
    result.seed = seed;
    return result;
}

BenchOutput run_bench(const BenchConfig& config) {
    if (config.methods.empty())
        throw std::invalid_argument("run_bench: need at least one method");
    if (config.replicas < 1) throw std::invalid_argument("run_bench: replicas must be >= 1");
    for (const auto& dim : config.dims)
        if (dim.d_prime < 1 || dim.d_prime > dim.d)
            throw std::invalid_argument("run_bench: need 1 <= d' <= d in every grid cell");

    std::vector<MethodSpec> methods;
    methods.reserve(config.methods.size());
    for (const auto& name : config.methods) {
        MethodSpec method = parse_method_spec(name);
        if (method.reshape.rescale)
            throw std::invalid_argument("run_bench: method '" + name +
                                        "' rescales to the cube and cannot target R^d");
        methods.push_back(std::move(method));
    }

    const std::size_t n_methods = methods.size();
    const std::size_t n_dims = config.dims.size();
    const std::size_t n_budgets = config.budgets.size();
    const std::size_t n_functions = config.functions.size();
    const std::size_t n_cells = n_dims * n_budgets;

    BenchOutput output;
    output.table.methods.reserve(n_methods);
    for (const auto& method : methods) output.table.methods.push_back(method.canonical_name());
    output.table.dims = config.dims;
    output.table.budgets = config.budgets;
    output.table.replicas = config.replicas;
    output.table.cells.resize(n_cells);

    const std::size_t records_per_unit = config.replicas * n_methods;
    output.records.resize(n_cells * n_functions * records_per_unit);

    // wins[unit][method]: accumulated pairwise wins (ties count 0.5).
    std::vector<std::vector<double>> unit_wins(n_cells * n_functions,
                                               std::vector<double>(n_methods, 0.0));

    // One work unit per (dim, budget, function); deterministic because every
    // seed is derived from fixed indices and results land in fixed slots.
    const std::size_t n_units = n_cells * n_functions;
    parallel_for(n_units, config.jobs, [&](std::size_t unit) {
        const std::size_t cell = unit / n_functions;
        const std::size_t fn_index = unit % n_functions;
        const std::size_t dim_index = cell / n_budgets;
        const std::size_t budget_index = cell % n_budgets;
        const DimSpec dim = config.dims[dim_index];
        const std::size_t budget = config.budgets[budget_index];
        const FunctionId function = config.functions[fn_index];

        std::vector<double> regrets(n_methods);
        auto& wins = unit_wins[unit];
        ReplicaResult* records = output.records.data() + unit * records_per_unit;

        for (std::size_t r = 0; r < config.replicas; ++r) {
            // The instance stream depends only on (cell, function, replica):
            // every method sees the same optimum and mask.
            const std::uint64_t instance_seed =
                substream(config.seed, 100, dim_index, budget_index, fn_index, r);
            const ObjectiveInstance instance =
                draw_instance(function, dim.d, dim.d_prime, config.prior, instance_seed);

            for (std::size_t m = 0; m < n_methods; ++m) {
                const std::uint64_t method_seed =
                    substream(config.seed, 101, dim_index, budget_index, fn_index, r,
                              name_hash(output.table.methods[m]));
                ReplicaResult result = run_replica(methods[m], instance, budget, method_seed);
                result.replica = r;
                result.seed = instance_seed;
                regrets[m] = result.regret;
                records[r * n_methods + m] = std::move(result);
            }
            for (std::size_t a = 0; a < n_methods; ++a)
                for (std::size_t b = a + 1; b < n_methods; ++b) {
                    if (regrets[a] < regrets[b]) wins[a] += 1.0;
                    else if (regrets[b] < regrets[a]) wins[b] += 1.0;
                    else { wins[a] += 0.5; wins[b] += 0.5; }
                }
        }
    });

    // Aggregate units into per-cell mean pairwise win frequencies.
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
        auto& table_cell = output.table.cells[cell];
        table_cell.win_freq.assign(n_methods, 0.0);
        for (std::size_t fn_index = 0; fn_index < n_functions; ++fn_index) {
            const auto& wins = unit_wins[cell * n_functions + fn_index];
            for (std::size_t m = 0; m < n_methods; ++m) table_cell.win_freq[m] += wins[m];
        }
        const double denom = static_cast<double>(n_functions) *
                             static_cast<double>(config.replicas) *
                             static_cast<double>(std::max<std::size_t>(1, n_methods - 1));
        for (std::size_t m = 0; m < n_methods; ++m) table_cell.win_freq[m] /= denom;

        table_cell.winner = 0;
        for (std::size_t m = 1; m < n_methods; ++m) {
            const double freq = table_cell.win_freq[m];
            const double best = table_cell.win_freq[table_cell.winner];
            if (freq > best ||
                (freq == best && output.table.methods[m] < output.table.methods[table_cell.winner]))
                table_cell.winner = m;
        }
    }
    return output;
}

void WinTable::serialize(std::ostream& out) const {
    out << "# win-frequency table: best method per (dimension x budget) cell, "
        << replicas << " replicas, ties broken lexicographically\n";
    out << "dim\\budget";
    for (std::size_t budget : budgets) out << '\t' << budget;
    out << '\n';
    for (std::size_t di = 0; di < dims.size(); ++di) {
        out << dims[di].d;
        if (dims[di].d_prime != dims[di].d) out << "(d'=" << dims[di].d_prime << ')';
        for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
            const Cell& c = cell(di, bi);
            char freq[16];
            std::snprintf(freq, sizeof(freq), "%.3f", c.win_freq[c.winner]);
            out << '\t' << methods[c.winner] << '(' << freq << ')';
        }
        out << '\n';
    }
    out << "# per-cell frequencies\n";
    for (std::size_t di = 0; di < dims.size(); ++di)
        for (std::size_t bi = 0; bi < budgets.size(); ++bi)
            for (std::size_t m = 0; m < methods.size(); ++m) {
                char freq[16];
                std::snprintf(freq, sizeof(freq), "%.6f", cell(di, bi).win_freq[m]);
                out << "cell d=" << dims[di].d << " dprime=" << dims[di].d_prime
                    << " budget=" << budgets[bi] << " method=" << methods[m]
                    << " freq=" << freq << '\n';
            }
}

void write_results_csv(std::ostream& out, const std::vector<ReplicaResult>& records) {
    out << "function,d,d_prime,budget,method,replica,regret,min_distance,seed\n";
    for (const auto& r : records) {
        out << to_string(r.function) << ',' << r.d << ',' << r.d_prime << ',' << r.budget << ','
            << r.method << ',' << r.replica << ',' << format_double(r.regret) << ','
            << format_double(r.min_distance) << ',' << r.seed << '\n';
    }
}

}  // namespace oneshot
