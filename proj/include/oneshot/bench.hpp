#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "oneshot/method_spec.hpp"
#include "oneshot/metrics.hpp"
#include "oneshot/objectives.hpp"

namespace oneshot {

// Stochastic dispersion of a named sampling pipeline (cube space).
DispersionEstimate stochastic_dispersion(const MethodSpec& method, std::size_t n, std::size_t d,
                                         std::size_t replicas, std::size_t probe_count,
                                         std::uint64_t seed);

struct ReplicaResult {
    FunctionId function = FunctionId::Sphere;
    std::size_t d = 0;
    std::size_t d_prime = 0;
    std::size_t budget = 0;
    std::string method;
    std::size_t replica = 0;
    double regret = 0.0;
    double min_distance = 0.0;
    std::uint64_t seed = 0;  // substream that reproduces this replica's instance
};

// Evaluates one method on one instance: generates the budget-point sample in
// R^d, records the minimum objective value (the simple regret, since the
// shifted optimum value is 0) and the minimum distance to the optimum.
ReplicaResult run_replica(const MethodSpec& method, const ObjectiveInstance& instance,
                          std::size_t budget, std::uint64_t seed);

// One grid cell: ambient dimension and number of critical coordinates.
struct DimSpec {
    std::size_t d = 0;
    std::size_t d_prime = 0;

    bool operator==(const DimSpec&) const = default;
};

struct WinTable {
    std::vector<std::string> methods;  // canonical names
    std::vector<DimSpec> dims;
    std::vector<std::size_t> budgets;
    std::size_t replicas = 0;

    struct Cell {
        std::vector<double> win_freq;  // mean pairwise win frequency per method
        std::size_t winner = 0;        // index into methods
    };
    std::vector<Cell> cells;  // dims-major: cells[dim_index * budgets.size() + budget_index]

    const Cell& cell(std::size_t dim_index, std::size_t budget_index) const {
        return cells[dim_index * budgets.size() + budget_index];
    }

    // Best-method-per-cell grid (dimensions as rows, budgets as columns)
    // followed by per-cell per-method frequency records.
    void serialize(std::ostream& out) const;
};

struct BenchConfig {
    std::vector<std::string> methods;
    std::vector<DimSpec> dims;
    std::vector<std::size_t> budgets;
    std::vector<FunctionId> functions;
    Prior prior;
    std::size_t replicas = 1000;
    std::uint64_t seed = 1;
    std::size_t jobs = 1;

    bool operator==(const BenchConfig&) const = default;
};

struct BenchOutput {
    std::vector<ReplicaResult> records;  // deterministic order, independent of jobs
    WinTable table;
};

// Runs the full grid.  Within a replica every method sees the identical
// instance (same optimum, same critical mask); wins are strict regret
// comparisons with ties split 0.5/0.5; cell winners break ties
// lexicographically on the method name.
BenchOutput run_bench(const BenchConfig& config);

void write_results_csv(std::ostream& out, const std::vector<ReplicaResult>& records);

}  // namespace oneshot
