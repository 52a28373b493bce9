#include "oneshot/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "oneshot/rng.hpp"
#include "oneshot/sequences.hpp"

namespace oneshot {

namespace {

double min_distance_impl(std::span<const double> x_star, const std::vector<double>& data,
                         std::size_t n, std::size_t d) {
    if (n == 0) throw std::invalid_argument("min_distance: empty sample");
    if (x_star.size() != d) throw std::invalid_argument("min_distance: dimension mismatch");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double dist2 = 0.0;
        const double* row = data.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) {
            const double delta = row[j] - x_star[j];
            dist2 += delta * delta;
        }
        best = std::min(best, dist2);
    }
    return std::sqrt(best);
}

double median_inplace(std::vector<double>& v) {
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
        const double lower = *std::max_element(v.begin(), v.begin() + mid);
        m = 0.5 * (m + lower);
    }
    return m;
}

bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

double min_distance(std::span<const double> x_star, const UnitSample& sample) {
    return min_distance_impl(x_star, sample.data(), sample.size(), sample.dim());
}

double min_distance(std::span<const double> x_star, const RealSample& sample) {
    return min_distance_impl(x_star, sample.data(), sample.size(), sample.dim());
}

DispersionEstimate stochastic_dispersion(
    const std::function<UnitSample(std::uint64_t)>& sampler, std::size_t n, std::size_t d,
    std::size_t replicas, std::size_t probe_count, std::uint64_t seed) {
    if (replicas < 30) throw std::invalid_argument("stochastic_dispersion: need >= 30 replicas");
    if (probe_count < 100) throw std::invalid_argument("stochastic_dispersion: need >= 100 probes");

    const UnitSample probes = scramble(BaseSequenceKind::Hammersley, probe_count, d,
                                       substream(seed, 20));

    // Welford accumulators per probe over replicas.
    std::vector<double> mean(probe_count, 0.0), m2(probe_count, 0.0);
    for (std::size_t r = 0; r < replicas; ++r) {
        const UnitSample sample = sampler(substream(seed, 21, r));
        if (sample.size() != n || sample.dim() != d)
            throw std::invalid_argument("stochastic_dispersion: sampler shape mismatch");
        for (std::size_t p = 0; p < probe_count; ++p) {
            const double dist = min_distance(probes.row(p), sample);
            const double delta = dist - mean[p];
            mean[p] += delta / static_cast<double>(r + 1);
            m2[p] += delta * (dist - mean[p]);
        }
    }

    DispersionEstimate est;
    est.probes = probe_count;
    est.replicas = replicas;
    for (std::size_t p = 0; p < probe_count; ++p) {
        if (mean[p] > est.value) {
            est.value = mean[p];
            est.stderr_ = std::sqrt(m2[p] / static_cast<double>(replicas - 1) /
                                    static_cast<double>(replicas));
        }
    }
    return est;
}

namespace {

DiscrepancyEstimate exact_star_discrepancy(const UnitSample& sample) {
    const std::size_t n = sample.size();
    const std::size_t d = sample.dim();
    if (d > 3 || n > 256)
        throw std::invalid_argument("star_discrepancy: ExactSmall limited to d <= 3, n <= 256");

    // Critical corners per axis: the point coordinates and the closure at 1.
    std::vector<std::vector<double>> grid(d);
    for (std::size_t j = 0; j < d; ++j) {
        auto& axis = grid[j];
        axis.reserve(n + 1);
        for (std::size_t i = 0; i < n; ++i) axis.push_back(sample(i, j));
        axis.push_back(1.0);
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }

    double worst = 0.0;
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> corner(d, 0.0);
    std::size_t boxes = 0;
    for (;;) {
        double volume = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            corner[j] = grid[j][idx[j]];
            volume *= corner[j];
        }
        std::size_t open = 0, closed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool strictly = true, weakly = true;
            for (std::size_t j = 0; j < d; ++j) {
                const double u = sample(i, j);
                if (u >= corner[j]) strictly = false;
                if (u > corner[j]) {
                    weakly = false;
                    break;
                }
            }
            open += strictly;
            closed += weakly;
        }
        const double inv_n = 1.0 / static_cast<double>(n);
        worst = std::max(worst, volume - static_cast<double>(open) * inv_n);
        worst = std::max(worst, static_cast<double>(closed) * inv_n - volume);
        ++boxes;

        std::size_t j = 0;
        while (j < d && ++idx[j] == grid[j].size()) idx[j++] = 0;
        if (j == d) break;
    }
    return {worst, DiscrepancyMethod::ExactSmall, boxes};
}

DiscrepancyEstimate monte_carlo_star_discrepancy(const UnitSample& sample, std::uint64_t seed,
                                                 std::size_t box_count) {
    const std::size_t n = sample.size();
    const std::size_t d = sample.dim();
    Rng rng(substream(seed, 22));
    std::vector<double> corner(d);
    double worst = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t b = 0; b < box_count; ++b) {
        double volume = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            corner[j] = rng.next_double();
            volume *= corner[j];
        }
        std::size_t inside = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double* row = sample.data().data() + i * d;
            bool in = true;
            for (std::size_t j = 0; j < d; ++j)
                if (row[j] >= corner[j]) {
                    in = false;
                    break;
                }
            inside += in;
        }
        worst = std::max(worst, std::abs(volume - static_cast<double>(inside) * inv_n));
    }
    return {worst, DiscrepancyMethod::MonteCarlo, box_count};
}

}  // namespace

DiscrepancyEstimate star_discrepancy(const UnitSample& sample, DiscrepancyMethod method,
                                     std::uint64_t seed, std::size_t box_count) {
    if (method == DiscrepancyMethod::ExactSmall) return exact_star_discrepancy(sample);
    return monte_carlo_star_discrepancy(sample, seed, box_count);
}

double lanczos_gamma(double x) {
    // Lanczos, g = 7, 9 coefficients (Godfrey's table).
    static constexpr double coeffs[9] = {
        0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double pi = 3.1415926535897932384626434;
    if (x < 0.5)  // reflection
        return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
    x -= 1.0;
    double acc = coeffs[0];
    for (int i = 1; i < 9; ++i) acc += coeffs[i] / (x + i);
    const double t = x + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

double unit_ball_volume(std::size_t d) {
    constexpr double pi = 3.1415926535897932384626434;
    const double half_d = 0.5 * static_cast<double>(d);
    return std::pow(pi, half_d) / lanczos_gamma(half_d + 1.0);
}

std::string BoundCheckReport::line() const {
    std::string out = name;
    char buf[128];
    for (const auto& [key, value] : params) {
        std::snprintf(buf, sizeof(buf), " %s=%g", key.c_str(), value);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), " estimate=%.10g stderr=%.4g bound=%.10g pass=%d",
                  estimate, stderr_, bound, pass ? 1 : 0);
    out += buf;
    if (!asserted) out += " asserted=0";
    return out;
}

BoundCheckReport check_lhs_corner_bound(std::size_t n, std::size_t m, std::size_t d,
                                        std::size_t replicas, std::uint64_t seed) {
    if (!is_pow2(n) || !is_pow2(m)) throw std::invalid_argument("check_lhs_corner_bound: n and m must be powers of two");
    if (m > n) throw std::invalid_argument("check_lhs_corner_bound: m must be <= n");
    if (d == 0 || replicas == 0) throw std::invalid_argument("check_lhs_corner_bound: bad parameters");

    const double dd = static_cast<double>(d);
    const double n_pow = std::pow(static_cast<double>(n), 1.0 - 1.0 / dd);
    const double alpha = static_cast<double>(m) / n_pow;
    const double bound =
        d == 1 ? 0.0 : std::pow(1.0 - std::pow(alpha, dd - 1.0) / n_pow, alpha * n_pow);

    const double edge = static_cast<double>(m) / static_cast<double>(n);
    std::size_t misses = 0;
    for (std::size_t r = 0; r < replicas; ++r) {
        const UnitSample sample = gen_base(BaseSequenceKind::LHS, n, d, substream(seed, 23, r));
        bool hit = false;
        for (std::size_t i = 0; i < n && !hit; ++i) {
            bool inside = true;
            for (std::size_t j = 0; j < d; ++j)
                if (sample(i, j) > edge) {
                    inside = false;
                    break;
                }
            hit = inside;
        }
        misses += !hit;
    }

    BoundCheckReport report;
    report.name = "lhs_corner";
    report.params = {{"n", static_cast<double>(n)},
                     {"m", static_cast<double>(m)},
                     {"d", dd},
                     {"alpha", alpha},
                     {"replicas", static_cast<double>(replicas)}};
    report.estimate = static_cast<double>(misses) / static_cast<double>(replicas);
    report.stderr_ = std::sqrt(report.estimate * (1.0 - report.estimate) /
                               static_cast<double>(replicas));
    report.bound = bound;
    report.pass = report.estimate <= report.bound + 3.0 * report.stderr_;
    return report;
}

BoundCheckReport check_projected_jittered(std::size_t n, std::size_t d, std::size_t d_prime,
                                          double delta, std::size_t replicas, std::uint64_t seed) {
    if (d_prime < 1 || d_prime > d)
        throw std::invalid_argument("check_projected_jittered: need 1 <= d' <= d");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("check_projected_jittered: delta must lie in (0,1)");
    std::size_t k = 1;
    while (true) {
        std::size_t total = 1;
        for (std::size_t j = 0; j < d; ++j) total *= (k + 1);
        if (total > n) break;
        ++k;
    }
    {
        std::size_t total = 1;
        for (std::size_t j = 0; j < d; ++j) total *= k;
        if (total != n)
            throw std::invalid_argument("check_projected_jittered: n must be a perfect d-th power");
    }

    const double dp = static_cast<double>(d_prime);
    const double bound = std::pow(2.0, 1.0 + 1.0 / dp) *
                         std::pow(std::log(1.0 / delta), 1.0 / dp) /
                         std::pow(unit_ball_volume(d_prime) * static_cast<double>(n), 1.0 / dp);

    std::vector<double> dists(replicas);
    std::vector<double> probe(d_prime);
    for (std::size_t r = 0; r < replicas; ++r) {
        const UnitSample sample = gen_base(BaseSequenceKind::Jittered, n, d, substream(seed, 24, r));
        Rng rng(substream(seed, 25, r));
        for (std::size_t j = 0; j < d_prime; ++j) probe[j] = rng.next_double();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            double dist2 = 0.0;
            for (std::size_t j = 0; j < d_prime; ++j) {
                const double delta_j = sample(i, j) - probe[j];
                dist2 += delta_j * delta_j;
            }
            best = std::min(best, dist2);
        }
        dists[r] = std::sqrt(best);
    }
    std::sort(dists.begin(), dists.end());
    const std::size_t q_index =
        std::min(replicas - 1, static_cast<std::size_t>(std::ceil((1.0 - delta) * replicas)) - 1);
    const double quantile = dists[q_index];

    // Standard error of the empirical quantile via the order-statistic
    // bracket +-sqrt(R delta (1-delta)) around the index.
    const double spread = std::sqrt(static_cast<double>(replicas) * delta * (1.0 - delta));
    const std::size_t lo = q_index > static_cast<std::size_t>(spread)
                               ? q_index - static_cast<std::size_t>(spread) : 0;
    const std::size_t hi = std::min(replicas - 1, q_index + static_cast<std::size_t>(spread));
    const double se = 0.5 * (dists[hi] - dists[lo]);

    BoundCheckReport report;
    report.name = "projected_jittered";
    report.params = {{"n", static_cast<double>(n)},
                     {"d", static_cast<double>(d)},
                     {"dprime", dp},
                     {"delta", delta},
                     {"replicas", static_cast<double>(replicas)}};
    report.estimate = quantile;
    report.stderr_ = se;
    report.bound = bound;
    report.pass = quantile <= bound;
    return report;
}

BoundCheckReport check_middle_point_theorem(std::size_t n, std::size_t d, std::size_t replicas,
                                            std::uint64_t seed) {
    if (n == 0 || d == 0 || replicas == 0)
        throw std::invalid_argument("check_middle_point_theorem: bad parameters");

    std::vector<double> norm_xstar(replicas), min_dist(replicas), norm2_ratio(replicas);
    std::vector<double> x_star(d);
    for (std::size_t r = 0; r < replicas; ++r) {
        Rng rng(substream(seed, 26, r));
        double norm2 = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            x_star[j] = rng.next_gaussian();
            norm2 += x_star[j] * x_star[j];
        }
        norm_xstar[r] = std::sqrt(norm2);
        norm2_ratio[r] = norm2 / static_cast<double>(d);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            double dist2 = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double delta = rng.next_gaussian() - x_star[j];
                dist2 += delta * delta;
            }
            best = std::min(best, dist2);
        }
        min_dist[r] = std::sqrt(best);
    }

    std::sort(norm_xstar.begin(), norm_xstar.end());
    const std::size_t mid = replicas / 2;
    const double median_norm = norm_xstar[mid];
    const double median_min = median_inplace(min_dist);
    const double median_ratio = median_inplace(norm2_ratio);

    // Order-statistic bracket around the median index; binomial(R, 1/2)
    // has standard deviation sqrt(R)/2.
    const std::size_t spread =
        static_cast<std::size_t>(std::ceil(0.5 * std::sqrt(static_cast<double>(replicas))));
    const std::size_t lo = mid > spread ? mid - spread : 0;
    const std::size_t hi = std::min(replicas - 1, mid + spread);
    const double se = 0.5 * (norm_xstar[hi] - norm_xstar[lo]);

    BoundCheckReport report;
    report.name = "middle_point";
    report.params = {{"n", static_cast<double>(n)},
                     {"d", static_cast<double>(d)},
                     {"replicas", static_cast<double>(replicas)},
                     {"median_norm2_over_d", median_ratio}};
    // The claim is median ||x*|| < median min distance; outside the
    // asymptotic regime (small d) the values are reported without assertion.
    report.estimate = median_norm;
    report.bound = median_min;
    report.stderr_ = se;
    report.asserted = d >= 50;
    report.pass = !report.asserted || median_norm < median_min;
    return report;
}

}  // namespace oneshot
