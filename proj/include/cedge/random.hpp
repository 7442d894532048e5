/**
 * Erdős–Rényi sampling and Monte Carlo estimates of how often I_c(G(n,p))
 * is licci. Each trial decides licci-ness from the graph alone (forest or
 * K_3), so no ideal is ever built inside the sampling loop.
 */

#ifndef CEDGE_RANDOM_HPP
#define CEDGE_RANDOM_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "graph.hpp"
#include "invariants.hpp"

namespace cedge {

/// p given directly.
struct AbsoluteP
{
    double p;
};

/// p = min(c / n, 1).
struct ScaledP
{
    double c;
};

struct ExperimentConfig
{
    int n = 0;
    std::variant<AbsoluteP, ScaledP> p_spec = AbsoluteP{0.0};
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;

    double probability() const
    {
        double p = std::holds_alternative<AbsoluteP>(p_spec)
                       ? std::get<AbsoluteP>(p_spec).p
                       : std::get<ScaledP>(p_spec).c / static_cast<double>(n);
        return std::clamp(p, 0.0, 1.0);
    }

    /// c = n p, echoing the given c when the config was scaled.
    double scale() const
    {
        return std::holds_alternative<ScaledP>(p_spec) ? std::get<ScaledP>(p_spec).c
                                                       : std::get<AbsoluteP>(p_spec).p * n;
    }
};

struct ExperimentSummary
{
    ExperimentConfig config;
    std::uint64_t licci_count = 0;
    std::uint64_t forest_count = 0;
    std::uint64_t cycle_count = 0;
    double wall_time = 0.0;   // seconds

    Rational fraction_licci() const
    {
        return {static_cast<std::int64_t>(licci_count), static_cast<std::int64_t>(config.trials)};
    }
};

/// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed of stream `index` under `master`; depends on nothing else.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index)
{
    return mix_seed(master ^ mix_seed(index));
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline SimpleGraph sample_gnp(int n, double p, std::mt19937_64& rng)
{
    if (n < 1)
        throw DomainError("G(n,p) needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("G(n,p) needs 0 <= p <= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (unit_uniform(rng) < p)
                edges.push_back({u, v});
    return {n, std::move(edges)};
}

/// The per-trial decision: forest or K_3. Total on all graphs.
inline bool licci_by_shape(const SimpleGraph& g) { return is_forest(g) || is_k3(g); }

namespace detail {

struct TrialCounts
{
    std::uint64_t licci = 0;
    std::uint64_t forest = 0;
};

inline TrialCounts run_trials(const ExperimentConfig& config, std::uint64_t begin, std::uint64_t end)
{
    TrialCounts counts;
    const double p = config.probability();
    for (std::uint64_t t = begin; t < end; ++t)
    {
        std::mt19937_64 rng(split_seed(config.seed, t));
        const auto g = sample_gnp(config.n, p, rng);
        const bool forest = is_forest(g);
        counts.forest += forest;
        counts.licci += forest || is_k3(g);
    }
    return counts;
}

}   // namespace detail

/**
 * Runs config.trials independent samples. Trial t draws from its own engine
 * seeded by split_seed(seed, t), so the result does not depend on `workers`.
 */
inline ExperimentSummary estimate_licci_probability(const ExperimentConfig& config, unsigned workers = 1)
{
    if (config.n < 3)
        throw DomainError("licci estimates need n >= 3");
    if (config.trials < 1)
        throw DomainError("need at least one trial");

    const auto start = std::chrono::steady_clock::now();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(config.trials, 256))));

    std::vector<detail::TrialCounts> partial(workers);
    {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (config.trials + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
        {
            const std::uint64_t begin = std::min(config.trials, w * chunk);
            const std::uint64_t end = std::min(config.trials, begin + chunk);
            pool.emplace_back([&, w, begin, end] { partial[w] = detail::run_trials(config, begin, end); });
        }
    }

    ExperimentSummary summary;
    summary.config = config;
    for (const auto& c : partial)
    {
        summary.licci_count += c.licci;
        summary.forest_count += c.forest;
    }
    summary.cycle_count = config.trials - summary.forest_count;
    summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

struct SweepResult
{
    std::vector<ExperimentSummary> rows;
    std::vector<std::string> diagnostics;   // monotonicity violations beyond noise
};

/**
 * One estimate per c (p = c/n), row k seeded by split_seed(seed, k). The
 * licci fraction should not increase with c; any rise larger than three
 * standard errors plus one trial is reported as a diagnostic.
 */
inline SweepResult threshold_sweep(int n, const std::vector<double>& c_values, std::uint64_t trials,
                                   std::uint64_t seed, unsigned workers = 1)
{
    if (c_values.empty())
        throw DomainError("threshold sweep needs at least one c value");
    SweepResult result;
    for (std::size_t k = 0; k < c_values.size(); ++k)
    {
        ExperimentConfig config{n, ScaledP{c_values[k]}, trials, split_seed(seed, k)};
        result.rows.push_back(estimate_licci_probability(config, workers));
    }
    for (std::size_t k = 1; k < result.rows.size(); ++k)
    {
        if (c_values[k] < c_values[k - 1])
            continue;
        const double prev = boost::rational_cast<double>(result.rows[k - 1].fraction_licci());
        const double cur = boost::rational_cast<double>(result.rows[k].fraction_licci());
        const double t = static_cast<double>(trials);
        const double noise = 3.0 * std::sqrt(std::max(prev * (1 - prev), cur * (1 - cur)) * 2.0 / t) + 1.0 / t;
        if (cur - prev > noise)
            result.diagnostics.push_back(fmt::format("fraction_licci rose from {:.6f} (c={}) to {:.6f} (c={})", prev,
                                                     c_values[k - 1], cur, c_values[k]));
    }
    return result;
}

inline const std::string kExperimentCsvHeader = "n,c,p,trials,seed,licci_count,fraction_licci";

inline std::string csv_row(const ExperimentSummary& s)
{
    return fmt::format("{},{},{:.6f},{},{},{},{:.6f}", s.config.n, s.config.scale(), s.config.probability(),
                       s.config.trials, s.config.seed, s.licci_count,
                       boost::rational_cast<double>(s.fraction_licci()));
}

}   // namespace cedge

#endif
