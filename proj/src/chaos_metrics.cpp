#include "rachaos/chaos_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "rachaos/error.hpp"

namespace rachaos {

namespace {

// Least-squares slope of y against x.
double regression_slope(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw DegenerateSeries("regression abscissae are all equal");
    return (n * sxy - sx * sy) / denom;
}

// Collects n post-transient x-iterates of a system.
std::vector<double> x_series(const System2D& system, std::size_t transient, std::size_t n) {
    MapState state = system.initial;
    for (std::size_t i = 0; i < transient; ++i) state = system.step(state);
    std::vector<double> series;
    series.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        state = system.step(state);
        series.push_back(state.x);
    }
    return series;
}

// Runs work(i) for i in [0, count) on a worker pool; each index writes only
// its own output slot, so results are in deterministic grid order. The first
// exception raised by any worker is rethrown on the calling thread.
void parallel_indices(std::size_t count, const std::function<void(std::size_t)>& work) {
    const std::size_t hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::max<std::size_t>(1, std::min(hw, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) work(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

System2D ra_system(const MapParams& params) {
    validate(params);
    System2D system;
    system.step = [params](const MapState& s) { return step(s, params); };
    system.jacobian = [params](const MapState& s) { return jacobian_raw(s, params); };
    system.initial = MapState{params.x_init, params.y_init};
    return system;
}

MapFamily ra_family(const MapParams& base, SweptParam swept) {
    return [base, swept](double value) {
        if (!(value >= 0.0) || value > 4294967295.0)
            throw std::invalid_argument("swept parameter out of the 32-bit range");
        MapParams params = base;
        const auto rounded = static_cast<std::uint32_t>(std::llround(value));
        if (swept == SweptParam::alpha) params.alpha = rounded;
        else params.beta = rounded;
        return ra_system(params);
    };
}

std::vector<double> grid_values(const SweepGrid& grid) {
    if (!(grid.step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (grid.stop < grid.start) throw std::invalid_argument("empty sweep range");
    const auto count =
        static_cast<std::size_t>(std::floor((grid.stop - grid.start) / grid.step + 1e-9)) + 1;
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = grid.start + double(i) * grid.step;
    return values;
}

std::vector<double> default_r_grid() {
    std::vector<double> grid(10);
    const double lo = std::log(0.01), hi = std::log(0.1);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = std::exp(lo + (hi - lo) * double(i) / double(grid.size() - 1));
    return grid;
}

LyapunovPair lyapunov_pair(const System2D& system, const MetricConfig& config) {
    if (config.n_iterations < 100)
        throw std::invalid_argument("lyapunov_pair needs at least 100 iterations");

    MapState state = system.initial;
    for (std::size_t i = 0; i < config.transient; ++i) state = system.step(state);

    // Orthonormal frame carried through the Jacobian products.
    double v1x = 1.0, v1y = 0.0, v2x = 0.0, v2y = 1.0;
    double acc1 = 0.0, acc2 = 0.0;

    for (std::size_t i = 0; i < config.n_iterations; ++i) {
        const Mat2 j = system.jacobian(state);
        double w1x = j.xx * v1x + j.xy * v1y;
        double w1y = j.yx * v1x + j.yy * v1y;
        double w2x = j.xx * v2x + j.xy * v2y;
        double w2y = j.yx * v2x + j.yy * v2y;

        const double r11 = std::hypot(w1x, w1y);
        if (!(r11 > 0.0) || !std::isfinite(r11))
            throw NonFiniteState("jacobian column collapsed during LE accumulation");
        v1x = w1x / r11;
        v1y = w1y / r11;

        const double proj = w2x * v1x + w2y * v1y;
        w2x -= proj * v1x;
        w2y -= proj * v1y;
        const double r22 = std::hypot(w2x, w2y);
        if (!(r22 > 0.0) || !std::isfinite(r22))
            throw NonFiniteState("jacobian became singular during LE accumulation");
        v2x = w2x / r22;
        v2y = w2y / r22;

        acc1 += std::log(r11);
        acc2 += std::log(r22);

        state = system.step(state);
        if (!std::isfinite(state.x) || !std::isfinite(state.y))
            throw NonFiniteState("map iteration left the finite range");
    }

    LyapunovPair result;
    result.le1 = acc1 / double(config.n_iterations);
    result.le2 = acc2 / double(config.n_iterations);
    if (result.le1 < result.le2) std::swap(result.le1, result.le2);
    result.iterations = config.n_iterations;
    if (!std::isfinite(result.le1) || !std::isfinite(result.le2))
        throw NonFiniteState("non-finite Lyapunov estimate");
    return result;
}

double zero_one_test(std::span<const double> series, const MetricConfig& config) {
    const std::size_t n = series.size();
    if (n < 1000) throw SeriesTooShort("0-1 test needs at least 1000 samples");
    if (config.c_samples == 0) throw std::invalid_argument("c_samples must be at least 1");
    const std::size_t ncut = n / 10;

    // Phases away from the 0/pi/2pi resonances, where the oscillation term
    // below degenerates and the estimator turns unstable.
    std::mt19937_64 rng(config.rng_seed);
    std::uniform_real_distribution<double> phase(std::numbers::pi / 5.0,
                                                 4.0 * std::numbers::pi / 5.0);

    double mean = 0.0;
    for (const double v : series) mean += v;
    mean /= double(n);

    std::vector<double> p(n + 1), q(n + 1), log_n, log_m;
    std::vector<double> ks;
    ks.reserve(config.c_samples);

    for (std::size_t s = 0; s < config.c_samples; ++s) {
        const double c = phase(rng);

        p[0] = 0.0;
        q[0] = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            p[j] = p[j - 1] + series[j - 1] * std::cos(c * double(j));
            q[j] = q[j - 1] + series[j - 1] * std::sin(c * double(j));
        }

        log_n.clear();
        log_m.clear();
        for (std::size_t lag = 1; lag <= ncut; ++lag) {
            double m = 0.0;
            for (std::size_t i = 0; i + lag <= n; ++i) {
                const double dp = p[i + lag] - p[i];
                const double dq = q[i + lag] - q[i];
                m += dp * dp + dq * dq;
            }
            m /= double(n - lag + 1);
            // The series mean walks the translation variables around a
            // circle, adding a bounded oscillation to the displacement that
            // masks the diffusive growth; subtract it before fitting.
            m -= mean * mean * (1.0 - std::cos(double(lag) * c)) / (1.0 - std::cos(c));
            if (m > 0.0) {
                log_n.push_back(std::log(double(lag)));
                log_m.push_back(std::log(m));
            }
        }
        // A displacement that never leaves zero has no growth at all.
        ks.push_back(log_n.size() < 2 ? 0.0 : regression_slope(log_n, log_m));
    }

    std::sort(ks.begin(), ks.end());
    const std::size_t mid = ks.size() / 2;
    const double median =
        ks.size() % 2 == 1 ? ks[mid] : 0.5 * (ks[mid - 1] + ks[mid]);
    return std::clamp(median, 0.0, 1.0);
}

double correlation_dimension(std::span<const double> series, const MetricConfig& config) {
    if (series.size() < 500)
        throw SeriesTooShort("correlation dimension needs at least 500 samples");

    const std::vector<double> radii = config.r_grid.empty() ? default_r_grid() : config.r_grid;
    if (radii.size() < 2) throw std::invalid_argument("r_grid needs at least two radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw std::invalid_argument("radii must be positive");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw std::invalid_argument("r_grid must be strictly increasing");
    }

    // Delay embedding into consecutive pairs (s_i, s_{i+1}).
    const std::size_t n_points = series.size() - 1;

    // One pass over all pairs: bucket each Chebyshev distance into the first
    // radius that covers it, then suffix-sum to get the correlation integral.
    std::vector<std::uint64_t> buckets(radii.size() + 1, 0);
    for (std::size_t i = 0; i < n_points; ++i) {
        for (std::size_t j = i + 1; j < n_points; ++j) {
            const double d = std::max(std::abs(series[i] - series[j]),
                                      std::abs(series[i + 1] - series[j + 1]));
            const auto it = std::lower_bound(radii.begin(), radii.end(), d);
            ++buckets[std::size_t(it - radii.begin())];
        }
    }

    const double total_pairs = 0.5 * double(n_points) * double(n_points - 1);
    if (total_pairs == 0.0) throw SeriesTooShort("not enough embedded points");

    std::vector<double> log_r, log_c;
    std::uint64_t cumulative = 0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        cumulative += buckets[k];
        const double c = double(cumulative) / total_pairs;
        if (c > 0.0 && c < 1.0) {
            log_r.push_back(std::log(radii[k]));
            log_c.push_back(std::log(c));
        }
    }
    if (log_r.size() < 2)
        throw DegenerateSeries("correlation integral has no scaling region on this r_grid");
    return regression_slope(log_r, log_c);
}

double kolmogorov_entropy(std::span<const double> series, const MetricConfig& config) {
    if (series.size() < 1000)
        throw SeriesTooShort("entropy estimate needs at least 1000 samples");
    if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (config.ke_block_max < 2 || config.ke_block_max > 4)
        throw std::invalid_argument("ke_block_max must be in [2, 4]");

    // Box indices, packed 16 bits per block symbol below.
    std::vector<std::uint64_t> symbols(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double box = std::floor(series[i] / config.epsilon);
        if (!(box >= 0.0 && box < 65536.0))
            throw std::invalid_argument("series value outside the quantizable range");
        symbols[i] = std::uint64_t(box);
    }

    std::vector<double> block_entropy(config.ke_block_max + 1, 0.0);
    for (std::size_t block = 1; block <= config.ke_block_max; ++block) {
        std::unordered_map<std::uint64_t, std::uint64_t> counts;
        const std::size_t n_blocks = series.size() - block + 1;
        for (std::size_t i = 0; i < n_blocks; ++i) {
            std::uint64_t key = 0;
            for (std::size_t k = 0; k < block; ++k) key = key << 16 | symbols[i + k];
            ++counts[key];
        }
        double h = 0.0;
        for (const auto& [key, count] : counts) {
            const double prob = double(count) / double(n_blocks);
            h -= prob * std::log(prob);
        }
        block_entropy[block] = h;
    }

    return (block_entropy[config.ke_block_max] - block_entropy[1]) /
           double(config.ke_block_max - 1);
}

SensitivityResult sensitivity_divergence(const MapParams& params, double delta,
                                         double threshold, std::size_t max_iter) {
    validate(params);
    SensitivityResult result;
    result.trajectory_a.reserve(max_iter);
    result.trajectory_b.reserve(max_iter);

    MapState a{params.x_init, params.y_init};
    MapState b{params.x_init + delta, params.y_init};
    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        a = step(a, params);
        b = step(b, params);
        result.trajectory_a.push_back(a);
        result.trajectory_b.push_back(b);
        if (!result.divergence_iter && std::abs(a.x - b.x) > threshold)
            result.divergence_iter = iter;
    }
    return result;
}

std::vector<SweepPoint> bifurcation_sweep(const MapFamily& family, const SweepGrid& grid,
                                          std::size_t transient,
                                          std::size_t samples_per_param) {
    const std::vector<double> params = grid_values(grid);
    std::vector<SweepPoint> points(params.size() * samples_per_param);
    parallel_indices(params.size(), [&](std::size_t g) {
        const System2D system = family(params[g]);
        const std::vector<double> xs = x_series(system, transient, samples_per_param);
        for (std::size_t k = 0; k < xs.size(); ++k)
            points[g * samples_per_param + k] = SweepPoint{params[g], xs[k]};
    });
    return points;
}

std::vector<MapState> attractor_points(const MapParams& params, std::size_t n_points,
                                       std::size_t transient) {
    if (n_points == 0) throw std::invalid_argument("n_points must be at least 1");
    const System2D system = ra_system(params);
    MapState state = system.initial;
    for (std::size_t i = 0; i < transient; ++i) state = system.step(state);
    std::vector<MapState> points;
    points.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        state = system.step(state);
        points.push_back(state);
    }
    return points;
}

std::vector<LyapunovSweepPoint> lyapunov_sweep(const MapFamily& family,
                                               const SweepGrid& grid,
                                               const MetricConfig& config) {
    const std::vector<double> params = grid_values(grid);
    std::vector<LyapunovSweepPoint> points(params.size());
    parallel_indices(params.size(), [&](std::size_t g) {
        points[g] = LyapunovSweepPoint{params[g], lyapunov_pair(family(params[g]), config)};
    });
    return points;
}

std::vector<SweepPoint> series_metric_sweep(const MapFamily& family, const SweepGrid& grid,
                                            SeriesMetric metric,
                                            const MetricConfig& config) {
    const std::vector<double> params = grid_values(grid);
    std::vector<SweepPoint> points(params.size());
    parallel_indices(params.size(), [&](std::size_t g) {
        const System2D system = family(params[g]);
        const std::vector<double> series = x_series(system, config.transient, config.n_iterations);
        double value = 0.0;
        switch (metric) {
            case SeriesMetric::zero_one: value = zero_one_test(series, config); break;
            case SeriesMetric::correlation_dimension:
                value = correlation_dimension(series, config);
                break;
            case SeriesMetric::kolmogorov_entropy:
                value = kolmogorov_entropy(series, config);
                break;
        }
        points[g] = SweepPoint{params[g], value};
    });
    return points;
}

}  // namespace rachaos
