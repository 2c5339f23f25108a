#include "tscluster/dissimilarity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "tscluster/errors.hpp"

namespace tsc {

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::euclidean: return "euclidean";
        case Measure::cor: return "cor";
        case Measure::cort: return "cort";
        case Measure::dtw: return "dtw";
        case Measure::cid: return "cid";
    }
    return "euclidean";
}

Measure measure_from_string(std::string_view name) {
    if (name == "euclidean") return Measure::euclidean;
    if (name == "cor") return Measure::cor;
    if (name == "cort") return Measure::cort;
    if (name == "dtw") return Measure::dtw;
    if (name == "cid") return Measure::cid;
    throw InvalidArgument("unknown measure '" + std::string(name) + "'");
}

namespace {

void require_equal_length(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw LengthMismatch("series lengths differ: " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
}

std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
    require_equal_length(x, y);
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        ss += d * d;
    }
    return std::sqrt(ss);
}

double cor_index(std::span<const double> x, std::span<const double> y) {
    require_equal_length(x, y);
    if (x.size() < 2) throw TooShort("correlation needs at least 2 points");
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw ConstantSeries("correlation undefined for a constant series");
    return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

double cor_distance(std::span<const double> x, std::span<const double> y) {
    const double r = cor_index(x, y);
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - r)));
}

double cort_index(std::span<const double> x, std::span<const double> y) {
    require_equal_length(x, y);
    if (x.size() < 2) throw TooShort("temporal correlation needs at least 2 points");
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double dx = x[i + 1] - x[i];
        const double dy = y[i + 1] - y[i];
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw FlatDifferences("temporal correlation undefined for a flat difference sequence");
    return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

double cort_distance(std::span<const double> x, std::span<const double> y, double k) {
    if (k < 0.0) throw InvalidArgument("cort weighting constant must be >= 0");
    const double cort = cort_index(x, y);
    const double phi = 2.0 / (1.0 + std::exp(k * cort));
    return phi * euclidean_distance(x, y);
}

double dtw_distance(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) throw EmptySeries("dtw needs non-empty series");
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    constexpr double inf = std::numeric_limits<double>::infinity();

    // Two-row DP over the full cost table.
    std::vector<double> prev(m + 1, inf), cur(m + 1, inf);
    prev[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = inf;
        for (std::size_t j = 1; j <= m; ++j) {
            const double cost = std::abs(x[i - 1] - y[j - 1]);
            cur[j] = cost + std::min({prev[j], cur[j - 1], prev[j - 1]});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

double complexity_estimate(std::span<const double> x) {
    if (x.size() < 2) throw TooShort("complexity estimate needs at least 2 points");
    double ss = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double d = x[i] - x[i + 1];
        ss += d * d;
    }
    return std::sqrt(ss);
}

double cid_distance(std::span<const double> x, std::span<const double> y, double eps) {
    if (eps <= 0.0) throw InvalidArgument("complexity floor must be > 0");
    require_equal_length(x, y);
    const double dist = euclidean_distance(x, y);
    const double cex = complexity_estimate(x);
    const double cey = complexity_estimate(y);
    double cf = 1.0;
    if (cex != 0.0 || cey != 0.0) {
        const double hi = std::max(cex, cey);
        const double lo = std::max(std::min(cex, cey), eps);
        cf = hi / lo;
    }
    return dist * cf;
}

MeasureTag make_measure_tag(const MeasureConfig& cfg) {
    MeasureTag tag;
    tag.measure = std::string(to_string(cfg.measure));
    tag.representation = "none";
    if (cfg.measure == Measure::cort) tag.add_param("cort_k", fmt_param(cfg.cort_k));
    if (cfg.measure == Measure::cid) tag.add_param("ce_epsilon", fmt_param(cfg.ce_epsilon));
    return tag;
}

DissimilarityMatrix pairwise_matrix(const SeriesSet& set, const MeasureConfig& cfg,
                                    unsigned jobs) {
    return pairwise_matrix(set, cfg, make_measure_tag(cfg), jobs);
}

DissimilarityMatrix pairwise_matrix(const SeriesSet& set, const MeasureConfig& cfg,
                                    MeasureTag tag, unsigned jobs) {
    const std::size_t k = set.size();
    if (k < 2) throw InvalidArgument("pairwise matrix needs at least 2 series");
    if (cfg.cort_k < 0.0) throw InvalidArgument("cort weighting constant must be >= 0");
    if (cfg.ce_epsilon <= 0.0) throw InvalidArgument("complexity floor must be > 0");

    auto measure_one = [&](std::size_t i, std::size_t j) {
        const auto x = set[i].span();
        const auto y = set[j].span();
        switch (cfg.measure) {
            case Measure::euclidean: return euclidean_distance(x, y);
            case Measure::cor: return cor_distance(x, y);
            case Measure::cort: return cort_distance(x, y, cfg.cort_k);
            case Measure::dtw: return dtw_distance(x, y);
            case Measure::cid: return cid_distance(x, y, cfg.ce_epsilon);
        }
        return 0.0;
    };

    std::vector<double> entries(k * k, 0.0);

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(k));

    struct PairFailure {
        std::size_t i, j;
        std::string what;
    };
    std::mutex failure_mutex;
    std::optional<PairFailure> failure;

    auto run_rows = [&](std::atomic<std::size_t>& next_row) {
        for (std::size_t i = next_row.fetch_add(1); i < k; i = next_row.fetch_add(1)) {
            for (std::size_t j = 0; j < i; ++j) {
                try {
                    const double v = measure_one(i, j);
                    entries[i * k + j] = v;
                    entries[j * k + i] = v;
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    // Keep the lexicographically smallest pair for determinism.
                    if (!failure || j < failure->j || (j == failure->j && i < failure->i))
                        failure = PairFailure{j, i, e.what()};
                }
            }
        }
    };

    std::atomic<std::size_t> next_row{0};
    if (jobs <= 1) {
        run_rows(next_row);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) workers.emplace_back([&] { run_rows(next_row); });
        for (auto& w : workers) w.join();
    }
    if (failure) throw PairwiseError(failure->i, failure->j, failure->what);

    return DissimilarityMatrix(k, std::move(entries), std::move(tag));
}

}  // namespace tsc
