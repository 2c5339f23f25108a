#pragma once

#include <span>
#include <string>

#include "tscluster/matrix.hpp"
#include "tscluster/series.hpp"

namespace tsc {

enum class Measure { euclidean, cor, cort, dtw, cid };

std::string_view to_string(Measure m);
Measure measure_from_string(std::string_view name);

/// Pairwise-measure selection plus the two tuning constants the measures
/// need: the CORT weighting gain and the complexity floor used by CID when
/// exactly one series is flat.
struct MeasureConfig {
    Measure measure = Measure::euclidean;
    double cort_k = 2.0;
    double ce_epsilon = 1e-12;
};

/// Plain L2 distance; series must have equal length.
double euclidean_distance(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of the raw values, in [-1, 1].
/// Throws ConstantSeries when either series has zero variance.
double cor_index(std::span<const double> x, std::span<const double> y);

/// Correlation turned into a dissimilarity: sqrt(2*(1 - cor)), in [0, 2].
double cor_distance(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of the first-difference sequences, in [-1, 1].
/// Throws FlatDifferences when either difference sequence has zero norm.
double cort_index(std::span<const double> x, std::span<const double> y);

/// Adaptive combination of behavior and value dissimilarity:
/// 2/(1 + exp(k * cort)) * euclidean. k = 0 reduces to plain Euclidean.
double cort_distance(std::span<const double> x, std::span<const double> y, double k);

/// Dynamic time warping with |x_i - y_j| step costs, unit moves and
/// aligned endpoints; lengths may differ. Full unconstrained DP.
double dtw_distance(std::span<const double> x, std::span<const double> y);

/// Root-sum-square of the first differences (zero for a constant series).
double complexity_estimate(std::span<const double> x);

/// Complexity-invariant distance: Euclidean scaled by max(CE)/min(CE).
/// Both complexities zero gives factor 1; a single zero complexity floors
/// the denominator at eps.
double cid_distance(std::span<const double> x, std::span<const double> y, double eps = 1e-12);

/// Full K x K matrix of the configured measure over an aligned set.
/// Pair evaluations may run on `jobs` worker threads (0 = hardware
/// concurrency); output is identical for any worker count. Per-pair
/// failures surface as PairwiseError naming the offending pair.
DissimilarityMatrix pairwise_matrix(const SeriesSet& set, const MeasureConfig& cfg,
                                    unsigned jobs = 1);

/// Same, with an explicit provenance tag (e.g. recording the representation
/// the caller applied before the distance).
DissimilarityMatrix pairwise_matrix(const SeriesSet& set, const MeasureConfig& cfg,
                                    MeasureTag tag, unsigned jobs = 1);

/// Provenance tag a plain pairwise_matrix run would record.
MeasureTag make_measure_tag(const MeasureConfig& cfg);

}  // namespace tsc
