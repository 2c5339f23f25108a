#pragma once

#include <span>
#include <string>
#include <vector>

namespace tsc {

/// PAA segment count and SAX alphabet size.
struct SaxConfig {
    int w = 7;
    int alpha = 3;

    bool operator==(const SaxConfig&) const = default;
};

/// Centered moving-average width in days; must be odd and at least 3.
struct TrendConfig {
    int window = 7;
};

/// Piecewise aggregate approximation: mean of each of the w equal blocks.
/// w must divide the length.
std::vector<double> paa(std::span<const double> x, int w);

/// Standard-normal quantile breakpoints for an alphabet of size alpha:
/// alpha-1 values at Phi^-1(i/alpha).
std::vector<double> sax_breakpoints(int alpha);

/// Inverse standard normal CDF, accurate to ~1e-14 over (0, 1).
double inverse_normal_cdf(double p);

/// Discretizes a z-normalized series into SAX symbols 'a', 'b', ...
/// The input must already be z-normalized (checked to 1e-6).
std::string sax_symbols(std::span<const double> x, const SaxConfig& cfg);

/// MINDIST between two symbol strings from the same configuration:
/// sqrt(n/w) * sqrt(sum of squared breakpoint gaps), where symbols at
/// distance <= 1 in the alphabet contribute zero.
double sax_mindist(const std::string& a, const std::string& b, int n_original,
                   const SaxConfig& cfg);

/// Orthonormal Haar transform, `level` recursions on the approximation
/// part. Output is the final approximation followed by detail bands from
/// coarsest to finest; length equals the input length, which must be a
/// multiple of 2^level.
std::vector<double> haar_dwt(std::span<const double> x, int level);

/// Inverse of haar_dwt.
std::vector<double> haar_idwt(std::span<const double> coeffs, int level);

/// Euclidean distance between the first `keep` Haar coefficients.
double dwt_distance(std::span<const double> x, std::span<const double> y, int level, int keep);

/// Centered moving average; the window clips to the series at the edges,
/// so the first and last points average over ceil(window/2) values and the
/// output has the input's length.
std::vector<double> extract_trend(std::span<const double> x, const TrendConfig& cfg);

}  // namespace tsc
