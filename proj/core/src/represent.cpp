#include "tscluster/represent.hpp"

#include <algorithm>
#include <cmath>

#include "tscluster/errors.hpp"
#include "tscluster/series.hpp"

namespace tsc {

namespace {

void check_sax_config(const SaxConfig& cfg) {
    if (cfg.w < 1) throw InvalidArgument("PAA segment count must be positive");
    if (cfg.alpha < 2 || cfg.alpha > 20)
        throw InvalidArgument("SAX alphabet size must lie in [2, 20]");
}

constexpr double kSqrt2 = 1.4142135623730950488016887242097;

}  // namespace

std::vector<double> paa(std::span<const double> x, int w) {
    if (w < 1) throw InvalidArgument("PAA segment count must be positive");
    const std::size_t n = x.size();
    if (n == 0 || n % static_cast<std::size_t>(w) != 0)
        throw NonDivisibleLength("PAA needs w to divide the series length (" +
                                 std::to_string(w) + " vs " + std::to_string(n) + ")");
    const std::size_t block = n / static_cast<std::size_t>(w);
    std::vector<double> out(static_cast<std::size_t>(w));
    for (std::size_t s = 0; s < out.size(); ++s) {
        double sum = 0.0;
        for (std::size_t i = s * block; i < (s + 1) * block; ++i) sum += x[i];
        out[s] = sum / static_cast<double>(block);
    }
    return out;
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("inverse normal CDF needs p in (0, 1)");

    // Acklam's rational approximation, then one Halley refinement against
    // the erfc-based CDF; accurate to ~1e-15.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    const double half_sqrt2pi = 0.3989422804014326779399460599344;  // 1/sqrt(2*pi)
    const double err = 0.5 * std::erfc(-x / kSqrt2) - p;
    const double pdf = half_sqrt2pi * std::exp(-0.5 * x * x);
    const double u = err / pdf;
    return x - u / (1.0 + 0.5 * x * u);
}

std::vector<double> sax_breakpoints(int alpha) {
    if (alpha < 2 || alpha > 20) throw InvalidArgument("SAX alphabet size must lie in [2, 20]");
    std::vector<double> beta(static_cast<std::size_t>(alpha - 1));
    for (int i = 1; i < alpha; ++i)
        beta[static_cast<std::size_t>(i - 1)] =
            inverse_normal_cdf(static_cast<double>(i) / static_cast<double>(alpha));
    return beta;
}

std::string sax_symbols(std::span<const double> x, const SaxConfig& cfg) {
    check_sax_config(cfg);
    if (x.size() < 2) throw TooShort("SAX needs at least 2 values");
    if (std::abs(mean(x)) > 1e-6 || std::abs(sample_sd(x) - 1.0) > 1e-6)
        throw NotNormalized("SAX input must be z-normalized");

    const auto segments = paa(x, cfg.w);
    const auto beta = sax_breakpoints(cfg.alpha);
    std::string out(segments.size(), 'a');
    for (std::size_t s = 0; s < segments.size(); ++s) {
        std::size_t sym = beta.size();  // last symbol unless a breakpoint exceeds v
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (segments[s] < beta[j]) {
                sym = j;
                break;
            }
        }
        out[s] = static_cast<char>('a' + sym);
    }
    return out;
}

double sax_mindist(const std::string& a, const std::string& b, int n_original,
                   const SaxConfig& cfg) {
    check_sax_config(cfg);
    if (a.size() != b.size()) throw LengthMismatch("symbol strings differ in length");
    if (a.size() != static_cast<std::size_t>(cfg.w))
        throw ConfigMismatch("symbol strings do not match the configured segment count");
    if (n_original < cfg.w) throw ConfigMismatch("original length is shorter than w");

    const auto beta = sax_breakpoints(cfg.alpha);
    auto sym_index = [&](char ch) -> int {
        const int idx = ch - 'a';
        if (idx < 0 || idx >= cfg.alpha)
            throw ConfigMismatch("symbol outside the configured alphabet");
        return idx;
    };
    double ss = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int r = sym_index(a[i]);
        const int c = sym_index(b[i]);
        if (std::abs(r - c) <= 1) continue;
        const double cell = beta[static_cast<std::size_t>(std::max(r, c) - 1)] -
                            beta[static_cast<std::size_t>(std::min(r, c))];
        ss += cell * cell;
    }
    return std::sqrt(static_cast<double>(n_original) / static_cast<double>(cfg.w)) *
           std::sqrt(ss);
}

namespace {

void check_dwt_length(std::size_t n, int level) {
    if (level < 1) throw InvalidArgument("DWT level must be >= 1");
    if (level > 30 || n == 0 || n % (static_cast<std::size_t>(1) << level) != 0)
        throw BadLength("DWT needs the length to be a multiple of 2^level");
}

}  // namespace

std::vector<double> haar_dwt(std::span<const double> x, int level) {
    check_dwt_length(x.size(), level);
    std::vector<double> work(x.begin(), x.end());
    std::vector<double> out(x.size());
    std::size_t n = x.size();
    // Each pass halves the approximation band in-place at the front of
    // `work` and deposits the detail band into its final slot in `out`.
    for (int l = 0; l < level; ++l) {
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) {
            const double s = (work[2 * i] + work[2 * i + 1]) / kSqrt2;
            const double d = (work[2 * i] - work[2 * i + 1]) / kSqrt2;
            out[half + i] = d;
            work[i] = s;
        }
        n = half;
    }
    std::copy(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(n), out.begin());
    return out;
}

std::vector<double> haar_idwt(std::span<const double> coeffs, int level) {
    check_dwt_length(coeffs.size(), level);
    std::vector<double> out(coeffs.begin(), coeffs.end());
    std::size_t n = coeffs.size() >> level;
    for (int l = 0; l < level; ++l) {
        std::vector<double> merged(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            const double s = out[i];
            const double d = out[n + i];
            merged[2 * i] = (s + d) / kSqrt2;
            merged[2 * i + 1] = (s - d) / kSqrt2;
        }
        std::copy(merged.begin(), merged.end(), out.begin());
        n *= 2;
    }
    return out;
}

double dwt_distance(std::span<const double> x, std::span<const double> y, int level, int keep) {
    if (x.size() != y.size()) throw LengthMismatch("series lengths differ");
    check_dwt_length(x.size(), level);
    if (keep < 1 || static_cast<std::size_t>(keep) > x.size())
        throw InvalidArgument("keep must lie in [1, N]");
    const auto cx = haar_dwt(x, level);
    const auto cy = haar_dwt(y, level);
    double ss = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(keep); ++i) {
        const double d = cx[i] - cy[i];
        ss += d * d;
    }
    return std::sqrt(ss);
}

std::vector<double> extract_trend(std::span<const double> x, const TrendConfig& cfg) {
    if (cfg.window < 3 || cfg.window % 2 == 0)
        throw InvalidArgument("trend window must be odd and >= 3");
    const std::size_t n = x.size();
    if (n < static_cast<std::size_t>(cfg.window))
        throw TooShort("series shorter than the trend window");
    const std::size_t half = static_cast<std::size_t>(cfg.window / 2);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(n - 1, i + half);
        double sum = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) sum += x[j];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return out;
}

}  // namespace tsc
