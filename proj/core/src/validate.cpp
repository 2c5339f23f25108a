#include "tscluster/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tscluster/errors.hpp"

namespace tsc {

namespace {

void require_match(const DissimilarityMatrix& d, const Partition& p) {
    if (d.size() != p.size())
        throw LengthMismatch("matrix size and partition size differ");
}

}  // namespace

double silhouette_avg(const DissimilarityMatrix& d, const Partition& p) {
    require_match(d, p);
    if (p.k() < 2) throw SingleCluster("silhouette needs at least 2 clusters");

    const auto clusters = p.clusters();
    const std::size_t n = p.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const int ci = p.label(i);
        const std::size_t own = clusters[static_cast<std::size_t>(ci - 1)].size();
        if (own == 1) continue;  // singleton: s(i) = 0 by convention

        double a = 0.0;
        double b = std::numeric_limits<double>::infinity();
        for (int c = 1; c <= p.k(); ++c) {
            const auto& members = clusters[static_cast<std::size_t>(c - 1)];
            double sum = 0.0;
            for (std::size_t j : members)
                if (j != i) sum += d.at(i, j);
            if (c == ci) {
                a = sum / static_cast<double>(own - 1);
            } else {
                b = std::min(b, sum / static_cast<double>(members.size()));
            }
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(n);
}

DunnIndex dunn_index(const DissimilarityMatrix& d, const Partition& p) {
    require_match(d, p);
    if (p.k() < 2) throw SingleCluster("Dunn index needs at least 2 clusters");

    double min_between = std::numeric_limits<double>::infinity();
    double max_diameter = 0.0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p.label(i) == p.label(j))
                max_diameter = std::max(max_diameter, d.at(i, j));
            else
                min_between = std::min(min_between, d.at(i, j));
        }
    if (max_diameter == 0.0) return {0.0, true};
    return {min_between / max_diameter, false};
}

double hubert_gamma(const DissimilarityMatrix& d, const Partition& p) {
    require_match(d, p);
    if (p.k() < 2) throw SingleCluster("Hubert statistic needs at least 2 clusters");

    const std::size_t n = p.size();
    const double m = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    double mean_d = 0.0, mean_q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            mean_d += d.at(i, j);
            mean_q += p.label(i) == p.label(j) ? 0.0 : 1.0;
        }
    mean_d /= m;
    mean_q /= m;

    double sdq = 0.0, sdd = 0.0, sqq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dd = d.at(i, j) - mean_d;
            const double dq = (p.label(i) == p.label(j) ? 0.0 : 1.0) - mean_q;
            sdq += dd * dq;
            sdd += dd * dd;
            sqq += dq * dq;
        }
    if (sdd == 0.0 || sqq == 0.0)
        throw DegenerateMatrix("Hubert statistic undefined for a constant upper triangle");
    return sdq / (std::sqrt(sdd) * std::sqrt(sqq));
}

namespace {

void require_same_items(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw LengthMismatch("partitions label different item counts");
}

// Joint label counts: cell (a, b) for p-label a+1, q-label b+1.
std::vector<std::vector<double>> contingency(const Partition& p, const Partition& q) {
    std::vector<std::vector<double>> cells(static_cast<std::size_t>(p.k()),
                                           std::vector<double>(static_cast<std::size_t>(q.k()), 0.0));
    for (std::size_t i = 0; i < p.size(); ++i)
        cells[static_cast<std::size_t>(p.label(i) - 1)][static_cast<std::size_t>(q.label(i) - 1)] +=
            1.0;
    return cells;
}

}  // namespace

double variation_of_information(const Partition& p, const Partition& q) {
    require_same_items(p, q);
    const double n = static_cast<double>(p.size());
    const auto cells = contingency(p, q);

    std::vector<double> row(cells.size(), 0.0), col(cells[0].size(), 0.0);
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = 0; b < cells[a].size(); ++b) {
            row[a] += cells[a][b];
            col[b] += cells[a][b];
        }

    double hp = 0.0, hq = 0.0, mi = 0.0;
    for (double r : row)
        if (r > 0.0) hp += (r / n) * std::log(n / r);
    for (double c : col)
        if (c > 0.0) hq += (c / n) * std::log(n / c);
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = 0; b < cells[a].size(); ++b) {
            const double v = cells[a][b];
            if (v <= 0.0) continue;
            // A cell covering its full row and column contributes exactly the
            // entropy term, so identical partitions cancel to 0 exactly.
            if (v == row[a] && v == col[b])
                mi += (v / n) * std::log(n / v);
            else
                mi += (v / n) * std::log(n * v / (row[a] * col[b]));
        }
    const double vi = hp + hq - 2.0 * mi;
    return std::max(0.0, vi);
}

double adjusted_rand_index(const Partition& p, const Partition& q) {
    require_same_items(p, q);
    const auto cells = contingency(p, q);

    auto choose2 = [](double x) { return x * (x - 1.0) / 2.0; };
    std::vector<double> row(cells.size(), 0.0), col(cells[0].size(), 0.0);
    double index = 0.0;
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = 0; b < cells[a].size(); ++b) {
            row[a] += cells[a][b];
            col[b] += cells[a][b];
            index += choose2(cells[a][b]);
        }
    double sum_row = 0.0, sum_col = 0.0;
    for (double r : row) sum_row += choose2(r);
    for (double c : col) sum_col += choose2(c);
    const double pairs = choose2(static_cast<double>(p.size()));
    if (pairs == 0.0) return 1.0;  // a single item
    const double expected = sum_row * sum_col / pairs;
    const double maximum = 0.5 * (sum_row + sum_col);
    if (maximum == expected) return 1.0;  // both partitions trivial in the same way
    return (index - expected) / (maximum - expected);
}

}  // namespace tsc
