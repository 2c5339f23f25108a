#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tsc {

/// Provenance of a dissimilarity matrix: which measure and representation
/// produced it, with their parameters. Round-trips through a single header
/// line in the matrix text format.
struct MeasureTag {
    std::string measure = "euclidean";
    std::string representation = "none";
    std::vector<std::pair<std::string, std::string>> params;

    void add_param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }

    std::string to_string() const;
    static MeasureTag parse(const std::string& line);

    bool operator==(const MeasureTag&) const = default;
};

/// Dense symmetric pairwise dissimilarity matrix with zero diagonal and
/// finite non-negative entries, all validated at construction.
class DissimilarityMatrix {
public:
    DissimilarityMatrix(std::size_t size, std::vector<double> row_major, MeasureTag tag);

    std::size_t size() const { return size_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    const MeasureTag& tag() const { return tag_; }
    const std::vector<double>& entries() const { return entries_; }

    /// Plain-text lower-triangle format: a '#' provenance header line, the
    /// size K, then K-1 lines where line i holds entries d(i,0..i-1).
    void save(std::ostream& out) const;
    static DissimilarityMatrix load(std::istream& in);

private:
    std::size_t size_;
    std::vector<double> entries_;
    MeasureTag tag_;
};

}  // namespace tsc
