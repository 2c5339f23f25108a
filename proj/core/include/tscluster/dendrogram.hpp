#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace tsc {

/// One agglomerative merge. Children are encoded like the text format:
/// negative values -1..-K are leaves (leaf i is -(i+1)), positive values
/// 1..K-1 refer to earlier merges (1-based merge index).
struct DendrogramMerge {
    int left = 0;
    int right = 0;
    double height = 0.0;
    int size = 0;  // leaves under this node

    bool operator==(const DendrogramMerge&) const = default;
};

/// Full agglomerative merge tree over K leaves: exactly K-1 merges, each
/// node consumed by exactly one later merge. Structure is validated at
/// construction; height monotonicity is asserted by the clustering tests.
class Dendrogram {
public:
    Dendrogram(std::size_t leaf_count, std::vector<DendrogramMerge> merges);

    std::size_t leaf_count() const { return leaf_count_; }
    const std::vector<DendrogramMerge>& merges() const { return merges_; }

    /// Leaves in left-to-right display order (root-down traversal).
    std::vector<std::size_t> leaf_order() const;

    /// Line-oriented merge list: `merge_index left right height size`.
    void save(std::ostream& out) const;
    static Dendrogram load(std::istream& in);

private:
    std::size_t leaf_count_;
    std::vector<DendrogramMerge> merges_;
};

/// Assignment of each series to one of k clusters; labels run 1..k and
/// every cluster is non-empty.
class Partition {
public:
    Partition(std::vector<int> labels, int k);
    /// Infers k as the largest label.
    static Partition from_labels(std::vector<int> labels);

    int k() const { return k_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    int label(std::size_t i) const { return labels_[i]; }

    /// Member indices per cluster, index c holds cluster c+1.
    std::vector<std::vector<std::size_t>> clusters() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> labels_;
    int k_ = 0;
};

}  // namespace tsc
