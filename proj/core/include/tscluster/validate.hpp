#pragma once

#include "tscluster/dendrogram.hpp"
#include "tscluster/matrix.hpp"

namespace tsc {

/// Mean silhouette width over all points; singleton clusters contribute 0.
/// Throws SingleCluster for k = 1.
double silhouette_avg(const DissimilarityMatrix& d, const Partition& p);

/// Dunn index: minimum inter-cluster distance over maximum intra-cluster
/// diameter. A zero maximum diameter is reported as an explicit marker
/// instead of an infinite value.
struct DunnIndex {
    double value = 0.0;
    bool degenerate_diameter = false;
};
DunnIndex dunn_index(const DissimilarityMatrix& d, const Partition& p);

/// Normalized Hubert statistic: Pearson correlation over upper-triangle
/// pairs between the dissimilarity and the 0/1 same-cluster indicator.
/// Throws DegenerateMatrix when either side is constant.
double hubert_gamma(const DissimilarityMatrix& d, const Partition& p);

/// Meila's variation of information between two partitions of the same
/// items (natural-log entropies). Zero iff the partitions are identical up
/// to relabeling.
double variation_of_information(const Partition& p, const Partition& q);

/// Adjusted Rand index from the pair-counting contingency table; 1 for
/// identical partitions.
double adjusted_rand_index(const Partition& p, const Partition& q);

}  // namespace tsc
