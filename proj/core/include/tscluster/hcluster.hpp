#pragma once

#include "tscluster/dendrogram.hpp"
#include "tscluster/matrix.hpp"

namespace tsc {

/// Agglomerative clustering with Ward's minimum-variance linkage over a
/// precomputed dissimilarity matrix. Input dissimilarities are squared for
/// the Lance-Williams recurrence and merge heights are the square roots of
/// the merge criterion, so two singletons merge at their plain distance.
/// Ties break on the smallest (left, right) pair of node creation indices:
/// leaves 0..K-1 in input order, then merge nodes in merge order.
Dendrogram agglomerate_ward(const DissimilarityMatrix& d);

/// Undo the last k-1 merges and label the connected leaf groups 1..k in
/// order of first leaf appearance.
Partition cut(const Dendrogram& dend, int k);

}  // namespace tsc
