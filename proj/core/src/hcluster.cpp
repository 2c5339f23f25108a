#include "tscluster/hcluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "tscluster/errors.hpp"

namespace tsc {

namespace {

// Active clusters live in slots 0..K-1 of a working matrix of squared
// dissimilarities. Each slot carries the creation index used for
// deterministic tie-breaking (leaves 0..K-1, merge m creates K+m).
struct Slots {
    std::vector<double> w;       // squared dissimilarity, slot-major
    std::vector<char> active;
    std::vector<int> creation;   // tie-break index
    std::vector<int> node;       // serialization code: leaf -(i+1) or merge 1..K-1
    std::vector<int> size;
    std::size_t k;

    double& at(std::size_t a, std::size_t b) { return w[a * k + b]; }
    double at(std::size_t a, std::size_t b) const { return w[a * k + b]; }

    // Candidate ordering: criterion first, then the (smaller, larger)
    // creation-index pair.
    bool better(double va, std::size_t a1, std::size_t b1, double vb, std::size_t a2,
                std::size_t b2) const {
        if (va != vb) return va < vb;
        const int lo1 = std::min(creation[a1], creation[b1]);
        const int hi1 = std::max(creation[a1], creation[b1]);
        const int lo2 = std::min(creation[a2], creation[b2]);
        const int hi2 = std::max(creation[a2], creation[b2]);
        if (lo1 != lo2) return lo1 < lo2;
        return hi1 < hi2;
    }
};

struct Nearest {
    double value = std::numeric_limits<double>::infinity();
    std::size_t partner = 0;
    bool valid = false;
};

Nearest scan_nearest(const Slots& s, std::size_t a) {
    Nearest best;
    for (std::size_t b = 0; b < s.k; ++b) {
        if (b == a || !s.active[b]) continue;
        const double v = s.at(a, b);
        if (!best.valid || s.better(v, a, b, best.value, a, best.partner)) {
            best = {v, b, true};
        }
    }
    return best;
}

}  // namespace

Dendrogram agglomerate_ward(const DissimilarityMatrix& d) {
    const std::size_t k = d.size();
    if (k < 2) throw InvalidMatrix("clustering needs at least 2 series");

    Slots s;
    s.k = k;
    s.w.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const double v = d.at(i, j);
            s.w[i * k + j] = v * v;
        }
    s.active.assign(k, 1);
    s.creation.resize(k);
    std::iota(s.creation.begin(), s.creation.end(), 0);
    s.node.resize(k);
    for (std::size_t i = 0; i < k; ++i) s.node[i] = -static_cast<int>(i) - 1;
    s.size.assign(k, 1);

    std::vector<Nearest> nn(k);
    for (std::size_t i = 0; i < k; ++i) nn[i] = scan_nearest(s, i);

    std::vector<DendrogramMerge> merges;
    merges.reserve(k - 1);
    double prev_criterion = 0.0;

    for (std::size_t m = 1; m < k; ++m) {
        // Global nearest pair from the per-slot cache.
        std::size_t a = k, b = k;
        double best = std::numeric_limits<double>::infinity();
        bool found = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (!s.active[i]) continue;
            const auto& cand = nn[i];
            if (!cand.valid) continue;
            if (!found || s.better(cand.value, i, cand.partner, best, a, b)) {
                a = i;
                b = cand.partner;
                best = cand.value;
                found = true;
            }
        }
        if (!found) throw InvalidMatrix("no mergeable pair found");

        // Keep the smaller creation index in slot a.
        if (s.creation[b] < s.creation[a]) std::swap(a, b);

        // The exact-arithmetic criterion never decreases; rounding in the
        // Lance-Williams update can undershoot by ulps, so clamp.
        double criterion = std::max(best, prev_criterion);
        prev_criterion = criterion;

        const int na = s.size[a];
        const int nb = s.size[b];
        merges.push_back(DendrogramMerge{s.node[a], s.node[b], std::sqrt(criterion), na + nb});

        // Lance-Williams update for Ward on squared dissimilarities.
        const double dab = s.at(a, b);
        for (std::size_t c = 0; c < k; ++c) {
            if (!s.active[c] || c == a || c == b) continue;
            const double nc = static_cast<double>(s.size[c]);
            const double denom = static_cast<double>(na + nb) + nc;
            const double v = ((static_cast<double>(na) + nc) * s.at(a, c) +
                              (static_cast<double>(nb) + nc) * s.at(b, c) -
                              nc * dab) /
                             denom;
            const double clamped = std::max(v, criterion);
            s.at(a, c) = clamped;
            s.at(c, a) = clamped;
        }

        s.active[b] = 0;
        s.size[a] = na + nb;
        s.creation[a] = static_cast<int>(k + m - 1);
        s.node[a] = static_cast<int>(m);
        nn[b].valid = false;

        // Refresh caches: slots whose nearest pointed at a or b need a full
        // rescan (their row changed or their partner vanished); everyone
        // else only needs comparing against the new cluster in slot a.
        for (std::size_t c = 0; c < k; ++c) {
            if (!s.active[c] || c == a) continue;
            if (nn[c].partner == a || nn[c].partner == b || !nn[c].valid) {
                nn[c] = scan_nearest(s, c);
            } else {
                const double v = s.at(c, a);
                if (s.better(v, c, a, nn[c].value, c, nn[c].partner)) nn[c] = {v, a, true};
            }
        }
        nn[a] = scan_nearest(s, a);
    }

    return Dendrogram(k, std::move(merges));
}

Partition cut(const Dendrogram& dend, int k) {
    const std::size_t leaves = dend.leaf_count();
    if (k < 1 || static_cast<std::size_t>(k) > leaves)
        throw BadK("cut needs k in [1, leaf count]");

    // Union the first K-k merges, then label roots by first leaf appearance.
    std::vector<std::size_t> parent(leaves);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    const std::size_t keep = leaves - static_cast<std::size_t>(k);
    std::vector<std::size_t> merge_leaf(dend.merges().size());  // a leaf under each merge node
    for (std::size_t m = 0; m < dend.merges().size(); ++m) {
        const auto& mg = dend.merges()[m];
        const std::size_t l =
            mg.left < 0 ? static_cast<std::size_t>(-mg.left - 1) : merge_leaf[mg.left - 1];
        const std::size_t r =
            mg.right < 0 ? static_cast<std::size_t>(-mg.right - 1) : merge_leaf[mg.right - 1];
        merge_leaf[m] = l;
        if (m < keep) parent[find(r)] = find(l);
    }

    std::vector<int> labels(leaves, 0);
    int next = 0;
    std::vector<int> root_label(leaves, 0);
    for (std::size_t i = 0; i < leaves; ++i) {
        const std::size_t r = find(i);
        if (root_label[r] == 0) root_label[r] = ++next;
        labels[i] = root_label[r];
    }
    return Partition(std::move(labels), k);
}

}  // namespace tsc
