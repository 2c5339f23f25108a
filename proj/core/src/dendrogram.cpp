#include "tscluster/dendrogram.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tscluster/errors.hpp"

namespace tsc {

Dendrogram::Dendrogram(std::size_t leaf_count, std::vector<DendrogramMerge> merges)
    : leaf_count_(leaf_count), merges_(std::move(merges)) {
    if (leaf_count_ < 1) throw InvalidArgument("dendrogram needs at least one leaf");
    if (merges_.size() != leaf_count_ - 1)
        throw InvalidArgument("dendrogram over K leaves needs exactly K-1 merges");

    // Every leaf and every internal node must be consumed exactly once.
    std::vector<char> leaf_used(leaf_count_, 0);
    std::vector<char> merge_used(merges_.size(), 0);
    std::vector<int> sizes(merges_.size(), 0);
    auto child_size = [&](int code, std::size_t at) -> int {
        if (code < 0) {
            const int leaf = -code - 1;
            if (leaf < 0 || static_cast<std::size_t>(leaf) >= leaf_count_)
                throw InvalidArgument("merge references unknown leaf " + std::to_string(code));
            if (leaf_used[leaf]++) throw InvalidArgument("leaf used twice in dendrogram");
            return 1;
        }
        const int m = code - 1;
        if (m < 0 || static_cast<std::size_t>(m) >= at)
            throw InvalidArgument("merge references invalid node " + std::to_string(code));
        if (merge_used[m]++) throw InvalidArgument("merge node used twice in dendrogram");
        return sizes[m];
    };
    for (std::size_t m = 0; m < merges_.size(); ++m) {
        const auto& mg = merges_[m];
        if (!std::isfinite(mg.height) || mg.height < 0.0)
            throw InvalidArgument("merge height must be finite and non-negative");
        const int total = child_size(mg.left, m) + child_size(mg.right, m);
        if (total != mg.size)
            throw InvalidArgument("merge size does not match its children");
        sizes[m] = total;
    }
    if (!merges_.empty() && merge_used[merges_.size() - 1])
        throw InvalidArgument("root merge must not be consumed");
}

std::vector<std::size_t> Dendrogram::leaf_order() const {
    std::vector<std::size_t> order;
    order.reserve(leaf_count_);
    if (merges_.empty()) {
        order.push_back(0);
        return order;
    }
    // Iterative traversal from the root, left child first.
    std::vector<int> stack{static_cast<int>(merges_.size())};
    while (!stack.empty()) {
        const int code = stack.back();
        stack.pop_back();
        if (code < 0) {
            order.push_back(static_cast<std::size_t>(-code - 1));
        } else {
            const auto& mg = merges_[code - 1];
            stack.push_back(mg.right);
            stack.push_back(mg.left);
        }
    }
    return order;
}

void Dendrogram::save(std::ostream& out) const {
    char buf[32];
    for (std::size_t m = 0; m < merges_.size(); ++m) {
        const auto& mg = merges_[m];
        std::snprintf(buf, sizeof(buf), "%.17g", mg.height);
        out << (m + 1) << ' ' << mg.left << ' ' << mg.right << ' ' << buf << ' ' << mg.size
            << "\n";
    }
}

Dendrogram Dendrogram::load(std::istream& in) {
    std::vector<DendrogramMerge> merges;
    std::string line;
    std::size_t line_no = 0;
    std::size_t leaves = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::size_t index;
        DendrogramMerge mg;
        if (!(row >> index >> mg.left >> mg.right >> mg.height >> mg.size))
            throw ParseError(line_no, "expected 'merge_index left right height size'");
        if (index != merges.size() + 1)
            throw ParseError(line_no, "merge indices must be sequential from 1");
        merges.push_back(mg);
        if (mg.left < 0) leaves = std::max(leaves, static_cast<std::size_t>(-mg.left));
        if (mg.right < 0) leaves = std::max(leaves, static_cast<std::size_t>(-mg.right));
    }
    if (merges.empty()) throw ParseError(line_no, "empty merge list");
    return Dendrogram(merges.size() + 1, std::move(merges));
}

Partition::Partition(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k) {
    if (k_ < 1) throw BadK("cluster count must be at least 1");
    if (labels_.empty()) throw InvalidArgument("partition must label at least one item");
    std::vector<std::size_t> counts(static_cast<std::size_t>(k_), 0);
    for (int l : labels_) {
        if (l < 1 || l > k_)
            throw InvalidArgument("label " + std::to_string(l) + " outside 1.." + std::to_string(k_));
        ++counts[static_cast<std::size_t>(l - 1)];
    }
    for (int c = 0; c < k_; ++c)
        if (counts[static_cast<std::size_t>(c)] == 0)
            throw InvalidArgument("cluster " + std::to_string(c + 1) + " is empty");
}

Partition Partition::from_labels(std::vector<int> labels) {
    int k = 0;
    for (int l : labels) k = std::max(k, l);
    return Partition(std::move(labels), k);
}

std::vector<std::vector<std::size_t>> Partition::clusters() const {
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < labels_.size(); ++i)
        out[static_cast<std::size_t>(labels_[i] - 1)].push_back(i);
    return out;
}

}  // namespace tsc
