#include "entcorr/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "engine.hpp"

namespace entcorr {

namespace {

struct UnionFind {
    std::vector<int> parent, size;

    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void merge(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (size[x] < size[y]) std::swap(x, y);
        parent[y] = x;
        size[x] += size[y];
    }
    bool connected(int x, int y) { return find(x) == find(y); }
};

// Visits k-element subsets of {1..n} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
        visit(subset);
        int i = k - 1;
        while (i >= 0 && subset[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

// max |M'| test with early exit; values match tensor_scan bit for bit.
bool correlated_serial(detail::CorrelationEngine& engine,
                       const std::vector<int>& subset, double eps) {
    const std::size_t k = subset.size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= 3;
    std::vector<AxisEntry> entries(k);
    for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t rest = flat;
        for (std::size_t i = k; i-- > 0;) {
            entries[i] = {subset[i], static_cast<Axis>(rest % 3)};
            rest /= 3;
        }
        if (std::abs(engine.m_prime(entries)) > eps) return true;
    }
    return false;
}

}  // namespace

bool same_blocks(const EntanglementPartition& a, const EntanglementPartition& b) {
    return a.n_qubits == b.n_qubits && a.blocks == b.blocks;
}

std::string ClassLabel::to_string() const {
    switch (kind) {
        case Kind::TotallyEntangled: return "TotallyEntangled";
        case Kind::CompletelySeparable: return "CompletelySeparable";
        case Kind::PartiallySeparable: break;
    }
    std::string s = "PartiallySeparable(";
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(block_sizes[i]);
    }
    s += ')';
    return s;
}

bool is_correlated(const PureState& state, const std::vector<int>& subset,
                   double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    const auto tensor = tensor_scan(state, subset, TensorKind::MPrime, {eps, false});
    return max_abs(tensor) > eps;
}

EntanglementPartition finest_partition(const PureState& state,
                                       const ClassifyOptions& opts) {
    if (opts.epsilon <= 0) throw std::invalid_argument("eps must be positive");
    const int n = state.n_qubits();
    if (n > opts.max_qubits)
        throw std::invalid_argument(
            "classification at n = " + std::to_string(n) + " exceeds the limit " +
            std::to_string(opts.max_qubits) + "; the subset scan is exponential");

    UnionFind uf(n);
    if (n >= 2) {
        detail::CorrelationEngine engine(state);
        for (int k = n; k >= 2; --k) {
            // collect merges per tier, apply in subset order (deterministic
            // regardless of how the scans themselves are executed)
            std::vector<std::vector<int>> merges;
            for_each_subset(n, k, [&](const std::vector<int>& subset) {
                bool same = true;
                for (std::size_t i = 1; i < subset.size(); ++i)
                    if (!uf.connected(subset[0] - 1, subset[i] - 1)) { same = false; break; }
                if (same) return;  // already inside one confirmed block
                const bool hit =
                    opts.parallel
                        ? max_abs(tensor_scan(state, subset, TensorKind::MPrime,
                                              {opts.epsilon, true})) > opts.epsilon
                        : correlated_serial(engine, subset, opts.epsilon);
                if (hit) merges.push_back(subset);
            });
            for (const auto& subset : merges)
                for (std::size_t i = 1; i < subset.size(); ++i)
                    uf.merge(subset[0] - 1, subset[i] - 1);
        }
    }

    std::vector<std::vector<int>> blocks;
    std::vector<int> root_block(n, -1);
    for (int q = 1; q <= n; ++q) {
        const int root = uf.find(q - 1);
        if (root_block[root] < 0) {
            root_block[root] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[root_block[root]].push_back(q);
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return EntanglementPartition{n, std::move(blocks), opts.epsilon};
}

ClassLabel label(const EntanglementPartition& partition) {
    ClassLabel out;
    out.block_sizes.reserve(partition.blocks.size());
    for (const auto& block : partition.blocks)
        out.block_sizes.push_back(static_cast<int>(block.size()));
    std::sort(out.block_sizes.rbegin(), out.block_sizes.rend());
    if (out.block_sizes.front() == 1)
        out.kind = ClassLabel::Kind::CompletelySeparable;
    else if (out.block_sizes.size() == 1)
        out.kind = ClassLabel::Kind::TotallyEntangled;
    else
        out.kind = ClassLabel::Kind::PartiallySeparable;
    return out;
}

std::vector<Witness> witnesses(const PureState& state,
                               const EntanglementPartition& partition) {
    std::vector<Witness> out;
    for (const auto& block : partition.blocks) {
        if (block.size() < 2) continue;
        const auto tensor =
            tensor_scan(state, block, TensorKind::MPrime, {partition.epsilon, false});
        std::size_t best = 0;
        for (std::size_t i = 1; i < tensor.values.size(); ++i)
            if (std::abs(tensor.values[i]) > std::abs(tensor.values[best])) best = i;
        out.push_back(Witness{block,
                              CorrelationTensor::axes_string(best, block.size()),
                              tensor.values[best]});
    }
    return out;
}

}  // namespace entcorr
