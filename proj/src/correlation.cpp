#include "entcorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "engine.hpp"

namespace entcorr {

namespace detail {

double CorrelationEngine::lambda(int qubit, Axis axis) {
    const std::size_t slot = 3 * (qubit - 1) + static_cast<int>(axis);
    if (lambdas_[slot] == kUnset)
        lambdas_[slot] = pauli_expectation(*state_, {{qubit, axis}});
    return lambdas_[slot];
}

double CorrelationEngine::raw(AssignmentCode code) {
    if (code == 0) return 1.0;
    const auto it = raw_cache_.find(code);
    if (it != raw_cache_.end()) return it->second;
    std::vector<AxisEntry> entries;
    for (int q = 1; q <= state_->n_qubits(); ++q) {
        const int bits = (code >> (2 * (q - 1))) & 3;
        if (bits != 0) entries.emplace_back(q, static_cast<Axis>(bits - 1));
    }
    const double value = pauli_expectation(*state_, entries);
    raw_cache_.emplace(code, value);
    return value;
}

double CorrelationEngine::m(const std::vector<AxisEntry>& entries) {
    const std::size_t k = entries.size();
    if (k == 1) return 0.0;  // <sigma> - lambda vanishes by definition
    const AssignmentCode full = encode(entries);
    const auto it = m_cache_.find(full);
    if (it != m_cache_.end()) return it->second;

    // Inclusion-exclusion over sub-assignments:
    //   M = sum_T <prod_{T} sigma> * prod_{not T} (-lambda)
    // in fixed submask order, so results are bit-reproducible.
    double acc = 0.0;
    for (std::uint32_t t = 0; t < (std::uint32_t{1} << k); ++t) {
        AssignmentCode code = 0;
        double term = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((t >> i) & 1)
                code |= encode_entry(entries[i].first, entries[i].second);
            else
                term *= -lambda(entries[i].first, entries[i].second);
        }
        acc += term * raw(code);
    }
    m_cache_.emplace(full, acc);
    return acc;
}

const std::vector<std::vector<std::vector<int>>>& CorrelationEngine::partitions_for(
    int k) {
    const auto it = partitions_cache_.find(k);
    if (it != partitions_cache_.end()) return it->second;
    return partitions_cache_.emplace(k, canonical_partitions_min2(k)).first->second;
}

double CorrelationEngine::m_prime(const std::vector<AxisEntry>& entries) {
    const std::size_t k = entries.size();
    if (k < 4) return m(entries);  // no partitions into two blocks of >= 2
    const AssignmentCode full = encode(entries);
    const auto it = mp_cache_.find(full);
    if (it != mp_cache_.end()) return it->second;

    double value = m(entries);
    std::vector<AxisEntry> block_entries;
    for (const auto& partition : partitions_for(static_cast<int>(k))) {
        double prod = 1.0;
        for (const auto& block : partition) {
            block_entries.clear();
            for (int pos : block) block_entries.push_back(entries[pos]);
            prod *= m_prime(block_entries);
            if (prod == 0.0) break;
        }
        value -= prod;
    }
    mp_cache_.emplace(full, value);
    return value;
}

namespace {

void extend_partition(int k, std::vector<bool>& used,
                      std::vector<std::vector<int>>& current,
                      std::vector<std::vector<std::vector<int>>>& out) {
    int first = -1;
    for (int i = 0; i < k; ++i)
        if (!used[i]) { first = i; break; }
    if (first < 0) {
        if (current.size() >= 2) out.push_back(current);
        return;
    }
    std::vector<int> rest;
    for (int i = first + 1; i < k; ++i)
        if (!used[i]) rest.push_back(i);
    const int r = static_cast<int>(rest.size());
    if (r == 0) return;  // 'first' would be a singleton
    // choose nonempty companions for 'first' (block size >= 2)
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << r); ++mask) {
        std::vector<int> block{first};
        for (int i = 0; i < r; ++i)
            if ((mask >> i) & 1) block.push_back(rest[i]);
        for (int i : block) used[i] = true;
        current.push_back(block);
        extend_partition(k, used, current, out);
        current.pop_back();
        for (int i : block) used[i] = false;
    }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> canonical_partitions_min2(int k) {
    std::vector<std::vector<std::vector<int>>> out;
    if (k < 4) return out;  // no way to form two blocks of size >= 2
    std::vector<bool> used(k, false);
    std::vector<std::vector<int>> current;
    extend_partition(k, used, current, out);
    return out;
}

}  // namespace detail

void PauliAssignment::validate(int n_qubits) const {
    if (entries.empty()) throw std::invalid_argument("empty assignment");
    int prev = 0;
    for (const auto& [q, axis] : entries) {
        (void)axis;
        if (q <= prev)
            throw std::invalid_argument("assignment labels must be strictly increasing");
        if (q > n_qubits) throw std::out_of_range("qubit label out of range");
        prev = q;
    }
}

PauliAssignment PauliAssignment::of(std::vector<AxisEntry> entries) {
    PauliAssignment a{std::move(entries)};
    int prev = 0;
    for (const auto& [q, axis] : a.entries) {
        (void)axis;
        if (q <= prev)
            throw std::invalid_argument("assignment labels must be strictly increasing");
        prev = q;
    }
    return a;
}

PauliAssignment PauliAssignment::from_axes(const std::vector<int>& qubits,
                                           std::string_view axes) {
    if (qubits.size() != axes.size())
        throw std::invalid_argument("qubit and axis counts differ");
    std::vector<AxisEntry> entries;
    entries.reserve(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i)
        entries.emplace_back(qubits[i], axis_from_char(axes[i]));
    return of(std::move(entries));
}

std::string to_string(TensorKind kind) {
    return kind == TensorKind::M ? "M" : "MPrime";
}

std::size_t CorrelationTensor::index_of(const std::vector<Axis>& axes) const {
    if (axes.size() != subset.size())
        throw std::invalid_argument("axis count does not match subset size");
    std::size_t flat = 0;
    for (Axis a : axes) flat = flat * 3 + static_cast<std::size_t>(a);
    return flat;
}

double CorrelationTensor::at(std::string_view axes) const {
    std::vector<Axis> ax;
    ax.reserve(axes.size());
    for (char c : axes) ax.push_back(axis_from_char(c));
    return values.at(index_of(ax));
}

std::string CorrelationTensor::axes_string(std::size_t flat_index, std::size_t k) {
    std::string s(k, 'x');
    for (std::size_t i = k; i-- > 0;) {
        s[i] = "xyz"[flat_index % 3];
        flat_index /= 3;
    }
    return s;
}

double lambda_value(const PureState& state, int qubit, Axis axis) {
    return pauli_expectation(state, {{qubit, axis}});
}

double m_value(const PureState& state, const PauliAssignment& assignment) {
    assignment.validate(state.n_qubits());
    detail::CorrelationEngine engine(state);
    return engine.m(assignment.entries);
}

std::vector<BlockPartition> partitions_min2(const std::vector<int>& positions) {
    const int k = static_cast<int>(positions.size());
    if (k < 2) throw std::invalid_argument("need at least 2 positions");
    std::vector<BlockPartition> out;
    for (const auto& canonical : detail::canonical_partitions_min2(k)) {
        BlockPartition p;
        for (const auto& block : canonical) {
            std::vector<int> labels;
            labels.reserve(block.size());
            for (int pos : block) labels.push_back(positions[pos]);
            p.blocks.push_back(std::move(labels));
        }
        out.push_back(std::move(p));
    }
    return out;
}

double m_prime_value(const PureState& state, const PauliAssignment& assignment) {
    assignment.validate(state.n_qubits());
    if (assignment.size() < 2)
        throw std::invalid_argument("M' needs at least 2 entries");
    detail::CorrelationEngine engine(state);
    return engine.m_prime(assignment.entries);
}

namespace {

void validate_subset(const std::vector<int>& subset, int n_qubits) {
    if (subset.size() < 2) throw std::invalid_argument("subset needs at least 2 qubits");
    int prev = 0;
    for (int q : subset) {
        if (q <= prev)
            throw std::invalid_argument("subset labels must be strictly increasing");
        if (q > n_qubits) throw std::out_of_range("qubit label out of range");
        prev = q;
    }
}

std::vector<AxisEntry> entries_for(const std::vector<int>& subset, std::size_t flat) {
    const std::size_t k = subset.size();
    std::vector<AxisEntry> entries(k);
    for (std::size_t i = k; i-- > 0;) {
        entries[i] = {subset[i], static_cast<Axis>(flat % 3)};
        flat /= 3;
    }
    return entries;
}

}  // namespace

CorrelationTensor tensor_scan(const PureState& state, std::vector<int> subset,
                              TensorKind kind, const ScanOptions& opts) {
    validate_subset(subset, state.n_qubits());
    const std::size_t k = subset.size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= 3;

    std::vector<double> values(count);
    auto fill_range = [&](std::size_t lo, std::size_t hi) {
        detail::CorrelationEngine engine(state);
        for (std::size_t flat = lo; flat < hi; ++flat) {
            const auto entries = entries_for(subset, flat);
            values[flat] = kind == TensorKind::M ? engine.m(entries)
                                                 : engine.m_prime(entries);
        }
    };

    if (!opts.parallel || count < 256) {
        fill_range(0, count);
    } else {
        const std::size_t workers =
            std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 16);
        const std::size_t chunk = (count + workers - 1) / workers;
        std::vector<std::future<void>> futures;
        for (std::size_t lo = 0; lo < count; lo += chunk) {
            const std::size_t hi = std::min(lo + chunk, count);
            futures.push_back(std::async(std::launch::async, fill_range, lo, hi));
        }
        for (auto& f : futures) f.get();
    }
    return CorrelationTensor{std::move(subset), kind, std::move(values), opts.epsilon};
}

double max_abs(const CorrelationTensor& tensor) {
    double best = 0.0;
    for (double v : tensor.values) best = std::max(best, std::abs(v));
    return best;
}

}  // namespace entcorr
