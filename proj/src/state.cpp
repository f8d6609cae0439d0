#include "entcorr/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace entcorr {

namespace {

constexpr cplx kI{0.0, 1.0};

double norm_of(const std::vector<cplx>& amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

char to_char(Axis a) {
    switch (a) {
        case Axis::X: return 'x';
        case Axis::Y: return 'y';
        case Axis::Z: return 'z';
    }
    throw std::invalid_argument("invalid axis");
}

Axis axis_from_char(char c) {
    switch (c) {
        case 'x': return Axis::X;
        case 'y': return Axis::Y;
        case 'z': return Axis::Z;
        default: throw std::invalid_argument(std::string("invalid axis char '") + c + "'");
    }
}

PureState PureState::make(int n_qubits, std::vector<cplx> amplitudes,
                          bool renormalize, int max_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
    if (n_qubits > max_qubits)
        throw std::invalid_argument("n_qubits " + std::to_string(n_qubits) +
                                    " exceeds the qubit limit " + std::to_string(max_qubits));
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (amplitudes.size() != dim)
        throw std::invalid_argument("expected " + std::to_string(dim) + " amplitudes, got " +
                                    std::to_string(amplitudes.size()));
    const double nrm = norm_of(amplitudes);
    if (nrm == 0.0) throw std::invalid_argument("zero state vector");
    if (!renormalize && std::abs(nrm - 1.0) > kInputNormTol)
        throw std::invalid_argument("state norm " + std::to_string(nrm) +
                                    " out of tolerance; pass renormalize to accept");
    // Scale so the internal invariant holds to machine precision. A vector
    // already unit within a few ulps is kept bit for bit, which makes
    // serialization round trips exact.
    if (std::abs(nrm - 1.0) > 1e-12) {
        const double inv = 1.0 / nrm;
        for (auto& a : amplitudes) a *= inv;
    }
    return PureState(n_qubits, std::move(amplitudes));
}

const cplx& PureState::amplitude(std::size_t basis_index) const {
    if (basis_index >= amplitudes_.size())
        throw std::out_of_range("basis index out of range");
    return amplitudes_[basis_index];
}

double PureState::norm() const { return norm_of(amplitudes_); }

LocalUnitary LocalUnitary::make(int qubit, const std::array<cplx, 4>& matrix) {
    if (qubit < 1) throw std::invalid_argument("qubit label must be >= 1");
    LocalUnitary u{qubit, matrix};
    if (u.unitarity_defect() > 1e-12)
        throw std::invalid_argument("matrix is not unitary within 1e-12");
    return u;
}

double LocalUnitary::unitarity_defect() const {
    // max entry of |U^dag U - I|
    const cplx a = matrix[0], b = matrix[1], c = matrix[2], d = matrix[3];
    const cplx g00 = std::conj(a) * a + std::conj(c) * c - 1.0;
    const cplx g01 = std::conj(a) * b + std::conj(c) * d;
    const cplx g10 = std::conj(b) * a + std::conj(d) * c;
    const cplx g11 = std::conj(b) * b + std::conj(d) * d - 1.0;
    return std::max({std::abs(g00), std::abs(g01), std::abs(g10), std::abs(g11)});
}

PureState make_state(int n_qubits, std::vector<cplx> amplitudes, bool renormalize,
                     int max_qubits) {
    return PureState::make(n_qubits, std::move(amplitudes), renormalize, max_qubits);
}

PureState basis_state(std::string_view bits) {
    if (bits.empty()) throw std::invalid_argument("empty bitstring");
    const int n = static_cast<int>(bits.size());
    if (n > kDefaultMaxQubits)
        throw std::invalid_argument("bitstring exceeds the qubit limit");
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstring must contain only 0 and 1");
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    std::vector<cplx> amps(std::size_t{1} << n, cplx{0.0, 0.0});
    amps[index] = 1.0;
    return PureState::make(n, std::move(amps));
}

PureState bell_state(int variant) {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<cplx> amps(4, cplx{0.0, 0.0});
    switch (variant) {
        case 1: amps[0] = r; amps[3] = r; break;   // (|00> + |11>)/sqrt2
        case 2: amps[0] = r; amps[3] = -r; break;  // (|00> - |11>)/sqrt2
        case 3: amps[1] = r; amps[2] = r; break;   // (|01> + |10>)/sqrt2
        case 4: amps[1] = r; amps[2] = -r; break;  // (|01> - |10>)/sqrt2
        default: throw std::invalid_argument("Bell variant must be 1..4");
    }
    return PureState::make(2, std::move(amps));
}

PureState ghz_state(int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
    if (n_qubits > kDefaultMaxQubits)
        throw std::invalid_argument("n_qubits exceeds the qubit limit");
    std::vector<cplx> amps(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    const double r = 1.0 / std::sqrt(2.0);
    amps.front() = r;
    amps.back() = r;
    return PureState::make(n_qubits, std::move(amps));
}

PureState w_state(int n_qubits) { return dicke_state(n_qubits, 1); }

PureState dicke_state(int n_qubits, int k) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
    if (n_qubits > kDefaultMaxQubits)
        throw std::invalid_argument("n_qubits exceeds the qubit limit");
    if (k < 0 || k > n_qubits)
        throw std::invalid_argument("Dicke weight k must satisfy 0 <= k <= n");
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<cplx> amps(dim, cplx{0.0, 0.0});
    const double r = 1.0 / std::sqrt(static_cast<double>(binomial(n_qubits, k)));
    for (std::size_t b = 0; b < dim; ++b)
        if (std::popcount(b) == k) amps[b] = r;
    return PureState::make(n_qubits, std::move(amps));
}

PureState phi4_cluster_state() {
    std::vector<cplx> amps(16, cplx{0.0, 0.0});
    amps[0b0000] = 0.5;
    amps[0b0011] = 0.5;
    amps[0b1100] = 0.5;
    amps[0b1111] = -0.5;
    return PureState::make(4, std::move(amps));
}

PureState named_state(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t colon = s.find(':', pos);
        parts.push_back(s.substr(pos, colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    auto arg_int = [&](std::size_t i) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(parts.at(i), &used);
            if (used != parts[i].size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad numeric argument in state name '" + s + "'");
        }
    };
    const std::string& kind = parts[0];
    if (kind == "ghz" && parts.size() == 2) return ghz_state(arg_int(1));
    if (kind == "w" && parts.size() == 2) return w_state(arg_int(1));
    if (kind == "dicke" && parts.size() == 3) return dicke_state(arg_int(1), arg_int(2));
    if (kind == "bell" && parts.size() == 2) return bell_state(arg_int(1));
    if (kind == "phi4cluster" && parts.size() == 1) return phi4_cluster_state();
    if (kind == "basis" && parts.size() == 2) return basis_state(parts[1]);
    throw std::invalid_argument(
        "unknown state name '" + s +
        "' (expected ghz:N, w:N, dicke:N:K, bell:1..4, phi4cluster, basis:BITS)");
}

PureState tensor_product(const PureState& a, const PureState& b, int max_qubits) {
    const int n = a.n_qubits() + b.n_qubits();
    if (n > max_qubits)
        throw std::invalid_argument("combined size " + std::to_string(n) +
                                    " exceeds the qubit limit " + std::to_string(max_qubits));
    std::vector<cplx> amps(std::size_t{1} << n);
    const std::size_t db = b.dim();
    for (std::size_t ia = 0; ia < a.dim(); ++ia)
        for (std::size_t ib = 0; ib < db; ++ib)
            amps[(ia << b.n_qubits()) | ib] = a.amplitudes()[ia] * b.amplitudes()[ib];
    return PureState::make(n, std::move(amps), false, max_qubits);
}

PureState apply_local_unitary(const PureState& state, const LocalUnitary& u) {
    if (u.qubit < 1 || u.qubit > state.n_qubits())
        throw std::out_of_range("qubit label out of range");
    if (u.unitarity_defect() > 1e-12)
        throw std::invalid_argument("matrix is not unitary within 1e-12");
    const std::size_t mask = std::size_t{1} << state.bit_position(u.qubit);
    std::vector<cplx> amps = state.amplitudes();
    const cplx m00 = u.matrix[0], m01 = u.matrix[1], m10 = u.matrix[2], m11 = u.matrix[3];
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if (b & mask) continue;
        const cplx a0 = amps[b];
        const cplx a1 = amps[b | mask];
        amps[b] = m00 * a0 + m01 * a1;
        amps[b | mask] = m10 * a0 + m11 * a1;
    }
    return PureState::make(state.n_qubits(), std::move(amps), true);
}

PureState permute_qubits(const PureState& state, const std::vector<int>& perm) {
    const int n = state.n_qubits();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size must equal n_qubits");
    std::vector<bool> seen(n + 1, false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[p])
            throw std::invalid_argument("permutation must be a bijection of 1..n");
        seen[p] = true;
    }
    std::vector<cplx> amps(state.dim());
    for (std::size_t b = 0; b < state.dim(); ++b) {
        std::size_t nb = 0;
        for (int q = 1; q <= n; ++q)
            if (state.bit_value(b, q)) nb |= std::size_t{1} << (n - perm[q - 1]);
        amps[nb] = state.amplitudes()[b];
    }
    return PureState::make(n, std::move(amps));
}

LocalUnitary random_local_unitary(int qubit, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto g = [&] { return cplx{gauss(rng), gauss(rng)}; };
    // QR of a complex Ginibre matrix with positive-diagonal R gives a
    // Haar-distributed Q; Gram-Schmidt yields that form directly.
    cplx c00 = g(), c10 = g(), c01 = g(), c11 = g();
    const double r00 = std::sqrt(std::norm(c00) + std::norm(c10));
    c00 /= r00;
    c10 /= r00;
    const cplx r01 = std::conj(c00) * c01 + std::conj(c10) * c11;
    c01 -= r01 * c00;
    c11 -= r01 * c10;
    const double r11 = std::sqrt(std::norm(c01) + std::norm(c11));
    c01 /= r11;
    c11 /= r11;
    return LocalUnitary::make(qubit, {c00, c01, c10, c11});
}

double pauli_expectation(const PureState& state,
                         const std::vector<AxisEntry>& assignment) {
    const int n = state.n_qubits();
    std::size_t flip = 0, ymask = 0, zmask = 0, seen = 0;
    for (const auto& [q, axis] : assignment) {
        if (q < 1 || q > n) throw std::out_of_range("qubit label out of range");
        const std::size_t bit = std::size_t{1} << state.bit_position(q);
        if (seen & bit) throw std::invalid_argument("duplicate qubit label in assignment");
        seen |= bit;
        switch (axis) {
            case Axis::X: flip |= bit; break;
            case Axis::Y: flip |= bit; ymask |= bit; break;
            case Axis::Z: zmask |= bit; break;
        }
    }
    // sigma_y contributes i on |0> and -i on |1>; sigma_z a sign on |1>.
    // Factoring out i^(#y) leaves a per-index sign from the y and z bits.
    const std::size_t signmask = ymask | zmask;
    const std::vector<cplx>& a = state.amplitudes();
    cplx acc{0.0, 0.0};
    for (std::size_t b = 0; b < a.size(); ++b) {
        const double sign = (std::popcount(b & signmask) & 1) ? -1.0 : 1.0;
        acc += sign * std::conj(a[b ^ flip]) * a[b];
    }
    static constexpr cplx kIPow[4] = {cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
    const cplx value = kIPow[std::popcount(ymask) & 3] * acc;
    if (std::abs(value.imag()) > 1e-12)
        throw std::logic_error("pauli expectation has imaginary residue");
    return value.real();
}

PureState haar_random_state(int n_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    for (auto& a : amps) a = cplx{gauss(rng), gauss(rng)};
    return PureState::make(n_qubits, std::move(amps), true);
}

namespace {

// tr(rho_S^2) for the block bipartition selected by row_mask (bits over the
// block's own index space).
double bipartition_purity(const std::vector<cplx>& amps, int k, std::size_t row_mask) {
    const std::size_t dim = std::size_t{1} << k;
    std::size_t dr = 1, dc = 1;
    for (int i = 0; i < k; ++i)
        ((row_mask >> i) & 1 ? dr : dc) <<= 1;
    std::vector<std::vector<cplx>> a(dr, std::vector<cplx>(dc, cplx{0, 0}));
    for (std::size_t b = 0; b < dim; ++b) {
        std::size_t r = 0, c = 0;
        for (int i = k - 1; i >= 0; --i) {
            const std::size_t bit = (b >> i) & 1;
            if ((row_mask >> i) & 1)
                r = (r << 1) | bit;
            else
                c = (c << 1) | bit;
        }
        a[r][c] = amps[b];
    }
    double purity = 0.0;
    for (std::size_t r1 = 0; r1 < dr; ++r1)
        for (std::size_t r2 = 0; r2 < dr; ++r2) {
            cplx g{0, 0};
            for (std::size_t c = 0; c < dc; ++c) g += a[r1][c] * std::conj(a[r2][c]);
            purity += std::norm(g);
        }
    return purity;
}

// Haar block that is entangled across every bipartition by a solid margin,
// so planted instances sit far from the classifier/oracle thresholds.
std::vector<cplx> solidly_entangled_block(int k, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t dim = std::size_t{1} << k;
    while (true) {
        std::vector<cplx> amps(dim);
        double nrm = 0.0;
        for (auto& a : amps) {
            a = cplx{gauss(rng), gauss(rng)};
            nrm += std::norm(a);
        }
        nrm = std::sqrt(nrm);
        for (auto& a : amps) a /= nrm;
        if (k == 1) return amps;
        bool ok = true;
        for (std::size_t mask = 1; mask + 1 < dim && ok; ++mask)
            if (bipartition_purity(amps, k, mask) > 1.0 - 1e-3) ok = false;
        if (ok) return amps;
    }
}

}  // namespace

PlantedState random_planted_state(int n_qubits, std::uint64_t seed, int max_block) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
    if (max_block < 1) throw std::invalid_argument("max_block must be positive");
    std::mt19937_64 rng(seed);

    std::vector<int> sizes;
    int remaining = n_qubits;
    while (remaining > 0) {
        std::uniform_int_distribution<int> pick(1, std::min(max_block, remaining));
        const int s = pick(rng);
        sizes.push_back(s);
        remaining -= s;
    }

    std::vector<cplx> amps{cplx{1.0, 0.0}};
    int built = 0;
    std::vector<std::vector<int>> blocks;
    for (int s : sizes) {
        const std::vector<cplx> block = solidly_entangled_block(s, rng);
        std::vector<cplx> next(amps.size() << s);
        for (std::size_t ia = 0; ia < amps.size(); ++ia)
            for (std::size_t ib = 0; ib < block.size(); ++ib)
                next[(ia << s) | ib] = amps[ia] * block[ib];
        amps = std::move(next);
        std::vector<int> labels(s);
        std::iota(labels.begin(), labels.end(), built + 1);
        blocks.push_back(std::move(labels));
        built += s;
    }
    PureState state = PureState::make(n_qubits, std::move(amps), true);

    std::vector<int> perm(n_qubits);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    state = permute_qubits(state, perm);

    for (auto& block : blocks) {
        for (int& q : block) q = perm[q - 1];
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return PlantedState{std::move(state), std::move(blocks)};
}

}  // namespace entcorr
