// state.hpp
// Pure N-qubit states: construction, named example states, tensor products,
// local unitaries and raw Pauli expectation values.
//
// Index convention: amplitudes are stored in basis-index order with qubit 1
// as the most significant bit (big-endian), so |q1 q2 ... qN> sits at index
// (q1<<(N-1)) | ... | qN. Qubit labels are 1-based throughout the public API.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entcorr {

using cplx = std::complex<double>;

// Construction guard: subset/tensor scans downstream are exponential, this
// keeps worst-case runs desk scale. Overridable per call.
inline constexpr int kDefaultMaxQubits = 12;

// Norm tolerance on external input (file data carries fewer digits than
// internal arithmetic) versus the internal invariant.
inline constexpr double kInputNormTol = 1e-6;
inline constexpr double kNormTol = 1e-9;

enum class Axis : int { X = 0, Y = 1, Z = 2 };

char to_char(Axis a);
Axis axis_from_char(char c);

// One (qubit, Pauli axis) factor of a product observable.
using AxisEntry = std::pair<int, Axis>;

class PureState {
public:
    // Validates dimension and normalization; with renormalize=true a nonzero
    // vector of any norm is accepted and scaled to unit norm.
    static PureState make(int n_qubits, std::vector<cplx> amplitudes,
                          bool renormalize = false,
                          int max_qubits = kDefaultMaxQubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    const cplx& amplitude(std::size_t basis_index) const;

    double norm() const;

    // Bit position of a 1-based qubit label inside a basis index.
    int bit_position(int qubit) const { return n_qubits_ - qubit; }
    bool bit_value(std::size_t basis_index, int qubit) const {
        return (basis_index >> bit_position(qubit)) & 1u;
    }

private:
    PureState(int n_qubits, std::vector<cplx> amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    int n_qubits_;
    std::vector<cplx> amplitudes_;
};

// Single-qubit unitary acting on one labeled qubit. matrix is row-major 2x2.
struct LocalUnitary {
    int qubit;
    std::array<cplx, 4> matrix;

    // Throws unless matrix is unitary within 1e-12.
    static LocalUnitary make(int qubit, const std::array<cplx, 4>& matrix);

    // max |U^dag U - I| entry
    double unitarity_defect() const;
};

PureState make_state(int n_qubits, std::vector<cplx> amplitudes,
                     bool renormalize = false,
                     int max_qubits = kDefaultMaxQubits);

// |bits>, e.g. "0101" -> 4-qubit basis state
PureState basis_state(std::string_view bits);
// variant 1..4 -> Phi+, Phi-, Psi+, Psi-
PureState bell_state(int variant);
PureState ghz_state(int n_qubits);
PureState w_state(int n_qubits);
// uniform superposition of all weight-k basis strings
PureState dicke_state(int n_qubits, int k);
// (|0000> + |0011> + |1100> - |1111>)/2
PureState phi4_cluster_state();

// Parses the generator syntax used by the CLI: "ghz:4", "w:4", "dicke:4:2",
// "bell:1".."bell:4", "phi4cluster", "basis:0101".
PureState named_state(std::string_view name);

// Qubit labels of b are shifted up by a.n_qubits().
PureState tensor_product(const PureState& a, const PureState& b,
                         int max_qubits = kDefaultMaxQubits);

PureState apply_local_unitary(const PureState& state, const LocalUnitary& u);

// perm maps old labels to new ones: perm[q-1] is the new label of qubit q.
PureState permute_qubits(const PureState& state, const std::vector<int>& perm);

// Haar-distributed 2x2 unitary, deterministic per seed.
LocalUnitary random_local_unitary(int qubit, std::uint64_t seed);

// <Psi| prod sigma_axis(qubit) |Psi> with identity on unassigned qubits.
// Entries need not be sorted but labels must be distinct and in range.
// Empty assignment gives 1.
double pauli_expectation(const PureState& state,
                         const std::vector<AxisEntry>& assignment);

// Test/verification plumbing: random states with known product structure.
PureState haar_random_state(int n_qubits, std::uint64_t seed);

struct PlantedState {
    PureState state;
    // true product structure; blocks sorted, ordered by first label
    std::vector<std::vector<int>> blocks;
};

// Tensor product of independently Haar-random blocks (sizes 1..max_block,
// each multi-qubit block guaranteed solidly entangled), followed by a random
// relabeling of the qubits. Deterministic per seed.
PlantedState random_planted_state(int n_qubits, std::uint64_t seed,
                                  int max_block = 4);

}  // namespace entcorr
