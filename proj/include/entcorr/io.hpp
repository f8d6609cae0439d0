// io.hpp
// File formats and report serialization.
//
// State files: {"n_qubits": n, "amplitudes": [[re, im], ...], "label": "..."}
// with amplitudes in basis-index order (big-endian) and at least 15
// significant digits on write. All writers are byte-deterministic.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "entcorr/classify.hpp"
#include "entcorr/correlation.hpp"
#include "entcorr/measure.hpp"
#include "entcorr/mixed.hpp"
#include "entcorr/state.hpp"

namespace entcorr {

struct StateDocument {
    PureState state;
    std::optional<std::string> label;
};

StateDocument parse_state_json(const std::string& text,
                               bool renormalize = false,
                               int max_qubits = kDefaultMaxQubits);
StateDocument read_state_file(const std::filesystem::path& path,
                              bool renormalize = false,
                              int max_qubits = kDefaultMaxQubits);

std::string state_to_json(const StateDocument& doc);
void write_state_file(const std::filesystem::path& path,
                      const StateDocument& doc);

// {"subset": [...], "kind": "M"|"MPrime", "values": [...]}
std::string tensor_to_json(const CorrelationTensor& tensor);

// {"blocks": [[...],...], "label": "...", "epsilon": e, "witness": [...]}
std::string classification_to_json(const EntanglementPartition& partition,
                                   const ClassLabel& cls,
                                   const std::vector<Witness>& witness);

// {"subset": [...], "raw": r, "normalized": x, "reference": g}
// Normalization is an explicit option; without it those fields are null.
std::string measure_to_json(const MeasureReport& report,
                            bool include_normalized = true);

// header "F,max_abs_m", one row per grid point, 15 significant digits
std::string werner_to_csv(const std::vector<WernerPoint>& points);

}  // namespace entcorr
