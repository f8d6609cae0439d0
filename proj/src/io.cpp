#include "entcorr/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace entcorr {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// always >= 15 significant digits, round-trip exact for doubles
std::string sci17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string sci15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.14e", v);
    return buf;
}

}  // namespace

StateDocument parse_state_json(const std::string& text, bool renormalize,
                               int max_qubits) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed state JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("state JSON must be an object");
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer())
        throw std::invalid_argument("state JSON needs an integer n_qubits");
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
        throw std::invalid_argument("state JSON needs an amplitudes array");
    const int n = doc["n_qubits"].get<int>();
    std::vector<cplx> amps;
    amps.reserve(doc["amplitudes"].size());
    for (const auto& pair : doc["amplitudes"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number())
            throw std::invalid_argument("each amplitude must be a [re, im] pair");
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    std::optional<std::string> label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string())
            throw std::invalid_argument("label must be a string");
        label = doc["label"].get<std::string>();
    }
    return StateDocument{PureState::make(n, std::move(amps), renormalize, max_qubits),
                         std::move(label)};
}

StateDocument read_state_file(const std::filesystem::path& path, bool renormalize,
                              int max_qubits) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open state file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str(), renormalize, max_qubits);
}

std::string state_to_json(const StateDocument& doc) {
    std::ostringstream out;
    out << "{\n  \"n_qubits\": " << doc.state.n_qubits() << ",\n";
    if (doc.label)
        out << "  \"label\": " << json(*doc.label).dump() << ",\n";
    out << "  \"amplitudes\": [\n";
    const auto& amps = doc.state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out << "    [" << sci17(amps[i].real()) << ", " << sci17(amps[i].imag()) << "]";
        if (i + 1 < amps.size()) out << ",";
        out << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

void write_state_file(const std::filesystem::path& path, const StateDocument& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + path.string());
    out << state_to_json(doc);
}

std::string tensor_to_json(const CorrelationTensor& tensor) {
    ordered_json doc;
    doc["subset"] = tensor.subset;
    doc["kind"] = to_string(tensor.kind);
    doc["values"] = tensor.values;
    doc["epsilon"] = tensor.epsilon;
    return doc.dump(2) + "\n";
}

std::string classification_to_json(const EntanglementPartition& partition,
                                   const ClassLabel& cls,
                                   const std::vector<Witness>& witness) {
    ordered_json doc;
    doc["blocks"] = partition.blocks;
    doc["label"] = cls.to_string();
    doc["epsilon"] = partition.epsilon;
    doc["witness"] = ordered_json::array();
    for (const auto& w : witness) {
        ordered_json entry;
        entry["subset"] = w.subset;
        entry["axes"] = w.axes;
        entry["value"] = w.value;
        doc["witness"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string measure_to_json(const MeasureReport& report, bool include_normalized) {
    ordered_json doc;
    doc["subset"] = report.subset;
    doc["raw"] = report.raw;
    if (include_normalized) {
        doc["normalized"] = report.normalized;
        doc["reference"] = report.reference;
    } else {
        doc["normalized"] = nullptr;
        doc["reference"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

std::string werner_to_csv(const std::vector<WernerPoint>& points) {
    std::string out = "F,max_abs_m\n";
    for (const auto& p : points)
        out += sci15(p.fidelity) + "," + sci15(p.max_abs_m) + "\n";
    return out;
}

}  // namespace entcorr
