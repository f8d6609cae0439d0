// entcorr CLI: state generation, correlation tensor dumps, entanglement
// classification, B-measure reports, classifier-vs-oracle verification and
// the Werner-state scan. Exit codes: 0 success, 2 validation error,
// 1 internal error or failed verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "entcorr/classify.hpp"
#include "entcorr/correlation.hpp"
#include "entcorr/io.hpp"
#include "entcorr/measure.hpp"
#include "entcorr/mixed.hpp"
#include "entcorr/oracle.hpp"
#include "entcorr/state.hpp"

namespace {

using entcorr::PureState;

std::vector<int> parse_subset(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad subset element '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty subset");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            throw std::invalid_argument("subset labels must be strictly increasing");
    return out;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start = 0, stop = 0;
        int count = 0;
        char c1 = 0, c2 = 0;
        std::stringstream ss(text);
        if (!(ss >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' ||
            count < 1 || !(ss >> std::ws).eof())
            throw std::invalid_argument("grid must be start:stop:count or a comma list");
        for (int i = 0; i < count; ++i)
            out.push_back(count == 1 ? start
                                     : start + (stop - start) * i / (count - 1));
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid element '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty grid");
    return out;
}

std::vector<int> default_subset(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return all;
}

entcorr::StateDocument load_input(const std::string& input, const std::string& name,
                                  bool renormalize) {
    if (!input.empty() && !name.empty())
        throw std::invalid_argument("give either --input or --name, not both");
    if (!input.empty()) return entcorr::read_state_file(input, renormalize);
    if (!name.empty())
        return entcorr::StateDocument{entcorr::named_state(name), std::string(name)};
    throw std::invalid_argument("an input state is required (--input or --name)");
}

void emit(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + output);
    out << text;
}

int run_verify(int trials, int max_qubits, std::uint64_t seed, double eps,
               const std::string& output) {
    if (trials < 1) throw std::invalid_argument("--random must be >= 1");
    if (max_qubits < 2) throw std::invalid_argument("--max-qubits must be >= 2");

    std::mt19937_64 master(seed);
    int agreements = 0;
    nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
    for (int t = 0; t < trials; ++t) {
        std::uniform_int_distribution<int> pick_n(2, max_qubits);
        const int n = pick_n(master);
        const auto planted = entcorr::random_planted_state(n, master());
        const auto found =
            entcorr::finest_partition(planted.state, {eps, /*max_qubits=*/12});
        const auto truth = entcorr::oracle_partition(planted.state, eps);
        if (entcorr::same_blocks(found, truth)) {
            ++agreements;
        } else {
            nlohmann::ordered_json entry;
            entry["trial"] = t;
            entry["n_qubits"] = n;
            entry["planted"] = planted.blocks;
            entry["classifier"] = found.blocks;
            entry["oracle"] = truth.blocks;
            mismatches.push_back(std::move(entry));
        }
    }
    std::cout << "agreement: " << agreements << "/" << trials << "\n";
    if (!output.empty()) {
        nlohmann::ordered_json report;
        report["trials"] = trials;
        report["max_qubits"] = max_qubits;
        report["epsilon"] = eps;
        report["seed"] = seed;
        report["agreements"] = agreements;
        report["mismatches"] = std::move(mismatches);
        emit(output, report.dump(2) + "\n");
    }
    return agreements == trials ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiqubit entanglement classification via Pauli correlation tensors"};
    app.require_subcommand(1);

    std::string input, name, output, subset_text, grid_text = "0:1:21";
    double eps = 1e-9;
    bool prime = false, normalize = false, renormalize = false;
    int random_trials = 100, max_qubits = 0;
    std::uint64_t seed = 1;

    auto* cmd_state = app.add_subcommand("state", "generate a named state file");
    cmd_state->add_option("--name", name, "state name, e.g. ghz:4, dicke:4:2")
        ->required();
    cmd_state->add_option("--output", output, "output path (default: stdout)");

    auto* cmd_tensor = app.add_subcommand("tensor", "dump a correlation tensor");
    cmd_tensor->add_option("--input", input, "state JSON file");
    cmd_tensor->add_option("--name", name, "named state instead of --input");
    cmd_tensor->add_option("--subset", subset_text, "comma-separated labels, e.g. 1,2,3");
    cmd_tensor->add_flag("--prime", prime, "dump M' instead of M");
    cmd_tensor->add_option("--eps", eps, "zero threshold recorded with the tensor");
    cmd_tensor->add_flag("--renormalize", renormalize, "renormalize the input state");
    cmd_tensor->add_option("--output", output, "output path (default: stdout)");

    auto* cmd_classify = app.add_subcommand("classify", "finest entanglement partition");
    cmd_classify->add_option("--input", input, "state JSON file");
    cmd_classify->add_option("--name", name, "named state instead of --input");
    cmd_classify->add_option("--eps", eps, "zero threshold (default 1e-9)");
    cmd_classify->add_option("--max-qubits", max_qubits,
                             "fail-fast scan limit (default 10)");
    cmd_classify->add_flag("--renormalize", renormalize, "renormalize the input state");
    cmd_classify->add_option("--output", output, "output path (default: stdout)");

    auto* cmd_measure = app.add_subcommand("measure", "B-measure report");
    cmd_measure->add_option("--input", input, "state JSON file");
    cmd_measure->add_option("--name", name, "named state instead of --input");
    cmd_measure->add_option("--subset", subset_text, "comma-separated labels");
    cmd_measure->add_flag("--normalize", normalize, "include the GHZ-normalized value");
    cmd_measure->add_flag("--renormalize", renormalize, "renormalize the input state");
    cmd_measure->add_option("--output", output, "output path (default: stdout)");

    auto* cmd_verify =
        app.add_subcommand("verify", "classifier vs purity oracle on planted states");
    cmd_verify->add_option("--random", random_trials, "number of random trials");
    cmd_verify->add_option("--max-qubits", max_qubits, "largest state size (default 5)");
    cmd_verify->add_option("--seed", seed, "RNG seed");
    cmd_verify->add_option("--eps", eps, "zero threshold (default 1e-7)");
    cmd_verify->add_option("--output", output, "JSON report path");

    auto* cmd_werner = app.add_subcommand("werner", "max |M'| over a fidelity grid");
    cmd_werner->add_option("--fidelity-grid", grid_text,
                           "start:stop:count or comma list (default 0:1:21)");
    cmd_werner->add_option("--output", output, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_state->parsed()) {
            const PureState state = entcorr::named_state(name);
            emit(output, entcorr::state_to_json({state, name}));
            return 0;
        }
        if (cmd_tensor->parsed()) {
            const auto doc = load_input(input, name, renormalize);
            const auto subset = subset_text.empty() ? default_subset(doc.state.n_qubits())
                                                    : parse_subset(subset_text);
            const auto tensor = entcorr::tensor_scan(
                doc.state, subset,
                prime ? entcorr::TensorKind::MPrime : entcorr::TensorKind::M, {eps});
            emit(output, entcorr::tensor_to_json(tensor));
            return 0;
        }
        if (cmd_classify->parsed()) {
            const auto doc = load_input(input, name, renormalize);
            entcorr::ClassifyOptions opts;
            opts.epsilon = eps;
            if (max_qubits > 0) opts.max_qubits = max_qubits;
            const auto partition = entcorr::finest_partition(doc.state, opts);
            emit(output, entcorr::classification_to_json(
                             partition, entcorr::label(partition),
                             entcorr::witnesses(doc.state, partition)));
            return 0;
        }
        if (cmd_measure->parsed()) {
            const auto doc = load_input(input, name, renormalize);
            const auto subset = subset_text.empty() ? default_subset(doc.state.n_qubits())
                                                    : parse_subset(subset_text);
            const auto report = entcorr::measure_report(doc.state, subset);
            emit(output, entcorr::measure_to_json(report, normalize));
            return 0;
        }
        if (cmd_verify->parsed()) {
            if (!cmd_verify->count("--eps")) eps = 1e-7;
            if (max_qubits == 0) max_qubits = 5;
            return run_verify(random_trials, max_qubits, seed, eps, output);
        }
        if (cmd_werner->parsed()) {
            const auto points = entcorr::werner_scan(parse_grid(grid_text));
            emit(output, entcorr::werner_to_csv(points));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
