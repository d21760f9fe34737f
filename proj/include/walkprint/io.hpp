#pragma once

#include <string>

#include "walkprint/montecarlo.hpp"
#include "walkprint/reconstruct.hpp"
#include "walkprint/rep_bridge.hpp"
#include "walkprint/returns.hpp"
#include "walkprint/spectral.hpp"
#include "walkprint/walk.hpp"

namespace walkprint {

// Walk file: {"entries": [{"step": -1, "prob": "1/2"}, ...]}.
// Probabilities must be exact "p/q" strings; numeric literals are rejected.
StepDistribution parse_walk_json(const std::string& text);
StepDistribution read_walk_file(const std::string& path);
std::string walk_to_json(const StepDistribution& w);
void write_walk_file(const std::string& path, const StepDistribution& w);

// Rep file: {"weights": [{"weight": -1, "mult": 1}, ...]}.
WeightDecomposition parse_rep_json(const std::string& text);
WeightDecomposition read_rep_file(const std::string& path);
std::string rep_to_json(const WeightDecomposition& rep);

// Dims file: {"dims": [1, 3, 7, ...]}. Entries beyond the integer range of
// JSON must be decimal strings; the emitter applies the same rule.
InvariantDimensionSequence parse_dims_json(const std::string& text);
InvariantDimensionSequence read_dims_file(const std::string& path);
std::string dims_to_json(const InvariantDimensionSequence& dims);

// Problem file: {"targets": ["1/2", ...], "support_bound": 1,
//                "tolerance": 1e-8, "require_primitive": false}.
ReconstructionProblem parse_problem_json(const std::string& text);
ReconstructionProblem read_problem_file(const std::string& path);

// CSV rows (n, c_n as "p/q", c_n as decimal to 12 significant digits).
std::string return_sequence_csv(const ReturnSequence& seq);

// One JSON record per line.
std::string return_sequence_ndjson(const ReturnSequence& seq);
std::string diagnostics_ndjson(const GrowthDiagnostics& diag);
std::string spectral_report_ndjson(const SpectralReport& report);
std::string estimate_ndjson(const SimulationEstimate& est);
std::string consistency_ndjson(const ConsistencyResult& result);
std::string reconstruction_ndjson(const ReconstructionResult& result,
                                  const VerificationReport& verification);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace walkprint
