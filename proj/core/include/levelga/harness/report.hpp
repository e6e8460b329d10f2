#pragma once

#include <optional>
#include <string>

#include "levelga/harness/experiment.hpp"

namespace levelga::harness {

/// Shortest decimal rendering that parses back to exactly the same double
/// ("nan" for missing statistics). All emitters use it, so identical results
/// are byte-identical files.
std::string format_double(double value);

/// Summary table, one row per size:
///   family,n,lambda,k_or_mu_or_eta,p_m,p_c,trials,censored,mean_T,median_T,ci_lo,ci_hi
std::string to_csv(const ExperimentResult& result);

/// Raw per-trial companion: family,n,trial,T,censored. Censored rows carry
/// the evaluations consumed before the cap.
std::string to_trials_csv(const ExperimentResult& result);

/// Structured document with the full rows (raw trials included) and the
/// scaling fit when one was computed.
std::string to_json(const ExperimentResult& result,
                    const std::optional<ScalingFit>& fit = std::nullopt);

/// Inverse of to_csv for the tabular subset; raw trial data is not part of
/// the summary format. Throws std::invalid_argument on schema mismatch.
ExperimentResult parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace levelga::harness
