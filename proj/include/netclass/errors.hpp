#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netclass {

/// Error categories surfaced by the library. The CLI maps these onto
/// process exit codes (config -> 2, data -> 3, numerical -> 4).
enum class errc {
  // parsing / data
  malformed_metadata,
  malformed_row,
  count_mismatch,
  duplicate_node,
  missing_lengths,
  empty_manifest,
  data_error,
  // graph / metric preconditions
  degenerate_graph,
  // feature matrix
  unknown_feature_label,
  duplicate_label,
  degenerate_matrix,
  // dimensionality reduction / clustering
  dimension_too_large,
  too_few_points,
  too_many_clusters,
  insufficient_clusters,
  // numerics
  no_convergence,
  degenerate_regression,
  // configuration / CLI
  config_error,
  too_few_variants,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Declared row count disagrees with the parsed table. Callers replicating
/// published data may downgrade this to a warning (see ParseOptions).
class count_mismatch_error : public error {
 public:
  count_mismatch_error(std::size_t parsed, std::size_t declared,
                       const std::string& msg)
      : error(errc::count_mismatch, msg), parsed_(parsed), declared_(declared) {}

  std::size_t parsed() const noexcept { return parsed_; }
  std::size_t declared() const noexcept { return declared_; }

 private:
  std::size_t parsed_;
  std::size_t declared_;
};

/// Iterative method hit its iteration cap. Carries the iteration count so a
/// caller can decide to keep the last iterate with a warning.
class no_convergence_error : public error {
 public:
  no_convergence_error(int iterations, const std::string& msg)
      : error(errc::no_convergence, msg), iterations_(iterations) {}

  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

/// Exit code contract: 0 success, 2 config error, 3 data error,
/// 4 numerical non-convergence.
inline int exit_code_for(errc code) {
  switch (code) {
    case errc::config_error:
    case errc::unknown_feature_label:
    case errc::duplicate_label:
    case errc::too_few_variants:
      return 2;
    case errc::no_convergence:
      return 4;
    default:
      return 3;
  }
}

}  // namespace netclass
