#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "permspec/io.hpp"

namespace permspec::reports {

using io::Json;

struct AnalyzeOptions {
  double tol = 1e-9;           // decision tolerance (densities, PP_n rounding)
  double unitary_tol = 1e-8;   // trace-norm unitarity gate
  std::optional<std::int64_t> max_k;  // default: n
  /// Promise that the true densities are supported in {1..declared_support};
  /// permutation inputs implicitly declare their own n.
  std::optional<std::int64_t> declared_support;
};

/// Full decision pipeline on one input (matrix JSON or permutation line):
/// unitarity, moments, inverted densities, the conjugacy verdict, PP_n
/// membership when enough moments exist, and the mixture recovery.
/// Permutation inputs take the exact combinatorial route; the float route is
/// the oracle for matrices only.
Json analyze(const std::string& input_text, const AnalyzeOptions& options = {});

Json invert(const std::string& moments_json_text, std::int64_t upto, double tol);

struct ConstructOutput {
  std::string permutation_line;
  Json report;
};

ConstructOutput construct(const std::string& densities_spec, std::int64_t n);

struct MeasureOutput {
  bool has_histogram = false;
  std::string csv;
  Json report;
};

/// Input is a mixture JSON ("coeffs" present) or a moment JSON ("K" present).
MeasureOutput measure(const std::string& input_text, std::int64_t bins,
                      std::int64_t atom_cutoff, double tol);

struct ExampleOutput {
  Json primary;              // matrix JSON fed to the other commands
  std::optional<Json> c, d;  // the factors, for the circulant pair
};

/// kind is one of "circulant-pair" (emits the product c*d), "cycle",
/// "identity".
ExampleOutput example(const std::string& kind, std::int64_t n, std::int64_t root_index = 1);

Json conjtest(const std::string& a_text, const std::string& b_text, double tol,
              std::optional<std::int64_t> max_k = std::nullopt);

}  // namespace permspec::reports
