#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "permspec/cmatrix.hpp"
#include "permspec/measures.hpp"
#include "permspec/moments.hpp"
#include "permspec/permutation.hpp"

namespace permspec::io {

/// Reports keep insertion order so repeated runs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Matrix wire format: {"n": int, "re": [[..]], "im": [[..]]}, row-major.
Json matrix_to_json(const cmatrix::ComplexMatrix& m);
cmatrix::ComplexMatrix matrix_from_json(const Json& j);

/// A matrix input is either the JSON form or a one-line permutation, which is
/// promoted on demand. Keeping the permutation form visible lets callers take
/// the exact combinatorial route when they have one.
using MatrixInput = std::variant<cmatrix::ComplexMatrix, permutations::Permutation>;
MatrixInput parse_matrix_input(const std::string& text);

// Moment wire format: {"K": int, "re": [..], "im": [..]}.
Json moments_to_json(const MomentSequence& m);
MomentSequence moments_from_json(const Json& j);

// Mixture wire format: {"coeffs": {"3": 0.5, ..}, "inf": 0.5}.
Json measure_to_json(const measures::CircleMeasure& mu);
measures::CircleMeasure measure_from_json(const Json& j);

// Cycle type as {"i": multiplicity}.
Json cycle_type_to_json(const permutations::CycleType& t);

// Densities (doubles) as {"i": c_i}; unset c_inf serializes as null.
Json densities_to_json(const permutations::RealCycleDensities& d);

/// CLI densities literal: "2:0.5,3:1/4", exact parses of decimal or
/// fraction weights.
permutations::CycleDensities parse_densities_spec(const std::string& spec);

/// CSV with header bin_start_radians,bin_end_radians,mass; %.17g floats.
std::string histogram_to_csv(const std::vector<measures::HistogramBin>& bins);

Json parse_json(const std::string& text);

}  // namespace permspec::io
