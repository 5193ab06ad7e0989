#include "permspec/reports.hpp"

#include <algorithm>
#include <cmath>

#include "permspec/generators.hpp"
#include "permspec/invariants.hpp"

namespace permspec::reports {

namespace {

using cmatrix::ComplexMatrix;
using invariants::ConjugacyVerdict;
using permutations::Permutation;

Json verdict_to_json(const ConjugacyVerdict& v) {
  Json j;
  j["status"] = invariants::to_string(v.status);
  j["checked_up_to"] = v.checked_up_to;
  if (v.certificate) {
    j["certificate"] = Json{{"kind", invariants::to_string(v.certificate->kind)},
                            {"index", v.certificate->index},
                            {"value", v.certificate->value}};
  } else {
    j["certificate"] = nullptr;
  }
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.densities) j["densities"] = io::densities_to_json(*v.densities);
  return j;
}

Json ppn_to_json(const invariants::PPnVerdict& v) {
  Json j;
  j["computed"] = true;
  j["member"] = v.member;
  j["cycle_type"] = v.cycle_type ? io::cycle_type_to_json(*v.cycle_type) : Json(nullptr);
  j["residual"] = v.residual;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Json hull_to_json(const measures::HullVerdict& v) {
  Json j;
  j["member"] = v.member;
  j["mixture"] = v.recovered ? io::measure_to_json(*v.recovered) : Json(nullptr);
  if (v.failing_index) j["failing_index"] = *v.failing_index;
  if (!v.failure_reason.empty()) j["failure_reason"] = v.failure_reason;
  Json clamped = Json::array();
  for (const auto& [i, raw] : v.clamped)
    clamped.push_back(Json{{"i", i}, {"raw", raw}});
  j["clamped"] = std::move(clamped);
  return j;
}

Json analyze_permutation(const Permutation& p, const AnalyzeOptions& options) {
  const std::int64_t n = p.size();
  const std::int64_t K = options.max_k.value_or(n);
  if (K < 1) throw std::invalid_argument("max_k must be >= 1");

  auto type = permutations::cycle_type(p);
  auto exact_densities = permutations::densities_of(type);

  ExactMomentSequence exact_moments;
  exact_moments.values.reserve(static_cast<std::size_t>(K));
  for (std::int64_t k = 1; k <= K; ++k)
    exact_moments.values.push_back(permutations::trace_power(type, k));
  MomentSequence moments = exact_moments.to_float();

  invariants::DecideOptions decide_options;
  decide_options.tol = options.tol;
  decide_options.declared_support = options.declared_support.value_or(n);
  auto verdict = invariants::decide_permutation_conjugacy(moments, decide_options);

  Json report;
  report["schema"] = "permspec.analyze.v1";
  report["input_kind"] = "permutation";
  report["n"] = n;
  report["max_k"] = K;
  report["tol"] = options.tol;
  report["unitarity"] = Json{{"defect", 0.0}, {"tol", options.unitary_tol}, {"is_unitary", true}};
  report["cycle_type"] = io::cycle_type_to_json(type);
  Json exact = Json::object();
  for (const auto& [i, c] : exact_densities.values) exact[std::to_string(i)] = c.str();
  report["exact_densities"] = std::move(exact);
  report["moments"] = io::moments_to_json(moments);
  Json conjugacy = verdict_to_json(verdict);
  conjugacy["declared_support"] = *decide_options.declared_support;
  report["conjugacy"] = std::move(conjugacy);

  // A permutation is conjugate to itself; membership needs no decision
  // procedure, only its own type.
  Json ppn;
  ppn["computed"] = true;
  ppn["member"] = true;
  ppn["cycle_type"] = io::cycle_type_to_json(type);
  ppn["residual"] = 0.0;
  report["ppn"] = std::move(ppn);

  auto hull = measures::recover_mixture(moments, K, options.tol);
  report["measure"] = hull_to_json(hull);
  return report;
}

Json analyze_matrix(const ComplexMatrix& u, const AnalyzeOptions& options) {
  const std::int64_t n = u.dim();
  const std::int64_t K = options.max_k.value_or(n);
  if (K < 1) throw std::invalid_argument("max_k must be >= 1");

  auto unitarity = cmatrix::check_unitary(u, options.unitary_tol);
  if (!unitarity.is_unitary) throw NotUnitaryError(unitarity.defect, options.unitary_tol);

  MomentSequence moments = cmatrix::moment_sequence(u, K, options.unitary_tol);

  invariants::DecideOptions decide_options;
  decide_options.tol = options.tol;
  decide_options.declared_support = options.declared_support;
  auto verdict = invariants::decide_permutation_conjugacy(moments, decide_options);

  Json report;
  report["schema"] = "permspec.analyze.v1";
  report["input_kind"] = "matrix";
  report["n"] = n;
  report["max_k"] = K;
  report["tol"] = options.tol;
  report["unitarity"] =
      Json{{"defect", unitarity.defect}, {"tol", unitarity.tol}, {"is_unitary", true}};
  report["moments"] = io::moments_to_json(moments);
  Json conjugacy = verdict_to_json(verdict);
  conjugacy["declared_support"] =
      options.declared_support ? Json(*options.declared_support) : Json(nullptr);
  report["conjugacy"] = std::move(conjugacy);

  if (K >= n) {
    report["ppn"] = ppn_to_json(invariants::decide_ppn_membership(moments, n, options.tol));
  } else {
    report["ppn"] = Json{{"computed", false},
                         {"reason", "membership needs n moments, have " + std::to_string(K)}};
  }

  auto hull = measures::recover_mixture(moments, K, options.tol);
  report["measure"] = hull_to_json(hull);
  return report;
}

MomentSequence moments_of_input(const std::string& text, std::optional<std::int64_t> max_k,
                                double unitary_tol, std::int64_t fallback_k) {
  if (text.find('{') != std::string::npos) {
    Json j = io::parse_json(text);
    if (j.contains("K")) {
      MomentSequence m = io::moments_from_json(j);
      std::int64_t want = max_k.value_or(m.max_k());
      if (want > m.max_k()) throw InsufficientMomentsError(want, want, m.max_k());
      m.values.resize(static_cast<std::size_t>(want));
      return m;
    }
    ComplexMatrix u = io::matrix_from_json(j);
    return cmatrix::moment_sequence(u, max_k.value_or(std::max(u.dim(), fallback_k)),
                                    unitary_tol);
  }
  Permutation p = permutations::parse_permutation(text);
  auto type = permutations::cycle_type(p);
  std::int64_t K = max_k.value_or(std::max(p.size(), fallback_k));
  ExactMomentSequence m;
  for (std::int64_t k = 1; k <= K; ++k) m.values.push_back(permutations::trace_power(type, k));
  return m.to_float();
}

}  // namespace

Json analyze(const std::string& input_text, const AnalyzeOptions& options) {
  auto input = io::parse_matrix_input(input_text);
  if (std::holds_alternative<Permutation>(input))
    return analyze_permutation(std::get<Permutation>(input), options);
  return analyze_matrix(std::get<ComplexMatrix>(input), options);
}

Json invert(const std::string& moments_json_text, std::int64_t upto, double tol) {
  MomentSequence m = io::moments_from_json(io::parse_json(moments_json_text));
  auto densities = invariants::invert_moments(m, upto, tol);
  Json report;
  report["schema"] = "permspec.invert.v1";
  report["K"] = m.max_k();
  report["upto"] = upto;
  report["tol"] = tol;
  report["densities"] = io::densities_to_json(densities);
  return report;
}

ConstructOutput construct(const std::string& densities_spec, std::int64_t n) {
  auto target = io::parse_densities_spec(densities_spec);
  auto result = permutations::construct_permutation(target, n);

  Json report;
  report["schema"] = "permspec.construct.v1";
  report["n"] = n;
  Json requested = Json::object();
  for (const auto& [i, c] : target.values) requested[std::to_string(i)] = c.str();
  report["requested"] = std::move(requested);
  Json counts = Json::object();
  for (const auto& [i, k] : result.cycle_counts) counts[std::to_string(i)] = k;
  report["cycle_counts"] = std::move(counts);
  report["leftover_length"] = result.leftover_length;
  report["leftover_collision"] = result.leftover_collision;
  Json achieved = Json::object(), achieved_exact = Json::object();
  for (const auto& [i, c] : result.achieved.values) {
    achieved[std::to_string(i)] = c.to_double();
    achieved_exact[std::to_string(i)] = c.str();
  }
  report["achieved"] = std::move(achieved);
  report["achieved_exact"] = std::move(achieved_exact);

  return {permutations::format_permutation(result.permutation), std::move(report)};
}

MeasureOutput measure(const std::string& input_text, std::int64_t bins,
                      std::int64_t atom_cutoff, double tol) {
  Json j = io::parse_json(input_text);

  MeasureOutput out;
  out.report["schema"] = "permspec.measure.v1";
  out.report["bins"] = bins;
  out.report["atom_cutoff"] = atom_cutoff;

  measures::CircleMeasure mu;
  if (j.contains("coeffs")) {
    mu = io::measure_from_json(j);
    out.report["member"] = true;
    out.report["mixture"] = io::measure_to_json(mu);
  } else if (j.contains("K")) {
    MomentSequence m = io::moments_from_json(j);
    auto hull = measures::recover_mixture(m, m.max_k(), tol);
    out.report["member"] = hull.member;
    Json hj = hull_to_json(hull);
    hj.erase("member");
    for (auto& [key, value] : hj.items()) out.report[key] = value;
    if (!hull.member) return out;
    mu = *hull.recovered;
  } else {
    throw ParseError("measure input needs a mixture ('coeffs') or moments ('K')");
  }

  out.has_histogram = true;
  out.csv = io::histogram_to_csv(measures::histogram(mu, bins, atom_cutoff));
  return out;
}

ExampleOutput example(const std::string& kind, std::int64_t n, std::int64_t root_index) {
  ExampleOutput out;
  if (kind == "identity") {
    if (n < 1) throw std::invalid_argument("identity needs n >= 1");
    out.primary = io::matrix_to_json(ComplexMatrix::identity(n));
  } else if (kind == "cycle") {
    if (n < 1) throw std::invalid_argument("cycle needs n >= 1");
    std::vector<std::int64_t> image(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) image[static_cast<std::size_t>(j)] = (j + 1) % n;
    out.primary = io::matrix_to_json(cmatrix::permutation_matrix(Permutation(std::move(image))));
  } else if (kind == "circulant-pair") {
    auto pair = generators::make_pair(n, root_index);
    out.primary = io::matrix_to_json(pair.c.multiply(pair.d));
    out.c = io::matrix_to_json(pair.c);
    out.d = io::matrix_to_json(pair.d);
  } else {
    throw std::invalid_argument("unknown example kind '" + kind + "'");
  }
  return out;
}

Json conjtest(const std::string& a_text, const std::string& b_text, double tol,
              std::optional<std::int64_t> max_k) {
  // Without an explicit k both sides get their natural length; a moments file
  // caps it at what it carries.
  auto natural = [&](const std::string& text) -> std::optional<std::int64_t> {
    if (text.find('{') == std::string::npos)
      return permutations::parse_permutation(text).size();
    Json j = io::parse_json(text);
    if (j.contains("K")) return j.at("K").get<std::int64_t>();
    if (j.contains("n")) return j.at("n").get<std::int64_t>();
    return std::nullopt;
  };

  std::int64_t K;
  if (max_k) {
    K = *max_k;
  } else {
    auto ka = natural(a_text), kb = natural(b_text);
    if (!ka || !kb) throw ParseError("cannot infer a moment length from the inputs");
    K = std::min(*ka, *kb);
  }
  if (K < 1) throw std::invalid_argument("max_k must be >= 1");

  MomentSequence ma = moments_of_input(a_text, K, cmatrix::kDefaultUnitaryTol, K);
  MomentSequence mb = moments_of_input(b_text, K, cmatrix::kDefaultUnitaryTol, K);
  double deviation = invariants::moment_distance(ma, mb);

  Json report;
  report["schema"] = "permspec.conjtest.v1";
  report["max_k"] = K;
  report["tol"] = tol;
  report["max_deviation"] = deviation;
  report["equal"] = deviation <= tol;
  return report;
}

}  // namespace permspec::reports
