// permspec command line front door. Links the C API only; all math lives
// behind the shared library. Exit codes: 0 ok, 2 parse error, 3 non-unitary
// input, 4 insufficient/unusable moments, 5 invalid densities, 1 anything
// else.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permspec/permspec.h"

namespace {

using Json = nlohmann::json;

int exit_code(ps_status status) {
  switch (status) {
    case PS_OK: return 0;
    case PS_ERROR_PARSE: return 2;
    case PS_ERROR_NOT_UNITARY: return 3;
    case PS_ERROR_INSUFFICIENT_MOMENTS: return 4;
    case PS_ERROR_NONREAL_MOMENT: return 4;
    case PS_ERROR_INVALID_DENSITIES: return 5;
    default: return 1;
  }
}

int report_failure(ps_status status) {
  std::cerr << "error (" << ps_status_name(status) << "): " << ps_last_error() << "\n";
  return exit_code(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// Owned C string -> std::string.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  ps_string_free(s);
  return out;
}

void emit_report(const std::string& report, const std::optional<std::string>& out_path,
                 const std::string& summary) {
  if (out_path) {
    write_file(*out_path, report + "\n");
    if (!summary.empty()) std::cout << summary << "\n";
  } else {
    std::cout << report << "\n";
  }
}

std::string analyze_summary(const Json& report) {
  std::ostringstream os;
  os << "n=" << report["n"].get<std::int64_t>()
     << " defect=" << report["unitarity"]["defect"].get<double>()
     << " verdict=" << report["conjugacy"]["status"].get<std::string>();
  const auto& cert = report["conjugacy"]["certificate"];
  if (!cert.is_null())
    os << " (certificate " << cert["kind"].get<std::string>() << " at i="
       << cert["index"].get<std::int64_t>() << ", value " << cert["value"].get<double>() << ")";
  const auto& ppn = report["ppn"];
  if (ppn["computed"].get<bool>())
    os << " member=" << (ppn["member"].get<bool>() ? "yes" : "no");
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace-moment decisions for unitaries vs permutations"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_matrix;
  double analyze_tol = 1e-9, analyze_unitary_tol = 1e-8;
  std::int64_t analyze_max_k = 0, analyze_support = 0;
  std::optional<std::string> analyze_out;
  auto* analyze = app.add_subcommand("analyze", "full decision report for one input");
  analyze->add_option("--matrix", analyze_matrix, "matrix JSON or permutation line file")
      ->required();
  analyze->add_option("--tol", analyze_tol, "decision tolerance");
  analyze->add_option("--unitary-tol", analyze_unitary_tol, "unitarity gate (trace norm)");
  analyze->add_option("--max-k", analyze_max_k, "moments to compute (default n)");
  analyze->add_option("--declared-support", analyze_support,
                      "promise that densities are supported in 1..S");
  analyze->add_option("--out", analyze_out, "write the JSON report here");

  // invert
  std::string invert_moments;
  std::int64_t invert_upto = 0;
  double invert_tol = 1e-9;
  std::optional<std::string> invert_out;
  auto* invert = app.add_subcommand("invert", "moments -> cycle densities");
  invert->add_option("--moments", invert_moments, "moment JSON file")->required();
  invert->add_option("--upto", invert_upto, "invert c_1..c_upto")->required();
  invert->add_option("--tol", invert_tol, "realness tolerance");
  invert->add_option("--out", invert_out, "write the JSON report here");

  // construct
  std::string construct_densities;
  std::int64_t construct_n = 0;
  std::string construct_out;
  auto* construct = app.add_subcommand("construct", "witness permutation for target densities");
  construct->add_option("--densities", construct_densities, "literal like 2:0.5,3:1/4")
      ->required();
  construct->add_option("--n", construct_n, "number of points")->required();
  construct->add_option("--out", construct_out, "write the one-line permutation here")
      ->required();

  // measure
  std::string measure_in, measure_out;
  std::int64_t measure_bins = 64, measure_cutoff = 32;
  double measure_tol = 1e-9;
  auto* measure = app.add_subcommand("measure", "histogram + mixture for a measure or moments");
  measure->add_option("--in", measure_in, "mixture JSON or moment JSON file")->required();
  measure->add_option("--bins", measure_bins, "histogram bins");
  measure->add_option("--atom-cutoff", measure_cutoff, "resolve atoms up to this index");
  measure->add_option("--tol", measure_tol, "recovery tolerance");
  measure->add_option("--out", measure_out, "write the CSV here")->required();

  // example
  std::string example_kind, example_out;
  std::int64_t example_n = 0, example_root = 1;
  std::optional<std::string> example_out_c, example_out_d;
  auto* example = app.add_subcommand("example", "built-in matrices");
  example->add_option("--kind", example_kind, "circulant-pair | cycle | identity")->required();
  example->add_option("--n", example_n, "dimension")->required();
  example->add_option("--root-index", example_root, "primitive root index (circulant-pair)");
  example->add_option("--out", example_out, "write the matrix JSON here")->required();
  example->add_option("--out-c", example_out_c, "also write the factor c");
  example->add_option("--out-d", example_out_d, "also write the factor d");

  // conjtest
  std::string conjtest_a, conjtest_b;
  double conjtest_tol = 1e-9;
  std::int64_t conjtest_max_k = 0;
  auto* conjtest = app.add_subcommand("conjtest", "equal-moments conjugacy test");
  conjtest->add_option("--a", conjtest_a, "first input file")->required();
  conjtest->add_option("--b", conjtest_b, "second input file")->required();
  conjtest->add_option("--tol", conjtest_tol, "comparison tolerance");
  conjtest->add_option("--max-k", conjtest_max_k, "moments to compare");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      std::string input = read_file(analyze_matrix);
      char* report_c = nullptr;
      ps_status status = ps_analyze(input.c_str(), analyze_tol, analyze_unitary_tol,
                                    analyze_max_k, analyze_support, &report_c);
      if (status != PS_OK) return report_failure(status);
      std::string report = take(report_c);
      emit_report(report, analyze_out, analyze_summary(Json::parse(report)));
      return 0;
    }

    if (*invert) {
      std::string input = read_file(invert_moments);
      char* report_c = nullptr;
      ps_status status = ps_invert(input.c_str(), invert_upto, invert_tol, &report_c);
      if (status != PS_OK) return report_failure(status);
      emit_report(take(report_c), invert_out, "");
      return 0;
    }

    if (*construct) {
      char* line_c = nullptr;
      char* report_c = nullptr;
      ps_status status =
          ps_construct(construct_densities.c_str(), construct_n, &line_c, &report_c);
      if (status != PS_OK) return report_failure(status);
      write_file(construct_out, take(line_c) + "\n");
      std::string report = take(report_c);
      Json j = Json::parse(report);
      std::ostringstream summary;
      summary << "wrote " << construct_out << "; achieved";
      for (const auto& [i, c] : j["achieved"].items()) summary << " cyc_" << i << "=" << c;
      summary << "; leftover cycle length " << j["leftover_length"].get<std::int64_t>();
      std::cout << report << "\n" << summary.str() << "\n";
      return 0;
    }

    if (*measure) {
      std::string input = read_file(measure_in);
      char* csv_c = nullptr;
      char* report_c = nullptr;
      ps_status status = ps_measure(input.c_str(), measure_bins, measure_cutoff, measure_tol,
                                    &csv_c, &report_c);
      if (status != PS_OK) return report_failure(status);
      if (csv_c) write_file(measure_out, take(csv_c));
      std::cout << take(report_c) << "\n";
      return 0;
    }

    if (*example) {
      char* matrix_c = nullptr;
      char* c_c = nullptr;
      char* d_c = nullptr;
      ps_status status =
          ps_example(example_kind.c_str(), example_n, example_root, &matrix_c, &c_c, &d_c);
      if (status != PS_OK) return report_failure(status);
      write_file(example_out, take(matrix_c) + "\n");
      std::string c_json = take(c_c), d_json = take(d_c);
      if (example_out_c && !c_json.empty()) write_file(*example_out_c, c_json + "\n");
      if (example_out_d && !d_json.empty()) write_file(*example_out_d, d_json + "\n");
      std::cout << "wrote " << example_out << "\n";
      return 0;
    }

    if (*conjtest) {
      std::string a = read_file(conjtest_a);
      std::string b = read_file(conjtest_b);
      char* report_c = nullptr;
      ps_status status =
          ps_conjtest(a.c_str(), b.c_str(), conjtest_tol, conjtest_max_k, &report_c);
      if (status != PS_OK) return report_failure(status);
      std::cout << take(report_c) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
