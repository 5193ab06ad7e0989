#include "permspec/permspec.h"

#include <cstring>
#include <new>
#include <string>

#include "permspec/invariants.hpp"
#include "permspec/reports.hpp"

using permspec::cmatrix::ComplexMatrix;
using permspec::permutations::Permutation;

struct ps_matrix {
  ComplexMatrix value;
};

struct ps_permutation {
  Permutation value;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ps_status fail(ps_status code, const char* what) {
  g_last_error = what;
  return code;
}

/// Runs the body, translating the C++ error taxonomy into status codes.
template <class Fn>
ps_status guarded(Fn&& fn) {
  try {
    fn();
    return PS_OK;
  } catch (const permspec::ParseError& e) {
    return fail(PS_ERROR_PARSE, e.what());
  } catch (const permspec::NotUnitaryError& e) {
    return fail(PS_ERROR_NOT_UNITARY, e.what());
  } catch (const permspec::InsufficientMomentsError& e) {
    return fail(PS_ERROR_INSUFFICIENT_MOMENTS, e.what());
  } catch (const permspec::NonRealMomentError& e) {
    return fail(PS_ERROR_NONREAL_MOMENT, e.what());
  } catch (const permspec::InvalidDensitiesError& e) {
    return fail(PS_ERROR_INVALID_DENSITIES, e.what());
  } catch (const permspec::ArithmeticOverflowError& e) {
    return fail(PS_ERROR_OVERFLOW, e.what());
  } catch (const permspec::DimensionMismatchError& e) {
    return fail(PS_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PS_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PS_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PS_ERROR_INTERNAL, e.what());
  }
}

ps_status require(bool ok, const char* what) {
  return ok ? PS_OK : fail(PS_ERROR_INVALID_ARGUMENT, what);
}

}  // namespace

extern "C" {

const char* ps_version(void) { return "0.1.0"; }

const char* ps_status_name(ps_status status) {
  switch (status) {
    case PS_OK: return "ok";
    case PS_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case PS_ERROR_PARSE: return "parse error";
    case PS_ERROR_NOT_UNITARY: return "not unitary";
    case PS_ERROR_INSUFFICIENT_MOMENTS: return "insufficient moments";
    case PS_ERROR_INVALID_DENSITIES: return "invalid densities";
    case PS_ERROR_NONREAL_MOMENT: return "non-real moment";
    case PS_ERROR_OVERFLOW: return "arithmetic overflow";
    case PS_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* ps_last_error(void) { return g_last_error.c_str(); }

void ps_string_free(char* s) { delete[] s; }

/* ---- matrices ---- */

ps_status ps_matrix_parse(const char* text, ps_matrix** out) {
  if (auto bad = require(text && out, "null argument")) return bad;
  return guarded([&] {
    auto input = permspec::io::parse_matrix_input(text);
    if (std::holds_alternative<Permutation>(input)) {
      *out = new ps_matrix{
          permspec::cmatrix::permutation_matrix(std::get<Permutation>(input))};
    } else {
      *out = new ps_matrix{std::move(std::get<ComplexMatrix>(input))};
    }
  });
}

void ps_matrix_free(ps_matrix* m) { delete m; }

int64_t ps_matrix_dim(const ps_matrix* m) { return m ? m->value.dim() : 0; }

ps_status ps_matrix_to_json(const ps_matrix* m, char** json_out) {
  if (auto bad = require(m && json_out, "null argument")) return bad;
  return guarded([&] { *json_out = copy_string(permspec::io::matrix_to_json(m->value).dump()); });
}

ps_status ps_matrix_unitarity_defect(const ps_matrix* m, double* defect_out) {
  if (auto bad = require(m && defect_out, "null argument")) return bad;
  return guarded([&] { *defect_out = permspec::cmatrix::unitarity_defect(m->value); });
}

ps_status ps_matrix_moments(const ps_matrix* m, int64_t max_k, double unitary_tol,
                            char** moments_json_out) {
  if (auto bad = require(m && moments_json_out, "null argument")) return bad;
  return guarded([&] {
    double tol = unitary_tol > 0 ? unitary_tol : permspec::cmatrix::kDefaultUnitaryTol;
    auto moments = permspec::cmatrix::moment_sequence(m->value, max_k, tol);
    *moments_json_out = copy_string(permspec::io::moments_to_json(moments).dump());
  });
}

ps_status ps_matrix_conjugate_random(const ps_matrix* m, uint64_t seed, ps_matrix** out) {
  if (auto bad = require(m && out, "null argument")) return bad;
  return guarded([&] {
    *out = new ps_matrix{permspec::cmatrix::conjugate_by_random_unitary(m->value, seed)};
  });
}

/* ---- permutations ---- */

ps_status ps_permutation_parse(const char* line, ps_permutation** out) {
  if (auto bad = require(line && out, "null argument")) return bad;
  return guarded([&] {
    *out = new ps_permutation{permspec::permutations::parse_permutation(line)};
  });
}

void ps_permutation_free(ps_permutation* p) { delete p; }

int64_t ps_permutation_size(const ps_permutation* p) { return p ? p->value.size() : 0; }

ps_status ps_permutation_format(const ps_permutation* p, char** line_out) {
  if (auto bad = require(p && line_out, "null argument")) return bad;
  return guarded([&] {
    *line_out = copy_string(permspec::permutations::format_permutation(p->value));
  });
}

ps_status ps_permutation_cycle_type(const ps_permutation* p, char** json_out) {
  if (auto bad = require(p && json_out, "null argument")) return bad;
  return guarded([&] {
    auto type = permspec::permutations::cycle_type(p->value);
    *json_out = copy_string(permspec::io::cycle_type_to_json(type).dump());
  });
}

ps_status ps_permutation_to_matrix(const ps_permutation* p, ps_matrix** out) {
  if (auto bad = require(p && out, "null argument")) return bad;
  return guarded([&] {
    *out = new ps_matrix{permspec::cmatrix::permutation_matrix(p->value)};
  });
}

/* ---- reports ---- */

ps_status ps_analyze(const char* input_text, double tol, double unitary_tol,
                     int64_t max_k, int64_t declared_support, char** report_out) {
  if (auto bad = require(input_text && report_out, "null argument")) return bad;
  return guarded([&] {
    permspec::reports::AnalyzeOptions options;
    if (tol > 0) options.tol = tol;
    if (unitary_tol > 0) options.unitary_tol = unitary_tol;
    if (max_k > 0) options.max_k = max_k;
    if (declared_support > 0) options.declared_support = declared_support;
    *report_out = copy_string(permspec::reports::analyze(input_text, options).dump(2));
  });
}

ps_status ps_invert(const char* moments_json, int64_t upto, double tol, char** report_out) {
  if (auto bad = require(moments_json && report_out, "null argument")) return bad;
  return guarded([&] {
    *report_out = copy_string(
        permspec::reports::invert(moments_json, upto, tol > 0 ? tol : 1e-9).dump(2));
  });
}

ps_status ps_construct(const char* densities_spec, int64_t n, char** permutation_line_out,
                       char** report_out) {
  if (auto bad = require(densities_spec && permutation_line_out && report_out, "null argument"))
    return bad;
  return guarded([&] {
    auto out = permspec::reports::construct(densities_spec, n);
    *permutation_line_out = copy_string(out.permutation_line);
    *report_out = copy_string(out.report.dump(2));
  });
}

ps_status ps_measure(const char* input_text, int64_t bins, int64_t atom_cutoff, double tol,
                     char** csv_out, char** report_out) {
  if (auto bad = require(input_text && csv_out && report_out, "null argument")) return bad;
  return guarded([&] {
    auto out = permspec::reports::measure(input_text, bins, atom_cutoff, tol > 0 ? tol : 1e-9);
    *csv_out = out.has_histogram ? copy_string(out.csv) : nullptr;
    *report_out = copy_string(out.report.dump(2));
  });
}

ps_status ps_example(const char* kind, int64_t n, int64_t root_index, char** matrix_json_out,
                     char** c_json_out, char** d_json_out) {
  if (auto bad = require(kind && matrix_json_out, "null argument")) return bad;
  return guarded([&] {
    auto out = permspec::reports::example(kind, n, root_index > 0 ? root_index : 1);
    *matrix_json_out = copy_string(out.primary.dump());
    if (c_json_out) *c_json_out = out.c ? copy_string(out.c->dump()) : nullptr;
    if (d_json_out) *d_json_out = out.d ? copy_string(out.d->dump()) : nullptr;
  });
}

ps_status ps_conjtest(const char* a_text, const char* b_text, double tol, int64_t max_k,
                      char** report_out) {
  if (auto bad = require(a_text && b_text && report_out, "null argument")) return bad;
  return guarded([&] {
    std::optional<int64_t> k;
    if (max_k > 0) k = max_k;
    *report_out = copy_string(
        permspec::reports::conjtest(a_text, b_text, tol > 0 ? tol : 1e-9, k).dump(2));
  });
}

}  // extern "C"
