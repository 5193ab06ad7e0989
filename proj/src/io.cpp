#include "permspec/io.hpp"

#include <cctype>
#include <cstdio>

namespace permspec::io {

namespace {

// Parse-time sanity bound on |m_k|; genuine unitary moments sit inside the
// closed unit disk up to accumulation error.
constexpr double kMomentModulusSlack = 1e-6;

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' || ch == '[';
  }
  return false;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

Json matrix_to_json(const cmatrix::ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (std::int64_t i = 0; i < m.dim(); ++i) {
    Json rrow = Json::array(), irow = Json::array();
    for (std::int64_t j = 0; j < m.dim(); ++j) {
      rrow.push_back(m.at(i, j).real());
      irow.push_back(m.at(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return Json{{"n", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

cmatrix::ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im"))
    throw ParseError("matrix JSON needs fields n, re, im");
  std::int64_t n = j.at("n").get<std::int64_t>();
  if (n < 1) throw ParseError("matrix dimension must be positive");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || std::ssize(re) != n || std::ssize(im) != n)
    throw ParseError("matrix rows do not match n");
  cmatrix::ComplexMatrix m(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& rrow = re[static_cast<std::size_t>(i)];
    const auto& irow = im[static_cast<std::size_t>(i)];
    if (std::ssize(rrow) != n || std::ssize(irow) != n)
      throw ParseError("matrix columns do not match n");
    for (std::int64_t k = 0; k < n; ++k)
      m.at(i, k) = {rrow[static_cast<std::size_t>(k)].get<double>(),
                    irow[static_cast<std::size_t>(k)].get<double>()};
  }
  if (!m.is_finite()) throw ParseError("matrix has non-finite entries");
  return m;
}

MatrixInput parse_matrix_input(const std::string& text) {
  if (looks_like_json(text)) return matrix_from_json(parse_json(text));
  return permutations::parse_permutation(text);
}

Json moments_to_json(const MomentSequence& m) {
  Json re = Json::array(), im = Json::array();
  for (const auto& v : m.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return Json{{"K", m.max_k()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

MomentSequence moments_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("K") || !j.contains("re") || !j.contains("im"))
    throw ParseError("moment JSON needs fields K, re, im");
  std::int64_t K = j.at("K").get<std::int64_t>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (K < 1 || !re.is_array() || !im.is_array() || std::ssize(re) != K || std::ssize(im) != K)
    throw ParseError("moment arrays do not match K");
  MomentSequence m;
  m.values.reserve(static_cast<std::size_t>(K));
  for (std::int64_t k = 0; k < K; ++k) {
    std::complex<double> v{re[static_cast<std::size_t>(k)].get<double>(),
                           im[static_cast<std::size_t>(k)].get<double>()};
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
        std::abs(v) > 1.0 + kMomentModulusSlack)
      throw ParseError("moment at k=" + std::to_string(k + 1) +
                       " is outside the unit disk; not a unitary trace");
    m.values.push_back(v);
  }
  return m;
}

Json measure_to_json(const measures::CircleMeasure& mu) {
  Json coeffs = Json::object();
  for (const auto& [i, c] : mu.coefficients) coeffs[std::to_string(i)] = c;
  return Json{{"coeffs", std::move(coeffs)}, {"inf", mu.lebesgue_weight}};
}

measures::CircleMeasure measure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("inf"))
    throw ParseError("measure JSON needs fields coeffs, inf");
  measures::CircleMeasure mu;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    std::int64_t i;
    try {
      i = std::stoll(key);
    } catch (const std::exception&) {
      throw ParseError("bad atom index '" + key + "' in measure JSON");
    }
    if (i < 1) throw ParseError("atom index must be positive");
    mu.coefficients[i] = value.get<double>();
  }
  mu.lebesgue_weight = j.at("inf").get<double>();
  measures::validate(mu, 1e-6);  // wire data gets a looser mass-1 check
  return mu;
}

Json cycle_type_to_json(const permutations::CycleType& t) {
  Json j = Json::object();
  for (const auto& [len, mult] : t.counts) j[std::to_string(len)] = mult;
  return j;
}

Json densities_to_json(const permutations::RealCycleDensities& d) {
  Json values = Json::object();
  for (const auto& [i, c] : d.values) values[std::to_string(i)] = c;
  Json j{{"values", std::move(values)}};
  j["inf"] = d.c_inf ? Json(*d.c_inf) : Json(nullptr);
  return j;
}

permutations::CycleDensities parse_densities_spec(const std::string& spec) {
  permutations::CycleDensities target;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    std::string entry = spec.substr(pos, comma - pos);
    auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw ParseError("densities entry '" + entry + "' is not i:value");
    std::int64_t i;
    try {
      i = std::stoll(entry.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("bad cycle length in '" + entry + "'");
    }
    if (i < 1) throw ParseError("cycle length must be positive in '" + entry + "'");
    if (target.values.count(i)) throw ParseError("duplicate cycle length " + std::to_string(i));
    target.values[i] = Rational::parse(entry.substr(colon + 1));
    pos = comma + 1;
  }
  return target;
}

std::string histogram_to_csv(const std::vector<measures::HistogramBin>& bins) {
  std::string csv = "bin_start_radians,bin_end_radians,mass\n";
  for (const auto& bin : bins) {
    csv += format_double(bin.start);
    csv += ',';
    csv += format_double(bin.end);
    csv += ',';
    csv += format_double(bin.mass);
    csv += '\n';
  }
  return csv;
}

}  // namespace permspec::io
