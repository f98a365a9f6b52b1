#ifndef MAXLAB_IO_HPP
#define MAXLAB_IO_HPP

#include <charconv>
#include <cstdint>
#include <fstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "maxlab/core.hpp"
#include "maxlab/modulus.hpp"
#include "maxlab/semigroup.hpp"
#include "maxlab/spectral.hpp"

namespace maxlab {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON documents

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DimensionError("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

/// {"n": ..., "mu": [...], "values": [[re, im], ...]}
inline json field_to_json(const WeightedSpace& space, std::span<const Complex> f) {
  detail::require_length(space, f.size());
  json values = json::array();
  for (Complex z : f) values.push_back(complex_to_json(z));
  return {{"n", space.size()},
          {"mu", std::vector<double>(space.weights().begin(), space.weights().end())},
          {"values", std::move(values)}};
}

inline std::pair<WeightedSpace, ScalarField> field_from_json(const json& j) {
  WeightedSpace space(j.at("mu").get<std::vector<double>>());
  if (j.at("n").get<std::size_t>() != space.size())
    throw DimensionError("\"n\" disagrees with the length of \"mu\"");
  ScalarField f;
  for (const auto& v : j.at("values")) f.push_back(complex_from_json(v));
  detail::require_length(space, f.size());
  return {std::move(space), std::move(f)};
}

/// Rows are points, each row a list of [re, im] pairs; r is null for l^inf.
inline json bochner_to_json(const WeightedSpace& space, const BochnerField& field) {
  detail::require_length(space, field.points());
  json rows = json::array();
  for (std::size_t i = 0; i < field.points(); ++i) {
    json row = json::array();
    for (Complex z : field.values().row(i)) row.push_back(complex_to_json(z));
    rows.push_back(std::move(row));
  }
  const double r = field.norm().exponent();
  return {{"n", space.size()},
          {"mu", std::vector<double>(space.weights().begin(), space.weights().end())},
          {"d", field.dim()},
          {"r", std::isinf(r) ? json(nullptr) : json(r)},
          {"values", std::move(rows)}};
}

inline std::pair<WeightedSpace, BochnerField> bochner_from_json(const json& j) {
  WeightedSpace space(j.at("mu").get<std::vector<double>>());
  const auto d = j.at("d").get<std::size_t>();
  const double r = j.at("r").is_null() ? kInf : j.at("r").get<double>();
  const auto& rows = j.at("values");
  if (rows.size() != space.size()) throw DimensionError("row count differs from point count");
  ComplexMatrix v(space.size(), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) throw DimensionError("row length differs from d");
    for (std::size_t k = 0; k < d; ++k) v(i, k) = complex_from_json(rows[i][k]);
  }
  return {std::move(space), BochnerField(std::move(v), BanachNorm(d, r))};
}

inline json matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

inline RealMatrix matrix_from_json(const json& j) {
  return RealMatrix::from_rows(j.get<std::vector<std::vector<double>>>());
}

inline json generator_to_json(const SemigroupGenerator& gen) {
  return {{"kind", to_string(gen.kind())},
          {"n", gen.size()},
          {"mu", std::vector<double>(gen.space().weights().begin(), gen.space().weights().end())},
          {"L", matrix_to_json(gen.matrix())}};
}

/// Re-validates the kind's invariants on load.
inline SemigroupGenerator generator_from_json(const json& j) {
  WeightedSpace space(j.at("mu").get<std::vector<double>>());
  const RealMatrix l = matrix_from_json(j.at("L"));
  switch (generator_kind_from_string(j.at("kind").get<std::string>())) {
    case GeneratorKind::diffusion: return make_diffusion(space, l);
    case GeneratorKind::contraction_only: return make_contraction(space, l);
    case GeneratorKind::general: break;
  }
  return SemigroupGenerator(space, l);
}

inline json decomposition_to_json(const SpectralDecomposition& dec) {
  return {{"eigenvalues", dec.eigenvalues},
          {"eigenvectors", matrix_to_json(dec.eigenvectors)},
          {"sweeps", dec.sweeps}};
}

inline json modulus_to_json(double t, const ModulusResult& r) {
  return {{"t", t},
          {"depth", r.depth},
          {"residual", r.residual},
          {"extrapolated", r.extrapolated},
          {"S", matrix_to_json(r.s)}};
}

// ---------------------------------------------------------------------------
// CSV

/// Shortest-round-trip is not required; 17 significant digits always
/// round-trips binary64 and is locale independent via to_chars.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

class CsvTable {
 public:
  CsvTable() = default;
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  CsvTable& row() {
    rows_.emplace_back();
    return *this;
  }
  CsvTable& add(double x) { return push(format_double(x)); }
  CsvTable& add(int x) { return push(std::to_string(x)); }
  CsvTable& add(long x) { return push(std::to_string(x)); }
  CsvTable& add(unsigned long x) { return push(std::to_string(x)); }
  CsvTable& add(unsigned long long x) { return push(std::to_string(x)); }
  CsvTable& add(bool x) { return push(x ? "1" : "0"); }
  CsvTable& add(const std::string& s) { return push(s); }
  CsvTable& add(const char* s) { return push(s); }

  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  std::string str() const {
    std::string out = join(header_);
    for (const auto& r : rows_) out += join(r);
    return out;
  }

  /// The data rows only, without the header line.
  std::string body() const {
    std::string out;
    for (const auto& r : rows_) out += join(r);
    return out;
  }

  void write(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << str();
  }

 private:
  CsvTable& push(std::string s) {
    if (rows_.empty()) throw std::logic_error("CsvTable::add before row()");
    rows_.back().push_back(std::move(s));
    return *this;
  }

  static std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) line += ',';
      line += cells[k];
    }
    line += '\n';
    return line;
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace maxlab

#endif  // MAXLAB_IO_HPP
