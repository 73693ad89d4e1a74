#include "quadrank/json_io.hpp"

#include <fstream>
#include <sstream>

#include "quadrank/error.hpp"

namespace quadrank {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

}  // namespace

json poly_to_json(const Poly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.to_string());
  return a;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be an array of rationals");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Poly(std::move(c));
}

json surface_to_json(const QuadraticSurface& s) {
  json rows = json::array();
  for (const auto& row : s.coeff) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.to_string());
    rows.push_back(r);
  }
  return json{{"coeff_matrix", rows}};
}

QuadraticSurface surface_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "surface must be a JSON object");
  if (j.contains("coeff_matrix")) {
    const json& m = j.at("coeff_matrix");
    if (!m.is_array() || m.size() != 4) throw Error(ErrorCode::ParseError, "coeff_matrix must have 4 rows");
    QuadraticSurface s;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!m[i].is_array() || m[i].size() != 3)
        throw Error(ErrorCode::ParseError, "coeff_matrix rows must have 3 entries");
      for (std::size_t k = 0; k < 3; ++k) s.coeff[i][k] = rational_from_json(m[i][k]);
    }
    return s;
  }
  if (j.contains("A") && j.contains("B") && j.contains("C")) {
    const Poly A = poly_from_json(j.at("A")), B = poly_from_json(j.at("B")), C = poly_from_json(j.at("C"));
    if (A.degree() > 3 || B.degree() > 3 || C.degree() > 3)
      throw Error(ErrorCode::ParseError, "A, B, C must have degree at most 3");
    return QuadraticSurface::from_abc(A, B, C);
  }
  throw Error(ErrorCode::ParseError, "surface needs coeff_matrix or A/B/C");
}

std::string canonical_surface_json(const QuadraticSurface& s) { return surface_to_json(s).dump(); }

std::string surface_file_text(const QuadraticSurface& s, const json& extra) {
  std::ostringstream os;
  os << "{\n  \"coeff_matrix\": [\n";
  for (std::size_t i = 0; i < 4; ++i) {
    os << "    [";
    for (std::size_t k = 0; k < 3; ++k) os << (k ? ", " : "") << json(s.coeff[i][k].to_string()).dump();
    os << "]" << (i < 3 ? "," : "") << "\n";
  }
  os << "  ]";
  for (auto it = extra.begin(); it != extra.end(); ++it) os << ",\n  " << json(it.key()).dump() << ": " << it.value().dump();
  os << "\n}\n";
  return os.str();
}

QuadraticSurface read_surface_file(const std::string& path) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return surface_from_json(j);
}

json factorization_to_json(const FactorizationQ& f) {
  json factors = json::array();
  for (const auto& fac : f.factors) factors.push_back({{"poly", poly_to_json(fac.poly)}, {"mult", fac.multiplicity}});
  return {{"unit", f.unit.to_string()}, {"factors", factors}};
}

json rank_report_to_json(const RankReport& r) {
  json s1 = json::array(), s2 = json::array();
  for (const auto& v : r.S1) s1.push_back(v.to_string());
  for (const auto& v : r.S2) s2.push_back(v.to_string());
  return {{"S1", s1},
          {"S2", s2},
          {"delta", r.delta},
          {"splits_completely", r.splits_completely},
          {"rank_lower", r.rank_lower},
          {"rank_upper", r.rank_upper},
          {"exact", r.exact},
          {"factorization", factorization_to_json(r.factorization)}};
}

json validation_to_json(const ValidationReport& v) {
  return {{"a3_degree_ok", v.a3_degree_ok},
          {"a3_irreducible", v.a3_irreducible},
          {"infinity_fiber_elliptic", v.infinity_fiber_elliptic},
          {"nonsplit_j_nonconstant", v.nonsplit_j_nonconstant},
          {"nonsplit_necessary_conditions", v.nonsplit_necessary_conditions},
          {"failures", v.failures},
          {"valid", v.valid()}};
}

json estimate_to_json(const PrimeAverageEstimate& e) {
  return {{"X", e.X},
          {"S_X", e.S_X},
          {"L_bar", e.L_bar},
          {"rank_guess", e.rank_guess},
          {"M_drift", e.M_drift},
          {"primes_used", e.primes_used},
          {"bad_primes", e.bad_primes},
          {"pi_X", e.pi_X},
          {"low_confidence", e.low_confidence},
          {"records_path", e.records_path}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace quadrank
