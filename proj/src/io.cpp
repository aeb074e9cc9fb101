#include "pfcone/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pfcone/error.hpp"

namespace pfcone {

namespace {

// DOM builder that stores every number as its source text. Integers are
// kept the same way so very long literals do not overflow.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;
  using Base::Base;
  bool number_integer(Json::number_integer_t v) { return Base::string(raw_ = std::to_string(v)); }
  bool number_unsigned(Json::number_unsigned_t v) { return Base::string(raw_ = std::to_string(v)); }
  bool number_float(Json::number_float_t, const Json::string_t& s) { return Base::string(raw_ = s); }

 private:
  std::string raw_;
};

Scalar entry_from_json(const Json& e, Mode mode) {
  if (!e.is_string()) throw InputError("matrix and vector entries must be numbers or \"p/q\" strings");
  return Scalar::parse(e.get<std::string>(), mode);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

}  // namespace

Json parse_json_exact(const std::string& text) {
  Json out;
  ExactNumberSax sax(out, true);
  try {
    if (!Json::sax_parse(text, &sax)) throw InputError("malformed JSON");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return out;
}

NonnegMatrix matrix_from_json(const Json& doc, Mode mode) {
  const Json& n_field = field(doc, "n");
  const Json& rows = field(doc, "entries");
  long n = 0;
  try {
    std::size_t used = 0;
    std::string text = n_field.is_string() ? n_field.get<std::string>() : n_field.dump();
    n = std::stol(text, &used);
    if (used != text.size()) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("\"n\" must be a nonnegative integer");
  }
  if (n < 0) throw InputError("\"n\" must be a nonnegative integer");
  if (!rows.is_array() || static_cast<long>(rows.size()) != n) throw InputError("\"entries\" must hold n rows");
  Matrix m(static_cast<int>(n), static_cast<int>(n), mode);
  for (long i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<long>(row.size()) != n) throw InputError("matrix rows must have n entries");
    for (long j = 0; j < n; ++j) m(i, j) = entry_from_json(row[j], mode);
  }
  return NonnegMatrix(std::move(m));
}

Vector vector_from_json(const Json& doc, Mode mode) {
  const Json& entries = field(doc, "entries");
  if (!entries.is_array()) throw InputError("\"entries\" must be an array");
  Vector v;
  for (const Json& e : entries) v.push_back(entry_from_json(e, mode));
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) {
    const mpq_class& q = s.q();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
  }
  double d = s.d();
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  return d;
}

Json index_set_to_json(const IndexSet& s) { return Json(s); }

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(scalar_to_json(e));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"n", m.rows()}, {"entries", rows}};
}

Json to_json(const Analysis& a) {
  Json classes = Json::array(), taxonomy = Json::array();
  for (int c = 0; c < a.num_classes(); ++c) {
    classes.push_back(a.classes.classes[c]);
    const ClassFlags& f = a.taxonomy.flags[c];
    std::vector<int> reaches;
    for (int d = 0; d < a.num_classes(); ++d)
      if (a.classes.strictly_accesses(c, d)) reaches.push_back(d);
    taxonomy.push_back(Json{{"class", c},
                            {"vertices", a.classes.classes[c]},
                            {"radius", scalar_to_json(f.radius)},
                            {"basic", f.basic},
                            {"final", f.final},
                            {"initial", f.initial},
                            {"distinguished", f.distinguished},
                            {"distinguished_for_transpose", f.distinguished_for_transpose},
                            {"semi_distinguished", a.taxonomy.semi_distinguished(a.classes, c, f.radius)},
                            {"strictly_accesses", reaches}});
  }
  Json dist = Json::array();
  for (const Scalar& s : distinguished_eigenvalues(a)) dist.push_back(scalar_to_json(s));
  Json spectral{{"rho", scalar_to_json(a.rho)},
                {"distinguished_eigenvalues", dist},
                {"index_at_rho", index_nu(a, a.rho)},
                {"mode", mode_name(a.mode())}};
  std::vector<int> basic;
  for (int c = 0; c < a.num_classes(); ++c)
    if (a.taxonomy.flags[c].basic) basic.push_back(c);
  Json faces{{"basic_vertices", vertices_of(a.classes, basic)},
             {"strict_access_to_basic", a.n() ? necessary_face(a, a.rho) : IndexSet{}},
             {"access_to_basic", eigencone_support(a, a.rho)}};
  return Json{{"n", a.n()}, {"classes", classes}, {"taxonomy", taxonomy}, {"spectral", spectral}, {"faces", faces}};
}

Json to_json(const SolveReport1& r) {
  Json out{{"solvable", r.solvable},
           {"unique", r.unique},
           {"fired_condition", r.fired_condition},
           {"rho_b", scalar_to_json(r.rho_b)},
           {"residual_norm", scalar_to_json(r.residual_norm)},
           {"eigen_freedom", r.eigen_freedom}};
  out["x0"] = r.x0 ? vector_to_json(*r.x0) : Json(nullptr);
  out["witness_class"] = r.witness_class ? Json(*r.witness_class) : Json(nullptr);
  return out;
}

Json to_json(const SolveReport2& r) {
  Json out{{"regime", regime_name(r.regime)},
           {"solvable", r.solvable},
           {"certificate", r.certificate},
           {"rho_b", scalar_to_json(r.rho_b)}};
  out["x"] = r.x ? vector_to_json(*r.x) : Json(nullptr);
  out["spectral_pair_of_x"] = r.spectral_pair_of_x
                                  ? Json{{"rho", scalar_to_json(r.spectral_pair_of_x->rho)},
                                         {"ord", r.spectral_pair_of_x->ord}}
                                  : Json(nullptr);
  return out;
}

Json to_json(const CWReport& r) {
  return Json{{"r_lower", scalar_to_json(r.r_lower)},
              {"R_upper", r.r_upper ? scalar_to_json(*r.r_upper) : Json("inf")},
              {"rho_x", scalar_to_json(r.rho_x)}};
}

Json to_json(const CWSets& r) {
  Json out{{"sup_omega", scalar_to_json(r.sup_omega)},
           {"inf_sigma", scalar_to_json(r.inf_sigma)},
           {"sup_omega1", scalar_to_json(r.sup_omega1)},
           {"inf_sigma1", scalar_to_json(r.inf_sigma1)},
           {"inf_sigma1_attained", r.inf_sigma1_attained}};
  out["sup_omega1_witness"] = r.sup_omega1_witness ? vector_to_json(*r.sup_omega1_witness) : Json(nullptr);
  return out;
}

Json to_json(const AltResult& r) {
  return Json{{"kind", alt_kind_name(r.kind)}, {"length", r.length}, {"iterates_checked", r.iterates_checked}};
}

Json to_json(const Conditions31& r) {
  return Json{{"b", r.b}, {"c", verdict_name(r.c)}, {"d", verdict_name(r.d)}, {"e", r.e}, {"f", r.f},
              {"g", r.g}, {"h", r.h}, {"i", r.i}, {"j", r.j}, {"consistent", r.consistent}};
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

}  // namespace pfcone
