#include "hecke/serialize.hpp"

#include <fstream>

#include "hecke/error.hpp"

namespace hecke {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
  return get<T>(j, key);
}

const Json& array_or_empty(const Json& j, const char* key) {
  static const Json empty = Json::array();
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return empty;
  const Json& a = j.at(key);
  if (!a.is_array()) throw ValidationError(std::string("field '") + key + "' must be an array");
  return a;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ValidationError("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

std::string chamber_name(Chamber c) {
  switch (c) {
    case Chamber::plus: return "H_plus";
    case Chamber::minus: return "H_minus";
    case Chamber::boundary: return "a_equals_1";
  }
  return {};
}

Json doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

}  // namespace

Json to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords) a.push_back(to_string(c));
  return a;
}

Json to_json(const TorusElement& t) {
  Json j;
  if (t.exact) j["angles_exact"] = to_json(Weight{*t.exact});
  j["angles"] = doubles(t.angles);
  return j;
}

Json to_json(const NoncompactCartanElement& h) {
  return Json{{"compact_part", to_json(h.compact_part)},
              {"log_a", h.log_a},
              {"chamber", chamber_name(h.chamber)}};
}

Json to_json(const GeometricData& g) {
  Json j;
  j["total_vol"] = g.total_vol;
  j["central_classes"] = Json::array();
  for (const auto& c : g.central_classes) {
    Json t = Json::array();
    for (const auto& x : c.character_test_angles) t.push_back(to_json(x));
    j["central_classes"].push_back({{"z", to_json(c.z)}, {"character_test_angles", t}});
  }
  j["elliptic_classes"] = Json::array();
  for (const auto& e : g.elliptic_classes)
    j["elliptic_classes"].push_back(
        {{"rep", to_json(e.rep)}, {"vol_quotient", e.vol_quotient}, {"d_xi", e.d_xi}});
  j["parabolic_I"] = Json::array();
  for (const auto& p : g.parabolic_I) {
    Json roots = Json::array();
    for (const auto& r : p.Rplus_xi0) roots.push_back(to_json(r));
    j["parabolic_I"].push_back({{"delta_flag", p.delta_flag},
                                {"c_eta_plus", p.c_eta_plus},
                                {"c_eta_minus", p.c_eta_minus},
                                {"C_eta_plus", p.C_eta_plus},
                                {"C_eta_minus", p.C_eta_minus},
                                {"dim_n_eta1", p.dim_n_eta1},
                                {"eta_torus", to_json(p.eta_torus)},
                                {"Rplus_xi0", roots},
                                {"Z0_pairing", {{"re", doubles(p.Z0_pairing.re)},
                                                {"im", doubles(p.Z0_pairing.im)}}}});
  }
  j["parabolic_II"] = Json::array();
  for (const auto& p : g.parabolic_II)
    j["parabolic_II"].push_back({{"vol_M", p.vol_M},
                                 {"det_Ad_n", p.det_Ad_n},
                                 {"coset_index", p.coset_index},
                                 {"eta_H", to_json(p.eta_H)}});
  j["residue_scalar"] = g.residue_scalar ? to_json(*g.residue_scalar) : Json(nullptr);
  j["calibration"] = g.calibration;
  return j;
}

Json to_json(const LefschetzBreakdown& b) {
  Json j;
  j["branch"] = b.regular ? "regular" : "singular";
  j["central"] = to_json(b.central);
  j["elliptic"] = to_json(b.elliptic);
  j["parabolic_I"] = to_json(b.parabolic_I);
  j["parabolic_II"] = to_json(b.parabolic_II);
  j["residue"] = to_json(b.residue);
  j["total"] = to_json(b.total);
  j["rounded"] = b.rounded;
  j["rounding_defect"] = b.rounding_defect;
  j["interpretation"] = to_string(b.interpretation);
  j["parabolic_I_by_interpretation"] = {{"conjugate", to_json(b.parabolic_I_conjugate)},
                                        {"identity", to_json(b.parabolic_I_identity)}};
  return j;
}

Json to_json(const RootSystem& rs) {
  Json j;
  j["group"] = rs.descriptor().name();
  j["dim_t"] = rs.dim();
  j["form_scale"] = to_string(rs.form_scale());
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots())
    roots.push_back({{"coords", to_json(r.coords)}, {"kind", r.compact() ? "compact" : "noncompact"}});
  j["positive_roots"] = roots;
  Json simple = Json::array();
  for (const auto& r : rs.simple_roots()) simple.push_back(to_json(r.coords));
  j["simple_roots"] = simple;
  j["rho_g"] = to_json(rs.rho_g());
  j["rho_k"] = to_json(rs.rho_k());
  j["rho_p"] = to_json(rs.rho_p());
  j["cayley_root"] = to_json(rs.cayley_root());
  j["dim_p"] = rs.dim_p();
  j["dim_n1"] = rs.dim_n1();
  j["dim_n2"] = rs.dim_n2();
  j["weyl_order_full"] = weyl_group(rs, WeylSubgroup::full).size();
  j["weyl_order_compact"] = weyl_group(rs, WeylSubgroup::compact).size();
  auto [sp, sm] = spinor_dims(rs);
  j["spinor_dims"] = {sp, sm};
  return j;
}

Json to_json(const EpsteinSpec& s) {
  Json j;
  j["lattice_vol"] = s.lattice_vol;
  j["exponent_base"] = s.exponent_base;
  j["sign"] = s.sign == EpsteinSign::plus ? "plus" : "minus";
  j["classes"] = Json::array();
  for (const auto& c : s.classes) j["classes"].push_back({{"weight", c.weight}, {"norm", c.norm}});
  j["progressions"] = Json::array();
  for (const auto& p : s.progressions)
    j["progressions"].push_back({{"weight", p.weight}, {"scale", p.scale}, {"offset", p.offset}});
  j["truncated"] = s.truncated;
  return j;
}

Json to_json(const LaurentConstant& c) {
  return Json{{"constant_term", c.constant_term},
              {"pole_order_at_0", c.pole_order_at_0},
              {"residue", c.residue}};
}

Json to_json(const sl2::OracleReport& r) {
  Json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["lefschetz_value"] = to_json(r.lefschetz_value);
  j["oracle_value"] = r.oracle_value.str();
  j["exponent_rule"] = r.exponent_rule;
  j["rescaled_rounded"] = r.rescaled_rounded;
  j["match"] = r.match;
  j["defect"] = r.defect;
  j["tolerance"] = r.tolerance;
  Json cands = Json::array();
  for (const auto& c : r.candidates)
    cands.push_back({{"rule", c.rule},
                     {"exponent", c.exponent},
                     {"scaled_oracle", c.scaled_oracle},
                     {"defect", c.defect},
                     {"match", c.match}});
  j["exponent_candidates"] = cands;
  j["breakdown"] = to_json(r.breakdown);
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {get<double>(j, "re"), get_or<double>(j, "im", 0.0)};
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("weight must be an array, got " + j.dump());
  Weight w;
  for (const auto& x : j) w.coords.push_back(rational_from_json(x));
  return w;
}

TorusElement torus_from_json(const Json& j) {
  if (j.is_object() && j.contains("angles_exact"))
    return TorusElement::from_exact(weight_from_json(j.at("angles_exact")).coords);
  return TorusElement::from_angles(get<std::vector<double>>(j, "angles"));
}

NoncompactCartanElement cartan_from_json(const Json& j) {
  NoncompactCartanElement h;
  h.compact_part = torus_from_json(field(j, "compact_part"));
  h.log_a = get<double>(j, "log_a");
  auto c = get<std::string>(j, "chamber");
  if (c == "H_plus") h.chamber = Chamber::plus;
  else if (c == "H_minus") h.chamber = Chamber::minus;
  else if (c == "a_equals_1") h.chamber = Chamber::boundary;
  else throw ValidationError("chamber must be H_plus, H_minus or a_equals_1, got '" + c + "'");
  return h;
}

GeometricData geometry_from_json(const Json& j) {
  GeometricData g;
  g.total_vol = get<double>(j, "total_vol");
  for (const auto& c : array_or_empty(j, "central_classes")) {
    CentralClass cc;
    cc.z = torus_from_json(field(c, "z"));
    for (const auto& t : array_or_empty(c, "character_test_angles"))
      cc.character_test_angles.push_back(torus_from_json(t));
    g.central_classes.push_back(cc);
  }
  for (const auto& e : array_or_empty(j, "elliptic_classes"))
    g.elliptic_classes.push_back(
        {torus_from_json(field(e, "rep")), get<double>(e, "vol_quotient"), get<double>(e, "d_xi")});
  for (const auto& p : array_or_empty(j, "parabolic_I")) {
    ParabolicIEntry e;
    e.delta_flag = get<bool>(p, "delta_flag");
    e.c_eta_plus = get<double>(p, "c_eta_plus");
    e.c_eta_minus = get<double>(p, "c_eta_minus");
    e.C_eta_plus = get<double>(p, "C_eta_plus");
    e.C_eta_minus = get<double>(p, "C_eta_minus");
    e.dim_n_eta1 = get<int>(p, "dim_n_eta1");
    e.eta_torus = torus_from_json(field(p, "eta_torus"));
    for (const auto& r : array_or_empty(p, "Rplus_xi0")) e.Rplus_xi0.push_back(weight_from_json(r));
    const Json& z = field(p, "Z0_pairing");
    e.Z0_pairing.re = get<std::vector<double>>(z, "re");
    e.Z0_pairing.im = get<std::vector<double>>(z, "im");
    g.parabolic_I.push_back(e);
  }
  for (const auto& p : array_or_empty(j, "parabolic_II"))
    g.parabolic_II.push_back({get<double>(p, "vol_M"), get<double>(p, "det_Ad_n"),
                              get<long long>(p, "coset_index"), cartan_from_json(field(p, "eta_H"))});
  if (j.contains("residue_scalar") && !j.at("residue_scalar").is_null())
    g.residue_scalar = complex_from_json(j.at("residue_scalar"));
  g.calibration = get_or<double>(j, "calibration", 1.0);
  if (!(g.total_vol >= 0)) throw ValidationError("total_vol must be non-negative");
  if (!(g.calibration > 0)) throw ValidationError("calibration must be positive");
  return g;
}

EpsteinSpec epstein_spec_from_json(const Json& j) {
  EpsteinSpec s;
  s.lattice_vol = get_or<double>(j, "lattice_vol", 1.0);
  s.exponent_base = get<int>(j, "exponent_base");
  auto sign = get_or<std::string>(j, "sign", "plus");
  if (sign != "plus" && sign != "minus") throw ValidationError("sign must be 'plus' or 'minus'");
  s.sign = sign == "plus" ? EpsteinSign::plus : EpsteinSign::minus;
  for (const auto& c : array_or_empty(j, "classes"))
    s.classes.push_back({get<double>(c, "weight"), get<double>(c, "norm")});
  for (const auto& p : array_or_empty(j, "progressions"))
    s.progressions.push_back(
        {get_or<double>(p, "weight", 1.0), get<double>(p, "scale"), get<double>(p, "offset")});
  s.truncated = get_or<bool>(j, "truncated", false);
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace hecke
