#include "hecke/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include "hecke/error.hpp"
#include "hecke/serialize.hpp"

namespace hecke::cli {

namespace {

struct Options {
  std::string group = "sl2r";
  std::string mu;
  std::optional<int> k;
  std::optional<long long> n;
  std::string geom;
  std::string preset;
  std::string out;
  std::string spec;
  std::string interpretation = "conjugate";
  double tolerance = 1e-6;
  bool expect_integral = false;
};

Weight parse_mu(const std::string& text) {
  Weight w;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    w.coords.push_back(parse_rational(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return w;
}

std::string fmt(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() + 0.0;
  if (std::abs(z.imag()) > 1e-12) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ValidationError("cannot write '" + o.out + "'");
  f << j.dump(2) << "\n";
}

int rootsys_show(const Options& o, std::ostream& out) {
  auto rs = build_root_system(GroupDescriptor::parse(o.group));
  auto j = to_json(rs);
  if (!o.out.empty())
    out << rs.descriptor().name() << ": |R+| = " << rs.positive_roots().size()
        << ", dim p = " << rs.dim_p() << ", dim n1 = " << rs.dim_n1() << ", dim n2 = " << rs.dim_n2()
        << "\n";
  emit(j, o, out);
  return kOk;
}

int lefschetz_assemble(const Options& o, std::ostream& out) {
  auto rs = build_root_system(GroupDescriptor::parse(o.group));
  if (o.mu.empty() == !o.k.has_value())
    throw ValidationError("give exactly one of --mu and --k");
  if (o.geom.empty() == o.preset.empty())
    throw ValidationError("give exactly one of --geom and --preset");

  Weight mu;
  if (o.k) {
    if (!(rs.descriptor() == GroupDescriptor{Family::su, 1}))
      throw ValidationError("--k is only defined for sl2r / su(1,1)");
    mu = sl2::weight_k_parameter(*o.k);
  } else {
    mu = parse_mu(o.mu);
  }

  GeometricData geom;
  bool integral = o.expect_integral;
  if (!o.preset.empty()) {
    if (o.preset != "sl2z") throw ValidationError("unknown preset '" + o.preset + "'");
    if (!(rs.descriptor() == GroupDescriptor{Family::su, 1}))
      throw ValidationError("the sl2z preset needs --group sl2r");
    if (!o.n) throw ValidationError("--preset sl2z needs --n");
    geom = sl2::build_geom_sl2z(*o.n);
    integral = integral || *o.n == 1;
  } else {
    geom = geometry_from_json(read_json_file(o.geom));
  }

  auto b = assemble(rs, mu, geom, parse_interpretation(o.interpretation));
  Json j;
  j["group"] = rs.descriptor().name();
  j["mu"] = to_json(mu);
  j["geometry_source"] = o.preset.empty() ? o.geom : "preset:" + o.preset + ":n=" + std::to_string(*o.n);
  j["breakdown"] = to_json(b);
  j["integrality_contracted"] = integral;
  if (!o.out.empty()) {
    out << "central      " << fmt(b.central) << "\n"
        << "elliptic     " << fmt(b.elliptic) << "\n"
        << "parabolic I  " << fmt(b.parabolic_I) << "\n"
        << "parabolic II " << fmt(b.parabolic_II) << "\n"
        << "residue      " << fmt(b.residue) << "\n"
        << "total        " << fmt(b.total) << "  (rounded " << b.rounded << ", defect "
        << b.rounding_defect << ")\n";
  }
  emit(j, o, out);
  if (integral && b.rounding_defect >= o.tolerance) return kNonIntegral;
  return kOk;
}

int sl2_oracle(const Options& o, std::ostream& out) {
  if (!o.k || !o.n) throw ValidationError("sl2 oracle needs --k and --n");
  sl2::validate_weight(*o.k);
  if (*o.n < 1) throw ValidationError("--n must be positive");
  Json j;
  j["k"] = *o.k;
  j["n"] = *o.n;
  j["eichler_selberg"] = sl2::eichler_selberg(*o.k, *o.n).str();
  j["dim_cusp_forms"] = sl2::dim_cusp_forms(*o.k);
  if (*o.k == 12) j["tau"] = sl2::delta_coeffs(static_cast<int>(*o.n)).back().str();
  if (!o.out.empty())
    out << "Tr T_" << *o.n << " on S_" << *o.k << " = " << j["eichler_selberg"].get<std::string>() << "\n";
  emit(j, o, out);
  return kOk;
}

int sl2_compare(const Options& o, std::ostream& out) {
  if (!o.k || !o.n) throw ValidationError("sl2 compare needs --k and --n");
  if (*o.n < 1) throw ValidationError("--n must be positive");
  auto r = sl2::compare(*o.k, *o.n, parse_interpretation(o.interpretation), o.tolerance);
  if (!o.out.empty())
    out << "k=" << r.k << " n=" << r.n << ": lefschetz " << fmt(r.lefschetz_value) << ", oracle "
        << r.oracle_value << ", rule " << r.exponent_rule << ", defect " << r.defect
        << (r.match ? ", match" : ", MISMATCH") << "\n";
  emit(to_json(r), o, out);
  return r.match ? kOk : kMismatch;
}

int epstein_const(const Options& o, std::ostream& out) {
  if (o.spec.empty()) throw ValidationError("epstein const needs --spec");
  auto c = zeta_constant_terms(epstein_spec_from_json(read_json_file(o.spec)));
  if (!o.out.empty())
    out << "constant term " << std::setprecision(12) << c.constant_term << ", pole order "
        << c.pole_order_at_0 << "\n";
  emit(to_json(c), o, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lefschetz numbers of Hecke operators on rank-one locally symmetric spaces", "hecke"};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "write the JSON report here"); };

  auto* rootsys = app.add_subcommand("rootsys", "root data");
  auto* rs_show = rootsys->add_subcommand("show", "dump the root datum of a group");
  rs_show->add_option("group", o.group, "su(n,1), so(2n,1), sp(n,1) or sl2r")->required();
  add_out(rs_show);
  rootsys->require_subcommand(1);

  auto* lef = app.add_subcommand("lefschetz", "Lefschetz numbers");
  auto* assemble_cmd = lef->add_subcommand("assemble", "assemble all contributions");
  assemble_cmd->add_option("--group", o.group, "group descriptor")->capture_default_str();
  assemble_cmd->add_option("--mu", o.mu, "weight mu as comma-separated rationals");
  assemble_cmd->add_option("--k", o.k, "holomorphic weight k (sl2r only)");
  assemble_cmd->add_option("--geom", o.geom, "GeometricData JSON file");
  assemble_cmd->add_option("--preset", o.preset, "built-in geometry (sl2z)");
  assemble_cmd->add_option("--n", o.n, "Hecke index for the preset");
  assemble_cmd->add_option("--interpretation", o.interpretation, "conjugate or identity")
      ->capture_default_str();
  assemble_cmd->add_option("--tolerance", o.tolerance, "integrality tolerance")->capture_default_str();
  assemble_cmd->add_flag("--expect-integral", o.expect_integral, "fail with exit 3 on a non-integral total");
  add_out(assemble_cmd);
  lef->require_subcommand(1);

  auto* sl2cmd = app.add_subcommand("sl2", "SL(2,Z) oracles");
  auto* oracle = sl2cmd->add_subcommand("oracle", "classical trace of T_n on S_k");
  auto* cmp = sl2cmd->add_subcommand("compare", "compare the Lefschetz number with the classical trace");
  for (auto* c : {oracle, cmp}) {
    c->add_option("--k", o.k, "weight")->required();
    c->add_option("--n", o.n, "Hecke index")->required();
    add_out(c);
  }
  cmp->add_option("--interpretation", o.interpretation, "conjugate or identity")->capture_default_str();
  cmp->add_option("--tolerance", o.tolerance, "match tolerance")->capture_default_str();
  sl2cmd->require_subcommand(1);

  auto* ep = app.add_subcommand("epstein", "cusp zeta functions");
  auto* ep_const = ep->add_subcommand("const", "constant term at z = 0");
  ep_const->add_option("--spec", o.spec, "EpsteinSpec JSON file")->required();
  add_out(ep_const);
  ep->require_subcommand(1);

  std::vector<std::string> argv_store{"hecke"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (rs_show->parsed()) return rootsys_show(o, out);
    if (assemble_cmd->parsed()) return lefschetz_assemble(o, out);
    if (oracle->parsed()) return sl2_oracle(o, out);
    if (cmp->parsed()) return sl2_compare(o, out);
    if (ep_const->parsed()) return epstein_const(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}

}  // namespace hecke::cli
