#include "schwarz/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include "schwarz/criteria.hpp"
#include "schwarz/gallery.hpp"
#include "schwarz/hyperbolic.hpp"
#include "schwarz/report.hpp"
#include "schwarz/surface.hpp"

namespace schwarz::cli {

namespace {

struct Args {
  std::string f, h, q, g, phi, p = "classical", at, w = "0", out, mesh_out, only, z0;
  std::optional<double> C, r, delta;
  double radius = 1.0;
  double rmin = 0.0;
  int depth = 12;
  int nr = 32, ntheta = 64;
};

double parse_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError("malformed " + what + " '" + s + "'");
}

// RE[,IM]
cplx parse_point(const std::string& s, const std::string& what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return parse_real(s, what);
  return {parse_real(s.substr(0, comma), what), parse_real(s.substr(comma + 1), what)};
}

AnalyticMap parse_map(const std::string& src, const char* flag, double radius) {
  try {
    return AnalyticMap::parse(src, radius);
  } catch (const ParseError& e) {
    throw InputError(std::string(flag) + ": " + e.what());
  }
}

bool wants_harmonic(const Args& a) { return !a.h.empty(); }

AnalyticMap analytic_map(const Args& a) {
  if (a.f.empty()) throw InputError("--f is required");
  return parse_map(a.f, "--f", a.radius);
}

HarmonicMap harmonic_map(const Args& a) {
  if (!a.f.empty() && a.h.empty()) return HarmonicMap::analytic(analytic_map(a));
  if (a.h.empty() || a.q.empty()) throw InputError("harmonic maps need both --h and --q");
  std::optional<AnalyticMap> g;
  if (!a.g.empty()) g = parse_map(a.g, "--g", a.radius);
  const cplx z0 = a.z0.empty() ? cplx(0.0) : parse_point(a.z0, "--z0");
  return HarmonicMap(parse_map(a.h, "--h", a.radius), parse_map(a.q, "--q", a.radius), g, z0);
}

void echo_maps(const Args& a, Json& inputs) {
  for (const auto& [key, value] : {std::pair{"f", a.f}, {"h", a.h}, {"q", a.q}, {"g", a.g}, {"phi", a.phi}}) {
    if (!value.empty()) inputs[key] = value;
  }
  if (a.radius != 1.0) inputs["radius"] = std::isinf(a.radius) ? Json("inf") : number(a.radius);
}

cplx required_point(const std::string& s, const char* flag) {
  if (s.empty()) throw InputError(std::string(flag) + " is required");
  return parse_point(s, flag);
}

Json mesh_artifacts(const HarmonicMap& f, const Args& a, double r_max) {
  const SurfaceMesh mesh = build_mesh(f, r_max, std::size_t(a.nr), std::size_t(a.ntheta), a.rmin);
  std::filesystem::path csv = a.mesh_out;
  csv.replace_extension(".curvature.csv");
  std::ofstream obj(a.mesh_out);
  if (!obj) throw InputError("cannot write " + a.mesh_out);
  write_obj(mesh, obj);
  std::ofstream k(csv);
  if (!k) throw InputError("cannot write " + csv.string());
  write_curvature_csv(mesh, k);
  return Json{{"obj", a.mesh_out},
              {"curvature_csv", csv.string()},
              {"vertices", mesh.vertices.size()},
              {"faces", mesh.faces.size()},
              {"r_min", number(a.rmin)},
              {"r_max", number(r_max)},
              {"n_r", a.nr},
              {"n_theta", a.ntheta}};
}

Report cmd_schwarzian(const Args& a) {
  Report rep;
  rep.command = "schwarzian";
  echo_maps(a, rep.inputs);
  const cplx z = required_point(a.at, "--at");
  rep.inputs["at"] = to_json(z);
  if (wants_harmonic(a)) {
    const HarmonicMap f = harmonic_map(a);
    rep.results["value"] = to_json(schwarzian_harmonic(f, z));
    rep.results["curvature_term"] = number(curvature_term(f, z));
  } else {
    rep.results["value"] = to_json(schwarzian_analytic(analytic_map(a), z));
  }
  return rep;
}

Report cmd_norm(const Args& a) {
  Report rep;
  rep.command = "norm";
  echo_maps(a, rep.inputs);
  rep.inputs["grid"] = polar_grid(a.depth);
  NormEstimate n;
  if (wants_harmonic(a)) {
    const HarmonicMap f = harmonic_map(a);
    n = norm_estimate([&](cplx z) { return schwarzian_harmonic(f, z); }, a.depth);
  } else {
    const AnalyticMap f = analytic_map(a);
    n = norm_estimate([&](cplx z) { return schwarzian_analytic(f, z); }, a.depth);
  }
  rep.results = Json{{"lower", number(n.lower)},
                     {"sup_point", to_json(n.sup_point)},
                     {"grid", polar_grid(n.grid_depth)},
                     {"converged", n.converged},
                     {"samples", n.samples},
                     {"excluded", n.excluded}};
  rep.exclusions = n.exclusions;
  return rep;
}

Report cmd_criterion(const Args& a) {
  Report rep;
  rep.command = "criterion";
  echo_maps(a, rep.inputs);
  const NehariFunction p = NehariFunction::from_spec(a.p);
  rep.inputs["p"] = a.p;
  rep.inputs["grid"] = polar_grid(a.depth);
  if (a.C) rep.inputs["C"] = number(*a.C);
  const CriterionVerdict v = wants_harmonic(a) ? check_bound(harmonic_map(a), p, a.depth, a.C)
                                               : check_bound(analytic_map(a), p, a.depth, a.C);
  rep.results = to_json(v);
  rep.results["mu_method"] = p.mu_method().empty() ? Json("closed form") : Json(p.mu_method());
  if (a.C) rep.results["finite_valence_for_C"] = classify_finite_valence(*a.C, p);
  rep.exclusions = v.exclusions;
  return rep;
}

Report cmd_valence(const Args& a) {
  Report rep;
  rep.command = "valence";
  echo_maps(a, rep.inputs);
  if (!a.r) throw InputError("--r is required");
  const cplx w = parse_point(a.w, "--w");
  rep.inputs["w"] = to_json(w);
  rep.inputs["r"] = number(*a.r);
  rep.results = to_json(count_valence(analytic_map(a), w, *a.r));
  return rep;
}

Report cmd_ode(const Args& a) {
  Report rep;
  rep.command = "ode";
  const NehariFunction p = NehariFunction::from_spec(a.p);
  if (a.C && a.delta) throw InputError("give at most one of --C and --delta");
  double C = 2.0;
  if (a.C) C = *a.C;
  if (a.delta) C = 2.0 * (1.0 + *a.delta * *a.delta);
  const double from = a.at.empty() ? 0.0 : parse_real(a.at, "--at");
  rep.inputs = Json{{"p", a.p}, {"C", number(C)}, {"from", number(from)}};
  if (a.delta) rep.inputs["delta"] = number(*a.delta);
  const auto zero = first_zero(p.weight(C / 2.0), from);
  rep.results["weight"] = "(C/2) p";
  rep.results["mu"] = number(p.mu());
  rep.results["first_zero"] = zero ? number(*zero) : Json(nullptr);
  rep.results["hyp_distance"] = zero ? number(hyp_distance(from, *zero)) : Json(nullptr);
  if (a.delta) rep.results["expected_hyp_distance"] = number(hyperbolic_zero_spacing(*a.delta).hyperbolic);
  return rep;
}

Report cmd_lift(const Args& a) {
  Report rep;
  rep.command = "lift";
  echo_maps(a, rep.inputs);
  const HarmonicMap f = harmonic_map(a);
  rep.inputs["z0"] = to_json(f.basepoint());
  if (a.at.empty() && a.mesh_out.empty()) throw InputError("lift needs --at and/or --mesh-out");
  if (!a.at.empty()) {
    const cplx z = parse_point(a.at, "--at");
    rep.inputs["at"] = to_json(z);
    rep.results["sample"] = to_json(lift(f, z));
  }
  if (!a.mesh_out.empty()) rep.results["mesh"] = mesh_artifacts(f, a, a.r.value_or(0.9));
  return rep;
}

Report cmd_shear(const Args& a) {
  Report rep;
  rep.command = "shear";
  if (a.phi.empty() || a.q.empty()) throw InputError("shear needs --phi and --q");
  echo_maps(a, rep.inputs);
  const AnalyticMap phi = parse_map(a.phi, "--phi", a.radius);
  const HarmonicMap f = shear(phi, parse_map(a.q, "--q", a.radius));
  rep.results["h"] = f.h().describe();
  rep.results["g"] = f.g().describe();
  if (!a.at.empty()) {
    const cplx z = parse_point(a.at, "--at");
    rep.inputs["at"] = to_json(z);
    const cplx hv = f.h().value(z), gv = f.g().value(z);
    rep.results["h_value"] = to_json(hv);
    rep.results["g_value"] = to_json(gv);
    rep.results["schwarzian"] = to_json(schwarzian_harmonic(f, z));
    rep.results["shear_residual"] = number(std::abs(hv - gv - phi.value(z)));
  }
  if (!a.mesh_out.empty()) rep.results["mesh"] = mesh_artifacts(f, a, a.r.value_or(0.9));
  return rep;
}

int cmd_gallery(const Args& a, std::ostream& out, std::ostream& err) {
  gallery::Options opts;
  if (a.delta) opts.delta = *a.delta;
  opts.depth = a.depth;
  std::vector<std::string> names = gallery::case_names();
  if (!a.only.empty()) names = {a.only};

  Report rep;
  rep.command = "gallery";
  rep.inputs = Json{{"delta", number(opts.delta)}, {"grid", polar_grid(opts.depth)}};
  if (!a.only.empty()) rep.inputs["only"] = a.only;
  std::vector<std::string> failed;
  char line[256];
  for (const auto& name : names) {
    const gallery::Case c = gallery::run_case(name, opts);
    Json checks = Json::array();
    for (const auto& ch : c.checks) {
      std::snprintf(line, sizeof line, "  %-4s %-52s residual %.3e (tol %.1e)\n", ch.pass ? "ok" : "FAIL",
                    ch.name.c_str(), ch.residual, ch.tolerance);
      out << line;
      checks.push_back(Json{{"name", ch.name}, {"residual", number(ch.residual)}, {"tolerance", number(ch.tolerance)},
                            {"pass", ch.pass}});
    }
    if (!c.error.empty()) out << "  FAIL error: " << c.error << "\n";
    std::snprintf(line, sizeof line, "%s %s (%.2f s)\n", c.pass() ? "PASS" : "FAIL", name.c_str(), c.seconds);
    out << line;
    rep.results[name] = Json{{"pass", c.pass()}, {"checks", checks}, {"error", c.error}};
    if (!c.pass()) failed.push_back(name);
  }
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw InputError("cannot write " + a.out);
    f << rep.dump();
  }
  if (!failed.empty()) {
    err << "gallery failed:";
    for (const auto& n : failed) err << ' ' << n;
    err << "\n";
    return kCheckFailed;
  }
  return kOk;
}

void emit(const Report& rep, const Args& a, std::ostream& out) {
  if (a.out.empty()) {
    out << rep.dump();
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw InputError("cannot write " + a.out);
  f << rep.dump();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schwarzian derivatives, univalence criteria and minimal-surface lifts on the unit disk", "schwarz"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  Args a;

  // Accepts "inf" for maps defined on the whole plane.
  const CLI::Validator positive_radius(
      [](std::string& v) -> std::string {
        try {
          if (std::stod(v) > 0.0) return {};
        } catch (const std::logic_error&) {
        }
        return "radius must be a positive number or inf";
      },
      "POSITIVE");

  auto map_flags = [&](CLI::App* s, bool harmonic) {
    s->set_help_flag("--help", "print this help and exit");
    s->add_option("--f", a.f, "analytic map f(z)");
    if (harmonic) {
      s->add_option("--h", a.h, "analytic part h(z)");
      s->add_option("--q", a.q, "square root q of the dilatation");
      s->add_option("--g", a.g, "co-analytic part g(z) (default: primitive of q^2 h')");
      s->add_option("--z0", a.z0, "lift basepoint RE[,IM]");
    }
    s->add_option("--radius", a.radius, "domain radius of the maps")->check(positive_radius);
    s->add_option("--out", a.out, "write the JSON report here instead of stdout");
  };

  auto* schw = app.add_subcommand("schwarzian", "Schwarzian derivative at a point");
  map_flags(schw, true);
  schw->add_option("--at", a.at, "point RE[,IM]");

  auto* norm = app.add_subcommand("norm", "lower bound for sup (1-|z|^2)^2 |Sf(z)|");
  map_flags(norm, true);
  norm->add_option("--depth", a.depth, "grid depth")->check(CLI::Range(1, 40));

  auto* crit = app.add_subcommand("criterion", "sample |Sf| (+ curvature) against C p(|z|) and classify");
  map_flags(crit, true);
  crit->add_option("--p", a.p, "classical|const|linear|param:<t>|file:<path>");
  crit->add_option("--C", a.C, "constant to test");
  crit->add_option("--depth", a.depth, "grid depth")->check(CLI::Range(1, 40));

  auto* val = app.add_subcommand("valence", "count solutions of f(z) = w in |z| < r");
  map_flags(val, false);
  val->add_option("--w", a.w, "target RE[,IM]");
  val->add_option("--r", a.r, "contour radius");

  auto* ode = app.add_subcommand("ode", "first zero of u'' + (C/2) p u = 0 with u(from) = 0, u'(from) = 1");
  ode->set_help_flag("--help", "print this help and exit");
  ode->add_option("--p", a.p, "classical|const|linear|param:<t>|file:<path>");
  ode->add_option("--C", a.C, "constant C (weight (C/2) p)");
  ode->add_option("--delta", a.delta, "use C = 2(1+delta^2)");
  ode->add_option("--at", a.at, "starting point in (-1, 1)");
  ode->add_option("--out", a.out, "write the JSON report here instead of stdout");

  auto mesh_flags = [&](CLI::App* s) {
    s->add_option("--mesh-out", a.mesh_out, "OBJ mesh path (curvature CSV written alongside)");
    s->add_option("--r", a.r, "outer mesh radius (default 0.9)");
    s->add_option("--rmin", a.rmin, "inner mesh radius");
    s->add_option("--nr", a.nr, "mesh rings")->check(CLI::Range(2, 100000));
    s->add_option("--ntheta", a.ntheta, "mesh angles")->check(CLI::Range(3, 100000));
  };
  auto* lif = app.add_subcommand("lift", "Weierstrass-Enneper lift of a harmonic map");
  map_flags(lif, true);
  lif->add_option("--at", a.at, "point RE[,IM]");
  mesh_flags(lif);

  auto* she = app.add_subcommand("shear", "horizontal shear of phi with dilatation q^2");
  she->set_help_flag("--help", "print this help and exit");
  she->add_option("--phi", a.phi, "conformal map phi(z)");
  she->add_option("--q", a.q, "square root q of the dilatation");
  she->add_option("--radius", a.radius, "domain radius of the maps")->check(positive_radius);
  she->add_option("--at", a.at, "point RE[,IM]");
  she->add_option("--out", a.out, "write the JSON report here instead of stdout");
  mesh_flags(she);

  auto* gal = app.add_subcommand("gallery", "run the built-in regression examples");
  gal->set_help_flag("--help", "print this help and exit");
  gal->add_option("--only", a.only, "run a single case")->check(CLI::IsMember(gallery::case_names()));
  gal->add_option("--delta", a.delta, "delta for the hille case")->check(CLI::PositiveNumber);
  gal->add_option("--depth", a.depth, "grid depth for norm estimates")->check(CLI::Range(1, 40));
  gal->add_option("--out", a.out, "also write a JSON report");

  std::vector<std::string> storage{"schwarz"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (gal->parsed()) return cmd_gallery(a, out, err);
    Report rep;
    if (schw->parsed()) rep = cmd_schwarzian(a);
    if (norm->parsed()) rep = cmd_norm(a);
    if (crit->parsed()) rep = cmd_criterion(a);
    if (val->parsed()) rep = cmd_valence(a);
    if (ode->parsed()) rep = cmd_ode(a);
    if (lif->parsed()) rep = cmd_lift(a);
    if (she->parsed()) rep = cmd_shear(a);
    emit(rep, a, out);
    return kOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericError;
  }
}

}  // namespace schwarz::cli
