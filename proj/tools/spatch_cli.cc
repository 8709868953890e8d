// Command-line front end: fill, eval, mesh, check, info and gen subcommands
// over the ribbon/net JSON formats. Machine output (JSON or OBJ) goes to
// standard output or files, diagnostics to standard error. Exit codes:
// 0 success, 1 I/O or parse failure, 2 validation failure.

#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spatch/errors.hh"
#include "spatch/fill.hh"
#include "spatch/generator.hh"
#include "spatch/interior.hh"
#include "spatch/meshio.hh"
#include "spatch/spatch.hh"
#include "spatch/verify.hh"

namespace {

using json = nlohmann::ordered_json;
using namespace spatch;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;     // I/O, parse, unexpected
constexpr int kExitValidation = 2;  // invalid data or failed checks

CoordScheme parse_scheme(const std::string& name) {
  if (name == "wachspress") return CoordScheme::Wachspress;
  if (name == "meanvalue") return CoordScheme::MeanValue;
  throw ValidationError("unknown coordinate scheme '" + name + "'");
}

MaskKind parse_mask(const std::string& name) {
  if (name == "harmonic") return MaskKind::Harmonic;
  if (name == "biharmonic") return MaskKind::Biharmonic;
  throw ValidationError("unknown mask '" + name + "'");
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse number list '" + text + "'");
    }
  }
  return out;
}

struct Options {
  std::string input, output, ribbon;
  std::string continuity = "g1";
  std::string mask;  // empty: pick by continuity
  std::string coords = "wachspress";
  int resolution = 16;
  int samples = 33;
  double tolerance = 1e-9;
  double g1_tolerance = 2e-3;
  std::string offsets = "1e-2,1e-3";
  bool no_normals = false;
  std::string bary, uv;
  int n = 5;
  int degree = 5;
  std::uint64_t seed = 1;
  double amplitude = 0.3;
};

int classification_counts(const SPatchNet& net, int& boundary, int& ring) {
  boundary = ring = 0;
  for (int o = 0; o < net.size(); ++o) {
    switch (classify_label(net.labels().label(o))) {
      case LabelClass::Boundary: ++boundary; break;
      case LabelClass::PanelRing: ++ring; break;
      case LabelClass::Free: break;
    }
  }
  return net.size() - boundary - ring;
}

int cmd_fill(const Options& opt) {
  Ribbon ribbon = read_ribbon(opt.input);
  MaskKind mask = opt.mask.empty()
                      ? (opt.continuity == "c0" ? MaskKind::Harmonic : MaskKind::Biharmonic)
                      : parse_mask(opt.mask);

  PartialNet partial = opt.continuity == "c0" ? fill_c0(ribbon, opt.tolerance)
                                              : g1_panels(ribbon, opt.tolerance);
  int fixed = partial.fixed_count();
  SPatchNet net = solve_interior(partial, mask);
  write_net(net, opt.output);

  json summary;
  summary["n"] = ribbon.n();
  summary["d"] = ribbon.degree();
  summary["continuity"] = opt.continuity;
  summary["mask"] = mask == MaskKind::Harmonic ? "harmonic" : "biharmonic";
  summary["depth"] = net.depth();
  summary["points"] = net.size();
  summary["fixed"] = fixed;
  summary["free"] = net.size() - fixed;
  summary["output"] = opt.output;
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_eval(const Options& opt) {
  SPatchNet net = read_net(opt.input);
  Point3 value;
  if (!opt.bary.empty()) {
    std::vector<double> values = parse_numbers(opt.bary);
    if (static_cast<int>(values.size()) != net.n())
      throw ValidationError("expected " + std::to_string(net.n()) + " barycentric coordinates");
    Barycentric bary{values};
    if (std::abs(bary.sum() - 1.0) > 1e-9)
      throw ValidationError("barycentric coordinates must sum to 1 within 1e-9");
    value = net.eval(bary);
  } else {
    std::vector<double> uv = parse_numbers(opt.uv);
    if (uv.size() != 2) throw ValidationError("--uv needs exactly two numbers");
    DomainPolygon poly(net.n());
    value = eval_at_domain_point(net, poly, Point2(uv[0], uv[1]), parse_scheme(opt.coords));
  }
  json out;
  out["point"] = {value.x(), value.y(), value.z()};
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int cmd_mesh(const Options& opt) {
  SPatchNet net = read_net(opt.input);
  SurfaceMesh mesh = mesh_patch(net, opt.resolution, parse_scheme(opt.coords), !opt.no_normals);
  write_obj(mesh, opt.output);

  json summary;
  summary["vertices"] = mesh.vertices.size();
  summary["triangles"] = mesh.triangles.size();
  summary["normals"] = !mesh.normals.empty();
  summary["degenerate_normals"] = mesh.degenerate_normals;
  summary["output"] = opt.output;
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_check(const Options& opt) {
  SPatchNet net = read_net(opt.input);
  Ribbon ribbon = read_ribbon(opt.ribbon);

  CheckOptions options;
  options.continuity = opt.continuity == "c0" ? Continuity::C0 : Continuity::G1;
  options.scheme = parse_scheme(opt.coords);
  options.samples = opt.samples;
  options.tol = opt.tolerance;
  options.g1_tol_rad = opt.g1_tolerance;
  options.offsets = parse_numbers(opt.offsets);
  if (options.offsets.empty()) throw ValidationError("--offsets needs at least one value");

  CheckReport report = run_checks(net, ribbon, options);
  std::string text = report_json(report);
  if (opt.output.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(opt.output);
    if (!out) throw IOError("cannot open '" + opt.output + "' for writing");
    out << text << '\n';
    std::cout << json{{"pass", report.pass}, {"output", opt.output}}.dump() << '\n';
  }
  return report.pass ? kExitOk : kExitValidation;
}

int cmd_info(const Options& opt) {
  SPatchNet net = read_net(opt.input);
  int boundary = 0, ring = 0;
  int free_count = classification_counts(net, boundary, ring);

  json out;
  out["n"] = net.n();
  out["depth"] = net.depth();
  out["points"] = net.size();
  out["boundary"] = boundary;
  out["panel_ring"] = ring;
  out["fixed"] = boundary + ring;
  out["free"] = free_count;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_gen(const Options& opt) {
  RibbonSpec spec;
  spec.n = opt.n;
  spec.degree = opt.degree;
  spec.seed = opt.seed;
  spec.amplitude = opt.amplitude;
  Ribbon ribbon = make_ribbon(spec);
  write_ribbon(ribbon, opt.output);

  std::set<std::array<double, 3>> distinct;
  for (const RibbonSide& side : ribbon.sides) {
    for (const Point3& p : side.outer) distinct.insert({p.x(), p.y(), p.z()});
    for (const Point3& p : side.inner) distinct.insert({p.x(), p.y(), p.z()});
  }

  json summary;
  summary["n"] = spec.n;
  summary["d"] = spec.degree;
  summary["seed"] = spec.seed;
  summary["control_points"] = distinct.size();
  summary["output"] = opt.output;
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-sided hole filling with S-patches"};
  app.require_subcommand(1);
  Options opt;

  auto add_coords = [&](CLI::App* cmd) {
    cmd->add_option("--coords", opt.coords, "Barycentric scheme: wachspress | meanvalue")
        ->check(CLI::IsMember({"wachspress", "meanvalue"}));
  };

  CLI::App* fill = app.add_subcommand("fill", "Fill a ribbon file with an S-patch");
  fill->add_option("-i,--input", opt.input, "Ribbon JSON file")->required();
  fill->add_option("-o,--output", opt.output, "Net JSON file")->required();
  fill->add_option("--continuity", opt.continuity, "c0 | g1 (default g1)")
      ->check(CLI::IsMember({"c0", "g1"}));
  fill->add_option("--mask", opt.mask, "harmonic | biharmonic (default by continuity)")
      ->check(CLI::IsMember({"harmonic", "biharmonic"}));
  fill->add_option("--tolerance", opt.tolerance, "Twist-compatibility tolerance (relative)");
  add_coords(fill);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a net at one parameter point");
  eval->add_option("-i,--input", opt.input, "Net JSON file")->required();
  auto* bary_opt = eval->add_option("--bary", opt.bary, "Comma-separated barycentric coordinates");
  eval->add_option("--uv", opt.uv, "Domain point x,y")->excludes(bary_opt);
  add_coords(eval);

  CLI::App* mesh = app.add_subcommand("mesh", "Tessellate a net into an OBJ mesh");
  mesh->add_option("-i,--input", opt.input, "Net JSON file")->required();
  mesh->add_option("-o,--output", opt.output, "OBJ output file")->required();
  mesh->add_option("-r,--resolution", opt.resolution, "Rings in the tessellation (default 16)")
      ->check(CLI::PositiveNumber);
  mesh->add_flag("--no-normals", opt.no_normals, "Skip vertex normals");
  add_coords(mesh);

  CLI::App* check = app.add_subcommand("check", "Verify continuity of a net against its ribbon");
  check->add_option("-i,--input", opt.input, "Net JSON file")->required();
  check->add_option("--ribbon", opt.ribbon, "Ribbon JSON file")->required();
  check->add_option("-o,--output", opt.output, "Write the report here instead of stdout");
  check->add_option("--continuity", opt.continuity, "c0 | g1 (default g1)")
      ->check(CLI::IsMember({"c0", "g1"}));
  check->add_option("--samples", opt.samples, "Edge samples per side (default 33)")
      ->check(CLI::PositiveNumber);
  check->add_option("--tolerance", opt.tolerance, "C0/panel/corner tolerance (default 1e-9)");
  check->add_option("--g1-tolerance", opt.g1_tolerance,
                    "Normal deviation cap in radians at the smallest offset (default 2e-3)");
  check->add_option("--offsets", opt.offsets, "Inward probe offsets (default 1e-2,1e-3)");
  add_coords(check);

  CLI::App* info = app.add_subcommand("info", "Print counts and classification of a net");
  info->add_option("-i,--input", opt.input, "Net JSON file")->required();

  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded twist-compatible ribbon");
  gen->add_option("-o,--output", opt.output, "Ribbon JSON file")->required();
  gen->add_option("-n,--sides", opt.n, "Side count (default 5)");
  gen->add_option("-d,--degree", opt.degree, "Curve degree (default 5)");
  gen->add_option("--seed", opt.seed, "Random seed (default 1)");
  gen->add_option("--amplitude", opt.amplitude, "Height-field amplitude (default 0.3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (app.got_subcommand(fill)) return cmd_fill(opt);
    if (app.got_subcommand(eval)) {
      if (opt.bary.empty() == opt.uv.empty())
        throw ValidationError("eval needs exactly one of --bary or --uv");
      return cmd_eval(opt);
    }
    if (app.got_subcommand(mesh)) return cmd_mesh(opt);
    if (app.got_subcommand(check)) return cmd_check(opt);
    if (app.got_subcommand(info)) return cmd_info(opt);
    if (app.got_subcommand(gen)) return cmd_gen(opt);
  } catch (const IOError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
