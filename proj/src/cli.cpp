#include "mspace/cli.hpp"

#include "mspace/io.hpp"
#include "mspace/structure.hpp"
#include "mspace/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace mspace {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SpacePtr load_space(const std::string& path, std::size_t max_points) {
  SpacePtr space = parse_space(parse_json(read_file(path)));
  if (space->point_count() > max_points) {
    throw InputError(path + ": ground set has " + std::to_string(space->point_count()) +
                     " points, above the --max-points limit of " + std::to_string(max_points));
  }
  return space;
}

std::vector<Rational> grid_values(const std::optional<std::string>& flag) {
  if (flag) return parse_rational_list(*flag);
  if (const char* env = std::getenv("MSPACE_GRID"); env && *env) return parse_rational_list(env);
  return FunctionGrid::default_values();
}

Side parse_side(const std::string& text) {
  return text == "ring" ? Side::ring : Side::semiring;
}

int cmd_gen(const SpacePtr& space, std::ostream& out) {
  out << gen_report(*space);
  return exit_ok;
}

int cmd_enumerate(const SpacePtr& space, const std::string& what, Side side, std::ostream& out) {
  if (what == "ideals") {
    for (const auto& ideal : enumerate_ideals(space, side)) out << ideal_json(ideal).dump() << "\n";
  } else if (what == "filters") {
    for (const auto& f : enumerate_filters(space)) {
      Json doc = filter_json(f);
      doc["proper"] = f.proper();
      out << doc.dump() << "\n";
    }
  } else if (what == "zcongruences") {
    for (const auto& rho : enumerate_z_congruences(space)) out << congruence_json(rho).dump() << "\n";
  } else {
    for (const auto& rho : maximal_congruences(space)) out << congruence_json(rho).dump() << "\n";
  }
  return exit_ok;
}

int cmd_verify(const SpacePtr& space, const std::string& suite, const VerifyOptions& options,
               bool timing, std::ostream& out) {
  const SuiteResult r = run_suite(suite, space, options);
  out << "suite " << r.name << ": " << r.checks << " checks, " << r.failures.size()
      << " failures\n";
  if (!r.ok()) {
    std::map<std::string, std::size_t> by_tag;
    for (const auto& f : r.failures) ++by_tag[f.tag];
    for (const auto& [tag, n] : by_tag) out << "  " << tag << ": " << n << "\n";
    out << "first counterexample: " << r.failures.front().tag;
    if (!r.failures.front().counterexample.empty()) out << " " << r.failures.front().counterexample;
    out << "\n";
  }
  if (timing) out << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed.count() << "s\n";
  return r.ok() ? exit_ok : exit_counterexample;
}

std::string export_text(const SpacePtr& space, const std::string& target, Side side,
                        const std::vector<Rational>& grid) {
  if (target == "ideal-lattice-dot") return ideal_lattice_dot(space, side);
  if (target == "filter-lattice-dot") return filter_lattice_dot(space);
  const FunctionGrid fg(space, grid);
  if (target == "structure-json") return structure_json(build_structure_space(space, fg)).dump(2) + "\n";
  if (target == "structure-dot") return structure_dot(build_structure_space(space, fg));
  Json reports = Json::array();
  for (const auto& rho : enumerate_z_congruences(space)) reports.push_back(quotient_report(rho, fg));
  return reports.dump(2) + "\n";
}

Json certificate_json(const IsoCertificate& c) {
  return Json{{"additive", c.additive},         {"multiplicative", c.multiplicative},
              {"lattice", c.lattice},           {"fixesScalars", c.fixes_scalars},
              {"bijectiveOnGrid", c.bijective_on_grid}, {"checked", c.checked}};
}

int cmd_isocheck(const SpacePtr& a, const SpacePtr& b, const Json& map,
                 const std::vector<Rational>& grid, std::ostream& out) {
  Json report;
  try {
    std::optional<PointBijection> h;
    std::optional<SemiringIso> iso;
    if (map.contains("points")) {
      report["mode"] = "points";
      const auto& pts = map.at("points");
      if (!pts.is_object()) throw Error(Errc::parse_error, "points must map labels to labels");
      if (pts.size() != a->point_count()) {
        throw Error(Errc::not_homeomorphism, "map must cover every point of the source");
      }
      PointBijection bij{a, b, std::vector<std::size_t>(a->point_count())};
      for (const auto& [from, to] : pts.items()) {
        if (!to.is_string()) throw Error(Errc::parse_error, "points must map labels to labels");
        bij.image[a->ground().index_of(from)] = b->ground().index_of(to.get<std::string>());
      }
      h = bij;
      iso = transfer_isomorphism(*h);
    } else if (map.contains("atoms")) {
      report["mode"] = "atoms";
      const auto& imgs = map.at("atoms");
      if (!imgs.is_array()) throw Error(Errc::parse_error, "atoms must be an array of functions");
      std::vector<Fn> images;
      for (const auto& f : imgs) images.push_back(parse_function(b, f));
      iso = SemiringIso::from_atom_images(a, b, images);
    } else {
      throw Error(Errc::parse_error, "map file needs \"points\" or \"atoms\"");
    }

    report["atomPermutation"] = iso->atom_image();
    const IsoCertificate cert = certify_isomorphism(*iso, grid);
    report["certificate"] = certificate_json(cert);
    bool round_trip = true;
    if (a->separating() && b->separating()) {
      const PointBijection back = recover_homeomorphism(*iso);
      round_trip = transfer_isomorphism(back) == *iso && (!h || back == *h);
      report["roundTrip"] = round_trip;
    } else {
      report["roundTrip"] = nullptr;
    }
    report["pass"] = cert.holds() && round_trip;
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    report["pass"] = false;
    report["reason"] = e.what();
  }
  out << report.dump(2) << "\n";
  return report["pass"].get<bool>() ? exit_ok : exit_counterexample;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite measurable spaces, their function semirings and structure spaces", "mspace"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t max_points = 5;
  std::optional<std::string> grid_flag;
  app.add_option("--max-points", max_points, "Refuse ground sets larger than this")
      ->capture_default_str();
  app.add_option("--grid", grid_flag, "Comma list of non-negative rationals, e.g. 0,1/2,1,2");

  std::string space_path;
  std::string space_b_path;
  std::string map_path;
  std::string what;
  std::string suite;
  std::string target;
  std::string side = "semiring";
  std::string mutate = "none";
  std::string output;
  bool timing = false;

  auto* gen = app.add_subcommand("gen", "Print the generated σ-algebra, atoms and separation");
  gen->add_option("space", space_path, "Space file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Stream ideals, filters or congruences as JSON lines");
  enumerate->add_option("space", space_path, "Space file")->required();
  enumerate->add_option("what", what, "ideals | filters | zcongruences | maxcong")
      ->required()
      ->check(CLI::IsMember({"ideals", "filters", "zcongruences", "maxcong"}));
  enumerate->add_option("--side", side, "Ideal side")->check(CLI::IsMember({"ring", "semiring"}));

  auto* verify = app.add_subcommand("verify", "Run invariant suites exhaustively");
  verify->add_option("space", space_path, "Space file")->required();
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suites));
  verify->add_option("--mutate", mutate, "Inject a known fault")
      ->check(CLI::IsMember({"none", "swap-join-meet"}));
  verify->add_flag("--timing", timing, "Print elapsed time");

  auto* exp = app.add_subcommand("export", "Write DOT or JSON renderings");
  exp->add_option("space", space_path, "Space file")->required();
  exp->add_option("target", target,
                  "ideal-lattice-dot | filter-lattice-dot | structure-json | structure-dot | quotient-json")
      ->required()
      ->check(CLI::IsMember({"ideal-lattice-dot", "filter-lattice-dot", "structure-json",
                             "structure-dot", "quotient-json"}));
  exp->add_option("--side", side, "Ideal side")->check(CLI::IsMember({"ring", "semiring"}));
  exp->add_option("-o,--output", output, "Output file (default stdout)");

  auto* iso = app.add_subcommand("isocheck", "Check a point bijection or atom-level isomorphism");
  iso->add_option("space-a", space_path, "Source space file")->required();
  iso->add_option("space-b", space_b_path, "Target space file")->required();
  iso->add_option("map", map_path, "Map file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "mspace: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_input_error;
  }

  try {
    const auto values = grid_values(grid_flag);
    if (*gen) return cmd_gen(load_space(space_path, max_points), out);
    if (*enumerate) return cmd_enumerate(load_space(space_path, max_points), what, parse_side(side), out);
    if (*verify) {
      VerifyOptions options;
      options.grid = values;
      options.mutation = mutate == "swap-join-meet" ? Mutation::swap_join_meet : Mutation::none;
      return cmd_verify(load_space(space_path, max_points), suite, options, timing, out);
    }
    if (*exp) {
      const std::string text = export_text(load_space(space_path, max_points), target, parse_side(side), values);
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!(file << text)) throw InputError("cannot write " + output);
      }
      return exit_ok;
    }
    const SpacePtr a = load_space(space_path, max_points);
    const SpacePtr b = load_space(space_b_path, max_points);
    return cmd_isocheck(a, b, parse_json(read_file(map_path)), values, out);
  } catch (const Error& e) {
    err << "mspace: " << e.what() << "\n";
    return exit_input_error;
  } catch (const InputError& e) {
    err << "mspace: " << e.what() << "\n";
    return exit_input_error;
  }
}

}  // namespace mspace
