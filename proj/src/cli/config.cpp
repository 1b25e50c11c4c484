#include <algorithm>

#include "CLI11.hpp"
#include "cli/cli.hpp"
#include "weldlab/bowen_series.hpp"
#include "weldlab/correspondence.hpp"
#include "weldlab/error.hpp"

namespace weldlab::cli {

namespace {

void preset_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n", c.n, "rotation order n")->required()->check(CLI::Range(1, 64));
  sub->add_option("--p", c.p, "sides per sector p")->required()->check(CLI::Range(1, 64));
  sub->add_option("--case", c.pairing, "pairing case I or II");
}

void schema_input(CLI::App* sub, RunConfig& c) {
  sub->add_option("schema", c.input, "schema JSON file")->check(CLI::ExistingFile);
  sub->add_option("--newton", c.newton, "use the Newton schema with this many holes")->check(CLI::Range(3, 64));
}

void svg_option(CLI::App* sub, RunConfig& c) { sub->add_option("--svg", c.svg, "write an SVG picture here"); }

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"weldlab: Bowen-Series maps, mating schemas and welded surfaces", "weldlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", c.output, "write the JSON report to a file");
  app.add_option("--tol", c.tolerance, "geometric tolerance in [1e-14, 1e-3]");

  std::vector<std::pair<CLI::App*, std::string>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& about) {
    CLI::App* sub = parent->add_subcommand(name, about);
    leaves.push_back({sub, parent->get_name() + " " + name});
    return sub;
  };

  CLI::App* group = app.add_subcommand("group", "Fuchsian group presets");
  group->require_subcommand(1);
  preset_options(leaf(group, "info", "generators, pairing and orbifold signature"), c);
  svg_option(leaves.back().first, c);
  preset_options(leaf(group, "check", "side pairing and vertex cycle checks"), c);

  CLI::App* bs = app.add_subcommand("bs", "Bowen-Series circle maps");
  bs->require_subcommand(1);
  for (const char* name : {"eval", "orbit", "partition", "conjugacy", "tiles"}) {
    CLI::App* sub = leaf(bs, name, std::string("circle map ") + name);
    preset_options(sub, c);
    sub->add_flag("--factor", c.factor, "use the factor map on the quotient");
  }
  auto bs_sub = [&](const std::string& name) { return bs->get_subcommand(name); };
  bs_sub("eval")->add_option("--theta", c.theta, "angle on the circle");
  bs_sub("eval")->add_option("--z", c.point, "evaluate the pocket map at re im")->expected(2);
  bs_sub("orbit")->add_option("--theta", c.theta, "start angle");
  bs_sub("orbit")->add_option("--steps", c.steps, "iterations")->check(CLI::Range(0, 100000));
  bs_sub("conjugacy")->add_option("--theta", c.theta, "angle");
  bs_sub("conjugacy")->add_option("--depth", c.depth, "itinerary depth")->check(CLI::Range(1, 60));
  bs_sub("tiles")->add_option("--rank", c.rank, "tile rank");
  svg_option(bs_sub("tiles"), c);

  CLI::App* mate = app.add_subcommand("mate", "mating schemas");
  mate->require_subcommand(1);
  schema_input(leaf(mate, "build", "assemble the boundary complex"), c);
  svg_option(leaves.back().first, c);
  schema_input(leaf(mate, "report", "degrees and hole data"), c);
  leaf(mate, "verify-poly", "verify the explicit polynomials")
      ->add_option("--name", c.polynomial, "cubic, quartic, septic or all");

  CLI::App* surface = app.add_subcommand("surface", "welded surfaces");
  surface->require_subcommand(1);
  schema_input(leaf(surface, "report", "topology of the welded surface"), c);
  schema_input(leaf(surface, "graph", "welding graph"), c);
  svg_option(leaves.back().first, c);
  schema_input(leaf(surface, "zip", "zipped surface"), c);

  CLI::App* corr = app.add_subcommand("corr", "correspondence model");
  corr->require_subcommand(1);
  CLI::App* fibers = leaf(corr, "fibers", "fiber of a model point");
  preset_options(fibers, c);
  fibers->add_option("--w", c.point, "disk coordinate re im")->expected(2);
  fibers->add_option("--comp", c.component, "component 1..p");
  preset_options(leaf(corr, "branches", "forward branch words"), c);
  CLI::App* tiling = leaf(corr, "tiling", "tiles of the extended group");
  preset_options(tiling, c);
  tiling->add_option("--len", c.length, "maximal word length");
  svg_option(tiling, c);
  preset_options(leaf(corr, "recover", "recover generators from words"), c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (CLI::App* sub = &app; !sub->get_subcommands().empty();) {
      sub = sub->get_subcommands().front();
      target = sub;
    }
    c.help = target->help();
    return c;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    throw Error(ErrorCode::UsageError, what);
  }

  for (const auto& [sub, name] : leaves) {
    if (sub->parsed()) c.command = name;
  }
  if (c.tolerance && !(*c.tolerance >= 1e-14 && *c.tolerance <= 1e-3)) {
    throw Error(ErrorCode::UsageError, "--tol must lie in [1e-14, 1e-3]");
  }
  if (c.command == "bs tiles" && (c.rank < 0 || c.rank > kMaxTileRank)) {
    throw Error(ErrorCode::UsageError, "--rank must lie in [0, " + std::to_string(kMaxTileRank) + "]");
  }
  if (c.command == "corr tiling" && (c.length < 0 || c.length > kMaxWordLength)) {
    throw Error(ErrorCode::UsageError, "--len must lie in [0, " + std::to_string(kMaxWordLength) + "]");
  }
  const bool needs_schema = c.command.rfind("surface", 0) == 0 || c.command == "mate build" ||
                            c.command == "mate report";
  if (needs_schema && c.input.empty() == !c.newton.has_value()) {
    throw Error(ErrorCode::UsageError, "give exactly one of a schema file or --newton");
  }
  if (c.command == "corr fibers" && c.point.size() != 2) {
    throw Error(ErrorCode::UsageError, "corr fibers needs --w re im");
  }
  return c;
}

}  // namespace weldlab::cli
