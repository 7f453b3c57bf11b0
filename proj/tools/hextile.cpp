// Command-line front end: exact tiling counts of the side-n hexagon, per
// symmetry class or distinct up to all symmetries, plus the brute-force
// census, verification, OEIS b-file comparison and a debug SVG renderer.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hextile/cli.hpp"
#include "hextile/oracle.hpp"

namespace {

hextile::OracleOptions oracle_options(long long n, bool force, int jobs) {
  hextile::OracleOptions opts;
  if (force && n > opts.max_n) opts.max_n = static_cast<int>(n);
  opts.jobs = jobs;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lozenge-tiling counts of a regular hexagon (OEIS A066931)"};
  app.require_subcommand(1);

  std::string cls = "distinct";
  long long first = 0, last = 0, n = 0, offset = 0;
  std::uint64_t index = 0;
  std::string path;
  bool force = false;
  int jobs = 1;

  auto* seq = app.add_subcommand("seq", "print 'n value' lines for a range of sides");
  seq->add_option("first", first, "first side")->required();
  seq->add_option("last", last, "last side")->required();
  seq->add_option("--class", cls,
                  "any, vertex-reflection, edge-reflection, half-turn, rot120, rot60 "
                  "or distinct (default)");

  app.add_subcommand("weights", "print the 16 subgroups with their exact weights");

  auto* verify = app.add_subcommand(
      "verify", "check formulas, Burnside and Mobius inversion against the oracle");
  verify->add_option("max_n", n, "verify all sides up to this")->required();
  verify->add_flag("--force", force, "override the enumeration safety bound");
  verify->add_option("--jobs", jobs, "worker threads for the oracle");

  auto* census = app.add_subcommand("census", "print the brute-force census as JSON");
  census->add_option("n", n, "hexagon side")->required();
  census->add_flag("--force", force, "override the enumeration safety bound");
  census->add_option("--jobs", jobs, "worker threads for the oracle");

  auto* compare = app.add_subcommand("compare", "check an OEIS b-file against recomputation");
  compare->add_option("file", path, "b-file path")->required();
  compare->add_option("--class", cls, "sequence to compare (as in seq)");
  compare->add_option("--offset", offset, "hexagon side = b-file index + offset");

  auto* render = app.add_subcommand("render", "write one tiling as SVG");
  render->add_option("n", n, "hexagon side")->required();
  render->add_option("index", index, "tiling index in enumeration order")->required();
  render->add_option("out", path, "output SVG path")->required();
  render->add_flag("--force", force, "override the enumeration safety bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (seq->parsed())
      return hextile::run_seq(std::cout, first, last, hextile::seq_class_from_name(cls));
    if (app.get_subcommand("weights")->parsed())
      return hextile::run_weights(std::cout);
    if (verify->parsed()) {
      if (n < 0) throw hextile::UsageError("max_n must be nonnegative");
      return hextile::run_verify(std::cout, static_cast<int>(n),
                                 oracle_options(n, force, jobs));
    }
    if (census->parsed()) {
      if (n < 0) throw hextile::UsageError("n must be nonnegative");
      return hextile::run_census(std::cout, static_cast<int>(n),
                                 oracle_options(n, force, jobs));
    }
    if (compare->parsed())
      return hextile::run_compare(std::cout, path, hextile::seq_class_from_name(cls),
                                  offset);
    if (render->parsed()) {
      if (n < 0) throw hextile::UsageError("n must be nonnegative");
      return hextile::run_render(std::cout, static_cast<int>(n), index, path,
                                 oracle_options(n, force, jobs));
    }
  } catch (const hextile::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const hextile::EnumerationBoundError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const hextile::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
