// taf: two-absorbing ideals, factorizations and TAF audits from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "taf/checked.hpp"
#include "taf/commands.hpp"
#include "taf/report.hpp"

namespace {

struct Options {
  bool json = false;
  uint64_t guard = taf::Limits{}.enumeration_guard;
  std::string out;
};

int emit(const taf::Json& report, const Options& o) {
  const std::string text = o.json ? report.dump(2) + "\n" : taf::render_text(report);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << taf::make_error(report.value("command", ""), "input", "cannot write " + o.out).dump() << "\n";
      return 2;
    }
    f << text;
  }
  std::cout << text;
  return taf::exit_code_for(report);
}

int fail(const std::string& command, const std::string& type, const std::string& message) {
  std::cerr << taf::make_error(command, type, message).dump() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-absorbing ideals and factorizations in finite rings and quadratic orders"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "print the report as JSON");
  app.add_option("--guard", o.guard, "largest ring order enumerated exhaustively")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "also write the report to this file");

  std::string ring, ideal;
  bool shortest = false;

  auto* check_ta = app.add_subcommand("check-ta", "is the ideal two-absorbing");
  check_ta->add_option("ring", ring, "ring presentation, e.g. \"Z/8[x]/(x^2, 2x)\"")->required();
  check_ta->add_option("--ideal", ideal, "comma-separated generators")->required();

  auto* factor = app.add_subcommand("factor", "factor the ideal into TA-ideals");
  factor->add_option("ring", ring, "ring presentation")->required();
  factor->add_option("--ideal", ideal, "comma-separated generators")->required();
  factor->add_flag("--shortest", shortest, "minimize the number of factors");

  auto* check_taf = app.add_subcommand("check-taf", "does every proper ideal factor into TA-ideals");
  check_taf->add_option("ring", ring, "ring presentation")->required();

  taf::IdealFilter filter;
  auto* ideals = app.add_subcommand("ideals", "list the ideals of a ring");
  ideals->add_option("ring", ring, "ring presentation")->required();
  ideals->add_flag("--ta-only", filter.ta_only);
  ideals->add_flag("--prime-only", filter.prime_only);
  ideals->add_flag("--maximal-only", filter.maximal_only);

  std::string action;
  int64_t d = 0;
  bool maximal = false;
  auto* quad = app.add_subcommand("quad", "ideals of Z[sqrt d] or Z[(1 + sqrt d)/2]");
  quad->add_option("action", action, "ta | factor | classify")
      ->required()
      ->check(CLI::IsMember({"ta", "factor", "classify"}));
  quad->add_option("--d", d, "square-free d")->required();
  quad->add_option("--ideal", ideal, "generators as a + b*w terms, w = sqrt d");
  quad->add_flag("--maximal", maximal, "work in Z[(1 + sqrt d)/2], w = (1 + sqrt d)/2");
  quad->add_flag("--shortest", shortest, "minimize the number of factors");

  int64_t d_min = 0, d_max = 0;
  auto* range = app.add_subcommand("classify-range", "classify Z[sqrt d] for d = 1 mod 4 in a range");
  range->add_option("--d-min", d_min)->required();
  range->add_option("--d-max", d_max)->required();

  bool corrupt = false;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_flag("--inject-corruption", corrupt)->group("");

  std::string file;
  auto* verify = app.add_subcommand("verify", "re-check a saved JSON report");
  verify->add_option("file", file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("", "input", e.what());
  }

  taf::Limits limits;
  limits.enumeration_guard = o.guard;
  std::string command = app.get_subcommands().front()->get_name();
  if (command == "quad") command += " " + action;

  try {
    if (*check_ta) return emit(taf::cmd_check_ta(ring, ideal, limits), o);
    if (*factor) return emit(taf::cmd_factor(ring, ideal, shortest, limits), o);
    if (*check_taf) return emit(taf::cmd_check_taf(ring, limits), o);
    if (*ideals) return emit(taf::cmd_ideals(ring, filter, limits), o);
    if (*quad) return emit(taf::cmd_quad(action, d, ideal, maximal, shortest, limits), o);
    if (*range) return emit(taf::cmd_classify_range(d_min, d_max), o);
    if (*selftest) return emit(taf::cmd_selftest(limits, corrupt), o);

    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    const taf::Json report = taf::Json::parse(buf.str());
    auto problems = taf::validate_report(report);
    if (problems.empty()) problems = taf::verify_report(report);
    taf::Json result = taf::make_report("verify", {{"file", file}}, problems.empty(),
                                        {{"kind", "verification"}, {"problems", problems}});
    return emit(result, o);
  } catch (const taf::LimitExceeded& e) {
    return fail(command, "limit", e.what());
  } catch (const taf::OverflowError& e) {
    return fail(command, "overflow", e.what());
  } catch (const taf::InputError& e) {
    return fail(command, "input", e.what());
  } catch (const taf::Json::exception& e) {
    return fail(command, "input", e.what());
  }
}
