#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gral/checks.hpp"

namespace {

using gral::checks::json;

int emit(const json& report, bool pretty) {
  if (pretty) std::cout << gral::checks::pretty(report);
  else std::cout << report.dump(2) << '\n';
  return 0;
}

int fail(const gral::Error& e) {
  std::cerr << "gral: " << e.what() << '\n';
  std::cout << json{{"error", {{"code", std::string(gral::to_string(e.code()))}, {"message", e.what()}}}}.dump(2)
            << '\n';
  return e.code() == gral::ErrorCode::too_large ? 3 : 2;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded algebras over finite categories: construction, validation and analysis"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");

  gral::IipOptions iip;
  std::optional<std::uint64_t> sample;
  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--budget", iip.budget, "maximum number of projective points in exhaustive search");
    cmd->add_option("--sample", sample, "randomized search with this many draws");
    cmd->add_option("--threads", iip.threads, "worker threads (0: machine parallelism)");
    cmd->add_option("--seed", iip.seed, "seed for --sample");
    cmd->add_flag("--pretty", pretty, "human-readable output");
  };

  auto* catalog_cmd = app.add_subcommand("catalog", "catalog of example algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries and their parameters");
  list_cmd->add_flag("--pretty", pretty, "human-readable output");

  auto* build_cmd = app.add_subcommand("build", "build a catalog entry and write it as JSON");
  std::string entry;
  std::vector<std::string> params;
  std::string out_file;
  build_cmd->add_option("entry", entry, "catalog entry")->required();
  build_cmd->add_option("--param", params, "parameter k=v (repeatable)");
  build_cmd->add_option("-o,--output", out_file, "output file (default: stdout)");

  auto* check_cmd = app.add_subcommand("check", "run checks on an algebra file");
  std::string check_file;
  std::string check_list;
  std::string subring = "R0";
  check_cmd->add_option("file", check_file, "algebra or crossed system JSON")->required();
  check_cmd->add_option("--checks", check_list, "comma-separated checks (default: all)");
  check_cmd->add_option("--subring", subring, "subring for iip and maxcomm: R0, commutant-R0, commutant-ZR0, center");
  add_search(check_cmd);

  auto* verify_cmd = app.add_subcommand("verify-all", "check every catalog run against its expected values");
  std::string field = "2";
  bool mutate = false;
  verify_cmd->add_option("--field", field, "coefficient field: a prime or Q");
  verify_cmd->add_flag("--mutate", mutate, "corrupt one structure constant per algebra first");
  add_search(verify_cmd);

  auto* morphism_cmd = app.add_subcommand("morphism", "injectivity of a ring morphism and of its restriction");
  std::string src_file, map_file, sub_file;
  morphism_cmd->add_option("source", src_file, "source algebra JSON")->required();
  morphism_cmd->add_option("map", map_file, "map JSON")->required();
  morphism_cmd->add_option("--subring", sub_file, "subring JSON")->required();
  add_search(morphism_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  iip.sample = sample;

  try {
    if (*list_cmd) {
      json out = json::array();
      for (const auto& e : gral::catalog::entries()) {
        json ps = json::array();
        for (const auto& p : e.params) ps.push_back({{"name", p.name}, {"default", p.fallback}, {"help", p.help}});
        out.push_back({{"name", e.name}, {"summary", e.summary}, {"params", ps}});
      }
      if (pretty) {
        for (const auto& e : out) {
          std::cout << e["name"].get<std::string>() << ": " << e["summary"].get<std::string>() << '\n';
          for (const auto& p : e["params"])
            std::cout << "    " << p["name"].get<std::string>() << " = " << p["default"].get<std::string>() << "  ("
                      << p["help"].get<std::string>() << ")\n";
        }
        return 0;
      }
      return emit(out, false);
    }

    if (*build_cmd) {
      gral::catalog::Params ps;
      for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
          throw gral::Error(gral::ErrorCode::bad_params, "parameters are written k=v, got '" + kv + "'");
        ps[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      const auto inst = gral::catalog::build(entry, ps);
      const json doc = gral::checks::instance_to_json(inst);
      if (out_file.empty()) return emit(doc, false);
      std::ofstream out(out_file);
      if (!out) throw gral::Error(gral::ErrorCode::invalid_input, "cannot write '" + out_file + "'");
      out << doc.dump(2) << '\n';
      return emit({{"entry", inst.entry}, {"params", inst.params}, {"dim", inst.algebra.dim()}, {"written", out_file}},
                  pretty);
    }

    if (*check_cmd) {
      std::vector<gral::catalog::Expectation> expected;
      const auto subject = gral::checks::subject_from_json(gral::io::read_file(check_file), &expected);
      std::vector<std::string> names = check_list.empty() ? gral::checks::check_names() : split(check_list);
      for (auto& n : names) n = gral::checks::canonical_check(n);
      gral::checks::Options options{iip, gral::checks::parse_subring_choice(subring)};
      const json reports = gral::checks::run_checks(subject, names, options);
      std::vector<gral::catalog::Expectation> relevant;
      for (const auto& e : expected)
        if (reports.contains(e.check)) relevant.push_back(e);
      gral::checks::Tally tally;
      json out = {{"checks", reports}};
      if (!relevant.empty()) out["expectations"] = gral::checks::evaluate(reports, relevant, tally);
      bool budget = false;
      for (const auto& [k, r] : reports.items()) budget |= r["status"] == "budget";
      emit(out, pretty);
      if (tally.mismatch) return 1;
      return budget ? 3 : 0;
    }

    if (*verify_cmd) {
      gral::checks::VerifyOptions options;
      options.field = field;
      options.checks.iip = iip;
      options.mutate = mutate;
      const auto result = gral::checks::verify_all(options);
      emit(result.report, pretty);
      return result.tally.exit_code();
    }

    if (*morphism_cmd) {
      bool consistent = true;
      const json out = gral::checks::run_morphism(gral::io::read_file(src_file), gral::io::read_file(map_file),
                                                  gral::io::read_file(sub_file), iip, consistent);
      emit(out, pretty);
      return consistent ? 0 : 1;
    }
  } catch (const gral::Error& e) {
    return fail(e);
  } catch (const nlohmann::json::exception& e) {
    return fail(gral::Error(gral::ErrorCode::invalid_input, e.what()));
  }
  return 0;
}
