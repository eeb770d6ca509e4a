#include "mcsl/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mcsl/census.hpp"
#include "mcsl/json_io.hpp"
#include "mcsl/verify.hpp"

namespace mcsl::cli {

using nlohmann::json;

namespace {

// Thrown for bad input detected after CLI11 has finished parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (item.find_first_not_of(" \t") != std::string::npos) parts.push_back(item);
  return parts;
}

// Rotations of q and make_odd(q) differ by a cubic symmetry, so they share a CSL.
HQuat csl_generator(const std::string& text, const CliConfig& cfg) {
  const HQuat q = parse_quaternion(text, cfg.half);
  if (q.is_zero()) throw UsageError("quaternion must be nonzero");
  return make_odd(q);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Scalar fields as key,value lines; nested values as compact JSON.
void print_flat(std::ostream& out, const json& j, Format format) {
  if (format == Format::csv) out << "field,value\n";
  for (const auto& [key, value] : j.items()) {
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (format == Format::csv)
      out << key << ',' << (text.find(',') != std::string::npos ? "\"" + text + "\"" : text) << '\n';
    else
      out << std::left << std::setw(14) << key << text << '\n';
  }
}

void emit_record(std::ostream& out, const json& j, Format format) {
  if (format == Format::json)
    print_json(out, j);
  else
    print_flat(out, j, format);
}

void emit_reports(std::ostream& out, const std::vector<CountReport>& reports, Format format) {
  switch (format) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      print_json(out, arr);
      break;
    }
    case Format::csv:
      out << "sigma,count,formula,match\n";
      for (const auto& r : reports)
        out << r.sigma << ',' << r.count << ',' << rational_text(r.formula) << ',' << (r.match ? "true" : "false")
            << '\n';
      break;
    case Format::table:
      out << std::right << std::setw(8) << "sigma" << std::setw(10) << "count" << std::setw(14) << "formula"
          << std::setw(8) << "match" << '\n';
      for (const auto& r : reports)
        out << std::setw(8) << r.sigma << std::setw(10) << r.count << std::setw(14) << rational_text(r.formula)
            << std::setw(8) << (r.match ? "yes" : "no") << '\n';
      break;
  }
}

std::optional<ReportCache> make_cache(const CliConfig& cfg) {
  if (cfg.cache_dir) return ReportCache(*cfg.cache_dir);
  return ReportCache::from_env();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::string format_name = "json";

  CLI::App app{"Coincidence site lattices of the BCC lattice from Hurwitz quaternions", "mcsl"};
  app.require_subcommand(1);
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Census cache directory (default: $MCSL_CACHE_DIR)");
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("-v,--verbose", cfg.verbosity, "Timing diagnostics on stderr");
  app.add_flag("--half", cfg.half, "Read \"a,b,c,d\" as actual components instead of doubled ones");

  std::string quat, quats, q1, q2;
  auto* rot = app.add_subcommand("rot", "Rotation matrix and coincidence index of a quaternion");
  rot->add_option("--quat", quat, "Quaternion")->required();
  auto* csl = app.add_subcommand("csl", "CSL of a quaternion");
  csl->add_option("--quat", quat, "Quaternion")->required();
  auto* mcsl_cmd = app.add_subcommand("mcsl", "Multiple CSL of several quaternions");
  mcsl_cmd->add_option("--quats", quats, "Quaternions separated by ';'")->required();
  auto* gcld_cmd = app.add_subcommand("gcld", "Greatest common left divisor");
  auto* lcrm_cmd = app.add_subcommand("lcrm", "Least common right multiple");
  for (auto* sub : {gcld_cmd, lcrm_cmd}) {
    sub->add_option("--q1", q1, "First quaternion")->required();
    sub->add_option("--q2", q2, "Second quaternion")->required();
  }

  Int max_sigma = 0, prime = 0;
  int power = 0;
  auto* census = app.add_subcommand("census", "Exhaustive counts");
  census->require_subcommand(1);
  auto* census_f = census->add_subcommand("f", "CSL counts for every odd index up to --max");
  census_f->add_option("--max", max_sigma, "Largest index")->required()->check(CLI::PositiveNumber);
  auto* census_f2 = census->add_subcommand("f2", "Two-fold MCSL count at a prime power");
  census_f2->add_option("--prime", prime, "Odd prime")->required();
  census_f2->add_option("--power", power, "Exponent")->required()->check(CLI::PositiveNumber);

  std::string level_name = "desk";
  std::optional<std::string> report_path;
  auto* verify_cmd = app.add_subcommand("verify", "Acceptance suite");
  verify_cmd->require_subcommand(1);
  auto* verify_all = verify_cmd->add_subcommand("all", "Run every criterion");
  verify_all->add_option("--level", level_name, "Scale of the run")
      ->check(CLI::IsMember({"desk", "deep"}))
      ->capture_default_str();
  verify_all->add_option("--report", report_path, "Write the JSON report to this file");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  std::vector<std::string> argv_store{"mcsl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  cfg.format = format_name == "csv" ? Format::csv : format_name == "table" ? Format::table : Format::json;

  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*rot) {
      const HQuat q = parse_quaternion(quat, cfg.half);
      if (q.is_zero()) throw UsageError("quaternion must be nonzero");
      const RotMat3 r = rotation_matrix(q);
      emit_record(out, {{"quat", quat_json(q)}, {"matrix", rotation_json(r)}, {"sigma", sigma(q)}}, cfg.format);
    } else if (*csl) {
      emit_record(out, csl_json(csl_record(csl_generator(quat, cfg))), cfg.format);
    } else if (*mcsl_cmd) {
      std::vector<HQuat> qs;
      for (const auto& part : split(quats, ';')) qs.push_back(csl_generator(part, cfg));
      if (qs.empty()) throw UsageError("--quats needs at least one quaternion");
      emit_record(out, mcsl_json(multiple_csl(qs)), cfg.format);
    } else if (*gcld_cmd || *lcrm_cmd) {
      const HQuat a = parse_quaternion(q1, cfg.half);
      const HQuat b = parse_quaternion(q2, cfg.half);
      if (*lcrm_cmd && (a.is_zero() || b.is_zero())) throw UsageError("lcrm needs nonzero quaternions");
      if (*gcld_cmd && a.is_zero() && b.is_zero()) throw UsageError("gcld of two zero quaternions");
      const HQuat r = canonical_associate(*gcld_cmd ? gcld(a, b) : lcrm(a, b));
      emit_record(out, {{"quat", quat_json(r)}, {"norm", r.norm()}}, cfg.format);
    } else if (*census) {
      const auto cache = make_cache(cfg);
      verify::Options opt;
      opt.jobs = cfg.jobs;
      opt.cache = cache ? &*cache : nullptr;
      std::vector<CountReport> reports;
      if (*census_f) {
        for (Int s = 1; s <= max_sigma; s += 2) reports.push_back(verify::cached_census_csl(s, opt));
      } else {
        if (prime < 3 || !is_prime(prime)) throw UsageError("--prime must be an odd prime");
        reports.push_back(verify::cached_census_mcsl2(ipow(prime, power), opt));
      }
      emit_reports(out, reports, cfg.format);
    } else if (*verify_cmd) {
      const auto cache = make_cache(cfg);
      verify::Options opt;
      opt.level = level_name == "deep" ? verify::Level::deep : verify::Level::desk;
      opt.jobs = cfg.jobs;
      opt.cache = cache ? &*cache : nullptr;
      const auto results = verify::run_all(opt);
      const json report = verify::to_json(results, opt.level);
      if (report_path) {
        std::ofstream file(*report_path);
        if (!file) throw std::runtime_error("cannot write " + *report_path);
        file << report.dump(2) << '\n';
      }
      if (cfg.format == Format::json && !report_path) {
        print_json(out, report);
      } else {
        for (const auto& r : results) {
          out << (r.passed ? "[PASS] " : "[FAIL] ") << 'C' << r.id << ' ' << r.title << '\n';
          for (const auto& note : r.notes) out << "       note: " << note << '\n';
        }
      }
      if (cfg.verbosity > 0)
        for (const auto& r : results) err << "C" << r.id << ": " << r.elapsed_ms << " ms\n";
      code = report.at("passed").get<bool>() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "mcsl: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "mcsl: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "mcsl: " << e.what() << '\n';
    return 1;
  }
  if (cfg.verbosity > 0)
    err << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mcsl::cli
