#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "qpslab/campaign.hpp"

using namespace qpslab;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string env_group() {
  const char* v = std::getenv("QPSLAB_DEFAULT_GROUP");
  return v && *v ? v : "";
}

/// Flag, then environment, then the tag of the first input, then sl2.
std::string resolve_group(const std::string& flag, const json& first) {
  if (!flag.empty()) return flag;
  if (auto e = env_group(); !e.empty()) return e;
  if (auto t = group_tag(first); !t.empty()) return t;
  return "sl2";
}

json vec_to_json(const Vec<Exact>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_display(x));
  return out;
}

json eval_command(const std::string& kind, const std::vector<std::string>& files, const std::string& group_flag) {
  const std::size_t need = kind == "steinberg" ? 2 : 1;
  if (files.size() != need)
    throw UsageError("eval " + kind + " takes " + std::to_string(need) + " input file" + (need > 1 ? "s" : ""));
  std::vector<json> in;
  for (const auto& f : files) in.push_back(read_json(f));
  const GroupContext ctx = GroupContext::from_name(resolve_group(group_flag, in[0]));

  if (kind == "kappa") {
    const auto g = group_element_from_json(ctx, in[0]);
    return {{"group", ctx.name()}, {"kappa", vec_to_json(chevalley(ctx, g.m))}};
  }
  if (kind == "steinberg") {
    const auto g = group_element_from_json(ctx, in[0]);
    const auto t = group_element_from_json(ctx, in[1]);
    for (std::size_t i = 0; i < t.m.rows(); ++i)
      for (std::size_t j = 0; j < t.m.cols(); ++j)
        if (i != j && !t.m(i, j).is_zero()) throw UsageError("steinberg: t must be diagonal");
    return {{"group", ctx.name()},
            {"kappa_g", vec_to_json(chevalley(ctx, g.m))},
            {"kappa_t", vec_to_json(chevalley(ctx, t.m))},
            {"member", steinberg_membership(ctx, g.m, t.m)}};
  }
  if (kind == "fiber-enum") {
    const auto g = group_element_from_json(ctx, in[0]);
    const auto pts = weyl_fiber_enum(ctx, cast_matrix<Float>(g.m));
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(p));
    return {{"group", ctx.name()}, {"count", pts.size()}, {"points", arr}};
  }
  if (kind == "leaf-form") {
    const auto p = gs_point_from_json(ctx, in[0]);
    const auto leaf = leaf_two_form(ctx, p);
    return {{"group", ctx.name()},
            {"point", point_to_json(p)},
            {"basis", matrix_to_json(leaf.basis)},
            {"form", matrix_to_json(leaf.form.w)}};
  }
  throw UsageError("unknown eval kind: " + kind + " (expected kappa, steinberg, fiber-enum or leaf-form)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded verification campaigns for quasi-Poisson and Dirac structures on matrix groups"};
  app.require_subcommand(1);

  CampaignConfig config;
  std::string group_flag, report_path;
  std::vector<std::string> corrupt;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over seeded sample points");
  verify->add_option("suite", config.suite, "Suite name")->required();
  verify->add_option("--group", group_flag, "sl2, sl3, sl4, gl2, gl3 or gl4");
  verify->add_option("--backend", config.backend, "exact or float")->capture_default_str();
  verify->add_option("--samples", config.samples, "Number of sample points")->capture_default_str();
  verify->add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
  verify->add_option("--tol", config.tolerance, "Float backend tolerance")->capture_default_str();
  verify->add_option("--report", report_path, "Write the JSON report here ('-' for stdout)");
  verify->add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
  verify->add_option("--corrupt", corrupt, "Test hook: sigma-half, sigma-sign, omega-sign, dorfman-eta")
      ->group("");

  std::string eval_kind;
  std::vector<std::string> eval_files;
  std::string eval_group;
  auto* eval = app.add_subcommand("eval", "Evaluate kappa, steinberg, fiber-enum or leaf-form on JSON inputs");
  eval->add_option("kind", eval_kind, "kappa, steinberg, fiber-enum or leaf-form")->required();
  eval->add_option("inputs", eval_files, "Input JSON files")->required();
  eval->add_option("--group", eval_group, "sl2, sl3, sl4, gl2, gl3 or gl4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      config.group = !group_flag.empty() ? group_flag : (!env_group().empty() ? env_group() : "sl2");
      for (const auto& h : corrupt) apply_hook(config.hooks, h);
      const VerificationReport report = run_suite(config);
      const json j = report.to_json(utc_timestamp());
      if (report_path == "-") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << config.suite << " on " << config.group << " (" << config.backend << ", seed " << config.seed
                  << ", " << config.samples << " samples)\n"
                  << report.summary_text() << "total " << report.total() << "  passed " << report.passed()
                  << "  failed " << report.failed() << "\n";
        for (const auto& r : report.records)
          if (!r.passed) std::cout << "FAIL [" << r.index << "] " << r.check << ": " << r.witness << "\n";
        if (!report_path.empty()) {
          std::ofstream out(report_path);
          if (!out) throw UsageError("cannot write " + report_path);
          out << j.dump(2) << "\n";
        }
      }
      return report.ok() ? 0 : kExitFailed;
    }
    std::cout << eval_command(eval_kind, eval_files, eval_group).dump(2) << "\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
