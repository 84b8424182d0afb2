// Batch CLI for the ring backflow computations. Subcommands mirror the
// library surface; results go to JSON/CSV files plus stdout, with a content
// hash keyed disk cache so that repeated identical invocations are served
// bit-identically from disk.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "backflow/current.hpp"
#include "backflow/eig.hpp"
#include "backflow/extremal.hpp"
#include "backflow/kernel.hpp"
#include "backflow/line_limit.hpp"
#include "backflow/two_mode.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr double kPi = 3.141592653589793238462643383279;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNumerical = 3;

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// FNV-1a over the canonical config string; stable across runs.
std::string config_hash(const json& config) {
  const std::string s = config.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

struct Outputs {
  json summary;
  std::vector<std::pair<std::string, std::string>> csv_files;  // name -> content
};

struct RunContext {
  json config;
  std::string out_path;    // summary json destination ("" -> stdout only)
  std::string cache_dir;
  bool no_cache = false;
};

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Emit artifacts: summary json (stdout + out path), CSVs with metadata
// sidecars, and a cache entry holding the identical bytes.
void emit(const RunContext& ctx, const Outputs& outputs) {
  json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["config"] = ctx.config;
  meta["config_hash"] = config_hash(ctx.config);

  json summary = outputs.summary;
  summary["meta"] = meta;
  const std::string summary_text = summary.dump(2) + "\n";

  std::cout << summary_text;

  fs::path base = ctx.out_path.empty() ? fs::path("backflow_out.json")
                                       : fs::path(ctx.out_path);
  if (!ctx.out_path.empty() || !outputs.csv_files.empty()) {
    if (base.has_parent_path()) fs::create_directories(base.parent_path());
    write_file(base, summary_text);
    for (const auto& [name, content] : outputs.csv_files) {
      const fs::path csv = base.parent_path() / name;
      write_file(csv, content);
      write_file(csv.string() + ".meta.json", meta.dump(2) + "\n");
    }
  }

  if (!ctx.no_cache) {
    const fs::path cdir = fs::path(ctx.cache_dir) / config_hash(ctx.config);
    fs::create_directories(cdir);
    write_file(cdir / "summary.json", summary_text);
    for (const auto& [name, content] : outputs.csv_files)
      write_file(cdir / name, content);
  }
}

// Serve a previous run with identical config, byte for byte. Returns true on
// a cache hit.
bool try_cache(const RunContext& ctx) {
  if (ctx.no_cache) return false;
  const fs::path cdir = fs::path(ctx.cache_dir) / config_hash(ctx.config);
  const fs::path summary = cdir / "summary.json";
  if (!fs::exists(summary)) return false;

  const std::string summary_text = read_file(summary);
  std::cout << summary_text;
  if (!ctx.out_path.empty()) {
    fs::path base(ctx.out_path);
    if (base.has_parent_path()) fs::create_directories(base.parent_path());
    write_file(base, summary_text);
    for (const auto& entry : fs::directory_iterator(cdir)) {
      if (entry.path().filename() == "summary.json") continue;
      const fs::path dst = base.parent_path() / entry.path().filename();
      fs::copy_file(entry.path(), dst, fs::copy_options::overwrite_existing);
      write_file(dst.string() + ".meta.json",
                 json({{"schema_version", kSchemaVersion},
                       {"config", ctx.config},
                       {"config_hash", config_hash(ctx.config)},
                       {"cache", "hit"}})
                         .dump(2) +
                     "\n");
    }
  }
  return true;
}

json extrapolation_json(const backflow::ExtrapolationResult& fit) {
  json j;
  j["value_at_zero"] = fit.value_at_zero;
  j["coeffs"] = fit.coeffs;
  j["ssr"] = fit.ssr;
  j["poor_fit"] = fit.poor_fit;
  json pts = json::array();
  for (const auto& [n, v] : fit.points) pts.push_back({{"N", n}, {"lambda_min", v}});
  j["points"] = pts;
  return j;
}

std::vector<long> parse_schedule(const std::string& profile,
                                 const std::vector<long>& explicit_schedule) {
  if (!explicit_schedule.empty()) return explicit_schedule;
  return backflow::schedules::by_name(profile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal quantum backflow of a Dirac fermion on a ring"};
  app.require_subcommand(1);

  double chi = 0.730, beta = 0.0, alpha_over_pi = -1.0;
  std::string profile = "fast";
  std::vector<long> schedule;
  std::string out_path;
  std::string cache_dir;
  if (const char* env = std::getenv("BACKFLOW_CACHE_DIR")) cache_dir = env;
  if (cache_dir.empty()) cache_dir = ".backflow-cache";
  int workers = 0;
  unsigned seed = 0;
  bool no_cache = false;

  app.add_option("--cache-dir", cache_dir, "Result cache directory");
  app.add_flag("--no-cache", no_cache, "Bypass the result cache");
  app.add_option("--workers", workers, "Worker threads (0 = hardware)");
  app.add_option("--seed", seed, "Seed for randomized property tests");
  app.add_option("--out", out_path, "Output JSON path (CSVs written alongside)");

  auto add_params = [&](CLI::App* cmd, bool with_alpha) {
    cmd->add_option("--chi", chi, "lambda_C / R");
    cmd->add_option("--beta", beta, "flux parameter, in (-1, 0]");
    if (with_alpha) cmd->add_option("--alpha-over-pi", alpha_over_pi, "alpha / pi");
    cmd->add_option("--profile", profile, "fast | accurate");
    cmd->add_option("--n-schedule", schedule, "Explicit truncation schedule");
  };

  // two-mode
  auto* cmd_two = app.add_subcommand("two-mode", "Closed-form two-mode minimum");
  long l1 = 0, l2 = 1;
  double alpha_step = 0.005, alpha_max = 1.0;
  add_params(cmd_two, true);
  cmd_two->add_option("--l1", l1);
  cmd_two->add_option("--l2", l2);
  cmd_two->add_option("--alpha-step", alpha_step, "CSV grid step in alpha/pi");
  cmd_two->add_option("--alpha-max", alpha_max, "CSV grid end in alpha/pi");

  // infimum
  auto* cmd_inf = app.add_subcommand("infimum", "Extrapolated backflow infimum");
  add_params(cmd_inf, true);

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "Infimum over an alpha grid");
  double scan_a0 = 0.01, scan_a1 = 1.0, scan_da = 0.01;
  add_params(cmd_scan, false);
  cmd_scan->add_option("--alpha-min", scan_a0);
  cmd_scan->add_option("--alpha-max", scan_a1);
  cmd_scan->add_option("--alpha-step", scan_da);

  // global-min
  auto* cmd_glob = app.add_subcommand("global-min", "Global minimum over chi");
  double chi_min = 0.05, chi_max = 2.0, chi_step = 0.025;
  add_params(cmd_glob, false);
  cmd_glob->add_option("--chi-min", chi_min);
  cmd_glob->add_option("--chi-max", chi_max);
  cmd_glob->add_option("--chi-step", chi_step);

  // massless
  auto* cmd_mass = app.add_subcommand("massless", "Large-chi (massless) estimates");
  std::vector<double> chi_values = {20, 500, 1000, 10000, 100000};
  add_params(cmd_mass, false);
  cmd_mass->add_option("--chi-values", chi_values);

  // current
  auto* cmd_cur = app.add_subcommand("current", "Current trace of the maximizing state");
  long cur_n = 2000;
  int cur_points = 1201;
  add_params(cmd_cur, true);
  cmd_cur->add_option("--n-max", cur_n, "Truncation for the maximizing state");
  cmd_cur->add_option("--points", cur_points, "Grid points on [-0.6, 0.6]");

  // line
  auto* cmd_line = app.add_subcommand("line", "Line-limit eigenvalue");
  double line_eps = 0.01, line_zmax = 20.0;
  int line_nodes = 400;
  bool line_ladder = false, no_sens = false;
  cmd_line->add_option("--eps", line_eps, "Line parameter epsilon");
  cmd_line->add_option("--z-max", line_zmax, "Quadrature domain cutoff");
  cmd_line->add_option("--n-nodes", line_nodes, "Quadrature nodes");
  cmd_line->add_flag("--ladder", line_ladder, "Extrapolate over a z_max ladder");
  cmd_line->add_flag("--no-sensitivity-check", no_sens, "Skip doubled-cutoff check");

  CLI11_PARSE(app, argc, argv);

  try {
    RunContext ctx;
    ctx.cache_dir = cache_dir;
    ctx.no_cache = no_cache;
    ctx.out_path = out_path;

    Outputs outputs;

    if (app.got_subcommand(cmd_two)) {
      ctx.config = {{"cmd", "two-mode"}, {"chi", chi}, {"beta", beta},
                    {"l1", l1},          {"l2", l2},   {"alpha_over_pi", alpha_over_pi},
                    {"alpha_step", alpha_step}, {"alpha_max", alpha_max},
                    {"schema", kSchemaVersion}};
      if (try_cache(ctx)) return kExitOk;

      std::ostringstream csv;
      csv << "alpha_over_pi,beta,chi,p_min\n";
      for (double a = alpha_step; a <= alpha_max + 1e-12; a += alpha_step) {
        const double p = backflow::two_mode_min(
            backflow::RingParams(chi, beta, kPi * a), l1, l2);
        csv << format_double(a) << "," << format_double(beta) << ","
            << format_double(chi) << "," << format_double(p) << "\n";
      }
      outputs.csv_files.emplace_back("two_mode.csv", csv.str());

      if (alpha_over_pi > 0.0) {
        outputs.summary["p_min"] = backflow::two_mode_min(
            backflow::RingParams(chi, beta, kPi * alpha_over_pi), l1, l2);
        outputs.summary["alpha_over_pi"] = alpha_over_pi;
      } else {
        const auto best = backflow::two_mode_alpha_minimum(chi, beta, l1, l2);
        outputs.summary["p_min"] = best.p_min;
        outputs.summary["alpha_over_pi"] = best.alpha_over_pi;
      }
      outputs.summary["chi"] = chi;
      outputs.summary["beta"] = beta;
      outputs.summary["l1"] = l1;
      outputs.summary["l2"] = l2;
    } else if (app.got_subcommand(cmd_inf)) {
      if (alpha_over_pi <= 0.0)
        throw std::invalid_argument("infimum: --alpha-over-pi is required and must be > 0");
      const auto sched = parse_schedule(profile, schedule);
      ctx.config = {{"cmd", "infimum"}, {"chi", chi}, {"beta", beta},
                    {"alpha_over_pi", alpha_over_pi}, {"schedule", sched},
                    {"schema", kSchemaVersion}};
      if (try_cache(ctx)) return kExitOk;

      const auto r = backflow::backflow_infimum(
          backflow::RingParams(chi, beta, kPi * alpha_over_pi), sched, false);
      outputs.summary["p_value"] = r.p_value;
      outputs.summary["chi"] = chi;
      outputs.summary["beta"] = beta;
      outputs.summary["alpha_over_pi"] = alpha_over_pi;
      outputs.summary["extrapolation"] = extrapolation_json(r.extrapolation);
    } else if (app.got_subcommand(cmd_scan)) {
      const auto sched = parse_schedule(profile, schedule);
      ctx.config = {{"cmd", "scan"}, {"chi", chi}, {"beta", beta},
                    {"alpha_min", scan_a0}, {"alpha_max", scan_a1},
                    {"alpha_step", scan_da}, {"schedule", sched},
                    {"schema", kSchemaVersion}};
      if (try_cache(ctx)) return kExitOk;

      std::vector<double> grid;
      for (double a = scan_a0; a <= scan_a1 + 1e-12; a += scan_da) grid.push_back(a);
      const auto points = backflow::scan_alpha(chi, beta, grid, sched, workers);

      std::ostringstream csv;
      csv << "alpha_over_pi,beta,chi,p_value\n";
      int failures = 0;
      double best_p = 0.0, best_a = grid.front();
      for (const auto& pt : points) {
        if (!pt.ok) {
          ++failures;
          continue;
        }
        if (pt.p_value < best_p) {
          best_p = pt.p_value;
          best_a = pt.alpha_over_pi;
        }
        csv << format_double(pt.alpha_over_pi) << "," << format_double(pt.beta)
            << "," << format_double(pt.chi) << "," << format_double(pt.p_value)
            << "\n";
      }
      outputs.csv_files.emplace_back("scan.csv", csv.str());
      outputs.summary["min_p_value"] = best_p;
      outputs.summary["argmin_alpha_over_pi"] = best_a;
      outputs.summary["failures"] = failures;
      outputs.summary["points"] = points.size();
    } else if (app.got_subcommand(cmd_glob)) {
      const auto sched = parse_schedule(profile, schedule);
      ctx.config = {{"cmd", "global-min"}, {"chi_min", chi_min},
                    {"chi_max", chi_max},  {"chi_step", chi_step},
                    {"schedule", sched},   {"schema", kSchemaVersion}};
      if (try_cache(ctx)) return kExitOk;

      std::vector<double> chi_grid;
      for (double c = chi_min; c <= chi_max + 1e-12; c += chi_step)
        chi_grid.push_back(c);
      const auto gm = backflow::global_minimum(chi_grid, sched);

      std::ostringstream csv;
      csv << "chi,alpha_over_pi,p_value\n";
      for (const auto& pt : gm.chi_profile)
        csv << format_double(pt.chi) << "," << format_double(pt.alpha_over_pi)
            << "," << format_double(pt.p_value) << "\n";
      outputs.csv_files.emplace_back("global_min_profile.csv", csv.str());
      outputs.summary["chi"] = gm.chi;
      outputs.summary["alpha_over_pi"] = gm.alpha_over_pi;
      outputs.summary["beta"] = gm.beta;
      outputs.summary["p_value"] = gm.p_value;
    } else if (app.got_subcommand(cmd_mass)) {
      const auto sched = parse_schedule(profile, schedule);
      ctx.config = {{"cmd", "massless"}, {"chi_values", chi_values},
                    {"schedule", sched}, {"schema", kSchemaVersion}};
      if (try_cache(ctx)) return kExitOk;

      const auto table = backflow::massless_estimates(chi_values, sched);
      std::ostringstream csv;
      csv << "chi,alpha_over_pi,p_value\n";
      json rows = json::array();
      for (const auto& e : table) {
        csv << format_double(e.chi) << "," << format_double(e.alpha_over_pi)
            << "," << format_double(e.p_value) << "\n";
        rows.push_back({{"chi", e.chi},
                        {"alpha_over_pi", e.alpha_over_pi},
                        {"p_value", e.p_value}});
      }
      outputs.csv_files.emplace_back("table1.csv", csv.str());
      outputs.summary["entries"] = rows;
    } else if (app.got_subcommand(cmd_cur)) {
      if (alpha_over_pi <= 0.0)
        throw std::invalid_argument("current: --alpha-over-pi is required and must be > 0");
      ctx.config = {{"cmd", "current"}, {"chi", chi}, {"beta", beta},
                    {"alpha_over_pi", alpha_over_pi}, {"n_max", cur_n},
                    {"points", cur_points}, {"schema", kSchemaVersion}};
      if (try_cache(ctx)) return kExitOk;

      const backflow::RingParams params(chi, beta, kPi * alpha_over_pi);
      const auto pair =
          backflow::min_eigpair(backflow::build_kernel(params, cur_n).entries);
      const backflow::ModeTable modes(params, cur_n);

      const auto grid = backflow::uniform_grid(-0.6, 0.6, cur_points);
      const auto trace = backflow::current_trace(modes, pair.vector, grid);
      // Zoom near the left window edge where the current changes sign.
      const auto zoom_grid = backflow::uniform_grid(-0.52, -0.48, 401);
      const auto zoom = backflow::current_trace(modes, pair.vector, zoom_grid);

      const auto to_csv = [](const backflow::CurrentTrace& tr) {
        std::ostringstream csv;
        csv << "t_over_T,j_times_T\n";
        for (std::size_t i = 0; i < tr.t_over_T.size(); ++i)
          csv << format_double(tr.t_over_T[i]) << ","
              << format_double(tr.j_times_T[i]) << "\n";
        return csv.str();
      };
      outputs.csv_files.emplace_back("current.csv", to_csv(trace));
      outputs.csv_files.emplace_back("current_zoom.csv", to_csv(zoom));

      const auto wgrid = backflow::uniform_grid(-0.5, 0.5, 2001);
      outputs.summary["window_integral"] = backflow::window_integral(
          backflow::current_trace(modes, pair.vector, wgrid));
      outputs.summary["lambda_min"] = pair.value;
      outputs.summary["n_max"] = cur_n;
    } else if (app.got_subcommand(cmd_line)) {
      ctx.config = {{"cmd", "line"}, {"eps", line_eps}, {"z_max", line_zmax},
                    {"n_nodes", line_nodes}, {"ladder", line_ladder},
                    {"schema", kSchemaVersion}};
      if (try_cache(ctx)) return kExitOk;

      std::ostringstream csv;
      csv << "eps,lambda_min,nodes,zmax\n";
      if (line_ladder) {
        std::vector<double> zs;
        for (double z = line_zmax / 4.0; z <= line_zmax + 1e-9; z += line_zmax / 8.0)
          zs.push_back(z);
        const auto inf = backflow::line_infimum(line_eps, zs);
        for (const auto& pt : inf.ladder)
          csv << format_double(line_eps) << "," << format_double(pt.lambda_min)
              << "," << pt.n_nodes << "," << format_double(pt.z_max) << "\n";
        outputs.summary["lambda_min"] = inf.value;
        outputs.summary["fit_ssr"] = inf.ssr;
      } else {
        const auto r = backflow::line_min_eig(
            backflow::LineParams{line_eps, line_zmax, line_nodes}, !no_sens);
        csv << format_double(line_eps) << "," << format_double(r.lambda_min)
            << "," << r.n_nodes << "," << format_double(r.z_max) << "\n";
        outputs.summary["lambda_min"] = r.lambda_min;
        outputs.summary["cutoff_warning"] = r.cutoff_warning;
      }
      outputs.summary["eps"] = line_eps;
      outputs.csv_files.emplace_back("line.csv", csv.str());
    }

    emit(ctx, outputs);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    // Parameter-domain violations (beta outside (-1, 0], chi <= 0, ...) are
    // rejected before any computation; beta reduction to the fundamental
    // domain is the caller's job.
    std::cout << json({{"error", e.what()}, {"exit_code", kExitBadInput}}).dump(2)
              << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cout << json({{"error", e.what()}, {"exit_code", kExitNumerical}}).dump(2)
              << "\n";
    return kExitNumerical;
  }
}
