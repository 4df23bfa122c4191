#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lveval/report.hpp"
#include "lveval/runner.hpp"
#include "lveval/suite.hpp"
#include "lveval/suite_tools.hpp"
#include "lveval/templates.hpp"

namespace {

using namespace lveval;

constexpr int kOk = 0;
constexpr int kFatal = 1;
constexpr int kPartial = 2;

struct CommonOpts {
  std::string config_file;
  std::vector<std::string> overrides;

  Config load() const { return Config::load(config_file, overrides); }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-c,--config", opts.config_file, "Config file (JSON)");
  cmd->add_option("--set", opts.overrides, "Config override key=value (repeatable)");
}

int cmd_eval_run(const std::string& suite, const std::string& videos, const CommonOpts& common,
                 const std::string& out_dir, const std::string& method, long stop_after) {
  Config config = common.load();
  if (!method.empty()) config.set("run.method=" + method);
  if (stop_after > 0) config.set("run.stop_after=" + std::to_string(stop_after));
  if (config.text("cache.dir", "").empty())
    config.set("cache.dir=" + (std::filesystem::path(out_dir) / "cache").string());
  RunSummary summary = run_evaluation(suite, videos, config, out_dir);
  std::cout << "evaluated " << summary.evaluated << " sample(s), resumed " << summary.resumed
            << ", errors " << summary.sample_errors << "\n";
  if (summary.complete) {
    std::cout << "report: " << summary.report_path.string() << "\n";
    return summary.sample_errors > 0 ? kPartial : kOk;
  }
  std::cout << "run stopped before completion; rerun to resume\n";
  return kPartial;
}

int cmd_eval_tables(const std::vector<std::string>& report_paths, const std::string& format,
                    const std::string& out_dir) {
  std::vector<json> reports;
  for (const auto& path : report_paths) reports.push_back(load_report(path));
  emit_tables(reports, format, out_dir);
  std::cout << "tables written to " << out_dir << "\n";
  return kOk;
}

int cmd_eval_correlate(const std::string& report_path, const std::vector<std::string>& pair_args,
                       const std::string& format, const std::string& out_dir) {
  json report = load_report(report_path);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& arg : pair_args) {
    auto colon = arg.find(':');
    if (colon == std::string::npos)
      throw InputError("pair must be metric_1:metric_2, got " + arg);
    pairs.emplace_back(arg.substr(0, colon), arg.substr(colon + 1));
  }
  if (pairs.empty()) pairs = default_correlation_pairs();
  emit_correlations(report, pairs, format, out_dir);
  std::cout << "correlations written to " << out_dir << "\n";
  return kOk;
}

int cmd_suite_validate(const std::string& suite_path, const CommonOpts& common) {
  Config config = common.load();
  Suite suite = load_suite(suite_path, config.theme_categories());
  SuiteRules rules;
  rules.herd_questions_per_dimension = config.integer("suite.herd_questions_per_dimension", 6);
  json themes = config.at("suite.themes");
  if (themes.is_array()) {
    for (const auto& t : themes) {
      if (t.is_string()) rules.allowed_themes.push_back(t.get<std::string>());
    }
  }
  auto violations = validate_suite(suite, rules);
  if (violations.empty()) {
    std::cout << "suite valid: " << suite.samples.size() << " sample(s)\n";
    return kOk;
  }
  for (const auto& v : violations) std::cout << v << "\n";
  std::cout << violations.size() << " violation(s)\n";
  return kPartial;
}

// Shared skeleton of the suite-augmentation commands: mutate records, then
// write back (or print on --dry-run). Per-sample failures leave the record
// untouched and turn the exit code partial.
template <typename Fn>
int augment_suite(const std::string& suite_path, const CommonOpts& common, bool dry_run, Fn&& fn) {
  Config config = common.load();
  Suite suite = load_suite(suite_path, config.theme_categories());
  ProviderHub hub(config);
  int failures = 0;
  for (auto& record : suite.samples) {
    try {
      fn(record, hub, config);
    } catch (const std::exception& e) {
      std::cerr << record.id << ": " << e.what() << "\n";
      ++failures;
    }
  }
  if (dry_run) {
    std::cout << to_json(suite).dump(2) << "\n";
  } else {
    save_suite(suite, suite_path);
    std::cout << "updated " << suite_path << "\n";
  }
  return failures > 0 ? kPartial : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long-form text-to-video evaluation toolkit"};
  app.require_subcommand(1);

  // --- eval ---------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "Run evaluations and emit reports");
  eval->require_subcommand(1);

  std::string suite_path, videos_dir, out_dir = "out", method, format = "md";
  long stop_after = 0;
  CommonOpts run_common;
  auto* run = eval->add_subcommand("run", "Evaluate a suite of videos");
  run->add_option("suite", suite_path, "Suite JSON file")->required();
  run->add_option("videos", videos_dir, "Directory with <id>.<ext> videos")->required();
  run->add_option("-o,--out", out_dir, "Output directory");
  run->add_option("--method", method, "Method name recorded in the report");
  run->add_option("--stop-after", stop_after,
                  "Stop after N fresh sample evaluations (for staged runs)");
  add_common(run, run_common);

  std::vector<std::string> table_reports;
  std::string tables_out = "tables";
  auto* tables = eval->add_subcommand("tables", "Emit score tables from reports");
  tables->add_option("reports", table_reports, "report.json files (one method each)")->required();
  tables->add_option("-f,--format", format, "csv or md");
  tables->add_option("-o,--out", tables_out, "Output directory");

  std::string corr_report, corr_out = "correlations", corr_format = "md";
  std::vector<std::string> corr_pairs;
  auto* correlate_cmd = eval->add_subcommand("correlate", "Emit correlation tables and scatter data");
  correlate_cmd->add_option("report", corr_report, "report.json file")->required();
  correlate_cmd->add_option("--pair", corr_pairs, "metric_1:metric_2 (repeatable)");
  correlate_cmd->add_option("-f,--format", corr_format, "csv or md");
  correlate_cmd->add_option("-o,--out", corr_out, "Output directory");

  // --- suite --------------------------------------------------------------
  auto* suite_cmd = app.add_subcommand("suite", "Inspect and augment suite files");
  suite_cmd->require_subcommand(1);

  std::string vsuite;
  CommonOpts validate_common;
  auto* validate = suite_cmd->add_subcommand("validate", "Check suite invariants");
  validate->add_option("suite", vsuite, "Suite JSON file")->required();
  add_common(validate, validate_common);

  std::string csuite;
  bool cdry = false;
  CommonOpts complexity_common;
  auto* complexity = suite_cmd->add_subcommand("complexity", "Score prompt complexity");
  complexity->add_option("suite", csuite, "Suite JSON file")->required();
  complexity->add_flag("--dry-run", cdry, "Print the augmented suite instead of writing");
  add_common(complexity, complexity_common);

  std::string hsuite;
  bool hdry = false;
  CommonOpts herd_common;
  auto* herd = suite_cmd->add_subcommand("herd-questions",
                                         "Generate polarity-annotated expectation questions");
  herd->add_option("suite", hsuite, "Suite JSON file")->required();
  herd->add_flag("--dry-run", hdry, "Print the augmented suite instead of writing");
  add_common(herd, herd_common);

  std::string asuite;
  bool adry = false;
  CommonOpts actions_common;
  auto* actions = suite_cmd->add_subcommand("actions", "Extract human actions from prompts");
  actions->add_option("suite", asuite, "Suite JSON file")->required();
  actions->add_flag("--dry-run", adry, "Print the augmented suite instead of writing");
  add_common(actions, actions_common);

  std::string ssuite, split_out;
  CommonOpts split_common;
  auto* split = suite_cmd->add_subcommand("split-events", "Write per-event generation prompts");
  split->add_option("suite", ssuite, "Suite JSON file")->required();
  split->add_option("-o,--out", split_out, "Output JSON file (stdout when omitted)");
  add_common(split, split_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_eval_run(suite_path, videos_dir, run_common, out_dir, method, stop_after);
    if (tables->parsed()) return cmd_eval_tables(table_reports, format, tables_out);
    if (correlate_cmd->parsed())
      return cmd_eval_correlate(corr_report, corr_pairs, corr_format, corr_out);
    if (validate->parsed()) return cmd_suite_validate(vsuite, validate_common);
    if (complexity->parsed()) {
      return augment_suite(csuite, complexity_common, cdry,
                           [](PromptRecord& r, ProviderHub& hub, const Config&) {
                             const std::string& text =
                                 r.prompt_text.empty() ? r.prompt_base : r.prompt_text;
                             r.complexity = score_prompt_complexity(text, hub, r.id);
                           });
    }
    if (herd->parsed()) {
      return augment_suite(
          hsuite, herd_common, hdry, [](PromptRecord& r, ProviderHub& hub, const Config& config) {
            // Dimension evaluations are recovered from the prompt text, which
            // carries the integrated viewing assessment.
            std::string rendered = render_template(
                templates::herd_evaluation_extraction.text,
                {{"evaluation_text", r.prompt_text.empty() ? r.prompt_base : r.prompt_text}});
            json parsed = parse_json_block(hub.judge_text(
                rendered, templates::herd_evaluation_extraction.version, 0, r.id));
            std::map<HerdDimension, std::string> evaluations;
            for (auto d : all_herd_dimensions()) evaluations[d] = "";
            for (auto it = parsed.begin(); it != parsed.end(); ++it) {
              std::string key = it.key();
              for (auto& c : key) c = c == ' ' ? '-' : char(std::tolower(c));
              if (auto d = herd_dimension_from_label(key); d && it->is_string())
                evaluations[*d] = it->get<std::string>();
            }
            auto questions = generate_herd_questions(
                evaluations, hub, config.integer("suite.herd_questions_per_dimension", 6), r.id);
            for (auto& q : questions) q.polarity = annotate_polarity(q.text, hub, r.id);
            r.herd_questions = std::move(questions);
          });
    }
    if (actions->parsed()) {
      return augment_suite(asuite, actions_common, adry,
                           [](PromptRecord& r, ProviderHub& hub, const Config&) {
                             const std::string& text =
                                 r.prompt_text.empty() ? r.prompt_base : r.prompt_text;
                             r.human_actions = extract_human_actions(text, hub, r.id);
                           });
    }
    if (split->parsed()) {
      Config config = split_common.load();
      Suite loaded = load_suite(ssuite, config.theme_categories());
      ProviderHub hub(config);
      json out = json::object();
      int failures = 0;
      for (const auto& record : loaded.samples) {
        try {
          out[record.id] = split_event_prompts(
              record.prompt_base.empty() ? record.prompt_text : record.prompt_base,
              record.ground_truth_events, hub, record.id);
        } catch (const std::exception& e) {
          std::cerr << record.id << ": " << e.what() << "\n";
          ++failures;
        }
      }
      if (split_out.empty()) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::ofstream(split_out) << out.dump(2) << "\n";
        std::cout << "wrote " << split_out << "\n";
      }
      return failures > 0 ? kPartial : kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFatal;
  }
  return kFatal;
}
