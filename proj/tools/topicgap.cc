// Apache License, Version 2.0, refer to LICENSE.txt
//
// topicgap: corpus preprocessing, topic fitting, source contrast and
// reporting from a single run configuration.
//
// Exit codes: 0 success, 2 configuration error, 3 data error, 4 internal.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "topicgap/errors.h"
#include "topicgap/log.h"
#include "topicgap/pipeline.h"
#include "topicgap/run_config.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topic and word-list contrast between two sources over time"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string labels_path;
  bool quiet = false;
  app.add_option("--config", config_path, "run configuration (JSON)")
      ->required();
  app.add_option("--seed", seed, "sampler seed; overrides lda.seed");
  app.add_option("--out", out_dir, "output directory; overrides output_dir");
  app.add_option("--labels", labels_path,
                 "CSV with columns topic,label; overrides selected_topics");
  app.add_flag("--quiet", quiet, "errors only");

  using Command = std::function<void(const topicgap::RunConfig&)>;
  Command command;
  auto add = [&](const char* name, const char* help, Command fn) {
    app.add_subcommand(name, help)->callback([&command, fn] { command = fn; });
  };
  add("preprocess", "tokenize, filter and stem the corpus",
      topicgap::CmdPreprocess);
  add("fit", "fit the topic model and print the top-word table",
      topicgap::CmdFit);
  add("analyze", "prevalence, frequency and significance tables",
      topicgap::CmdAnalyze);
  add("report", "SVG charts and the summary document", topicgap::CmdReport);
  add("pipeline", "preprocess, fit, analyze and report in order",
      topicgap::CmdPipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (quiet) topicgap::logger()->set_level(spdlog::level::err);
  try {
    topicgap::RunConfig config = topicgap::LoadRunConfig(config_path);
    if (seed) {
      config.lda.seed = *seed;
      config.seed_given = true;
    }
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (!labels_path.empty()) {
      config.selected_topics = topicgap::ReadTopicLabels(labels_path);
    }
    command(config);
  } catch (const topicgap::ConfigError& e) {
    topicgap::logger()->error("config: {}", e.what());
    return kExitConfig;
  } catch (const topicgap::DataError& e) {
    topicgap::logger()->error("data: {}", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    topicgap::logger()->error("internal: {}", e.what());
    return kExitInternal;
  }
  return 0;
}
