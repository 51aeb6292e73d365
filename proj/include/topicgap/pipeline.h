// Apache License, Version 2.0, refer to LICENSE.txt
//
// The four analysis stages behind the command-line tool. Each reads its
// inputs from the run configuration and the output directory and writes
// its artifacts there:
//
//   preprocess  preprocess/{vocabulary,tokens,manifest}.json
//   fit         model.bin, topics.csv
//   analyze     prevalence.csv, frequency.csv, significance.csv
//   report      charts/<name>.svg, report.md
//
// Every stage also updates run-manifest.json (config echo, input hashes,
// per-stage summaries). Outputs depend only on the inputs and the seed.

#ifndef TOPICGAP_PIPELINE_H_
#define TOPICGAP_PIPELINE_H_

#include <filesystem>
#include <string>

#include "topicgap/filters.h"
#include "topicgap/run_config.h"

namespace topicgap {

inline constexpr int kArtifactSchemaVersion = 1;
inline constexpr const char* kSeriesHeader =
    "list_or_topic,source,year,hits,total,value,p_value,significant";

FilterLists LoadFilterLists(const RunConfig& config);

// File-system safe chart name.
std::string ChartName(const std::string& kind, const std::string& label);

void CmdPreprocess(const RunConfig& config);
void CmdFit(const RunConfig& config);
void CmdAnalyze(const RunConfig& config);
void CmdReport(const RunConfig& config);
void CmdPipeline(const RunConfig& config);

}  // namespace topicgap

#endif  // TOPICGAP_PIPELINE_H_
