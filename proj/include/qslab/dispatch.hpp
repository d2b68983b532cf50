#pragma once

#include <string>

#include "qslab/config.hpp"

namespace qslab {

// Runs one solver command described by the config and writes its artifacts
// under out_dir (created if needed). A pme run writes series.csv, snapshot
// files, final.csv, and report.txt; a cns run writes entropy.csv, snapshot
// files, final.csv, and report.txt; a sweep writes sweep.csv and report.txt.
// When command is empty, the config's [run] command is used.
void dispatch(const ConfigDoc& doc, const std::string& command, const std::string& out_dir);

}  // namespace qslab
