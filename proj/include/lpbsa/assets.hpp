#pragma once

#include <string_view>

namespace lpbsa::assets {

/// Decision script replaying the worked case study (data/case_study.script).
std::string_view case_study_script();

/// Published comparison constants (data/benchmark_reference.csv).
std::string_view reference_table_csv();

}  // namespace lpbsa::assets
