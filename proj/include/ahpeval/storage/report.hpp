#pragma once

#include <string>
#include <string_view>

#include "ahpeval/criteria/scoring.hpp"
#include "ahpeval/storage/project.hpp"

namespace ahpeval::storage {

enum class ReportKind { kSummary, kFull };

std::string_view to_string(ReportKind kind);
ReportKind parse_report_kind(std::string_view text);

inline constexpr std::string_view kChartBegin = "BEGIN CHART DATA";
inline constexpr std::string_view kChartEnd = "END CHART DATA";

// Spider-chart series for every evaluation, in evaluation order.
criteria::ChartData chart_data(const Project& p);

// Plain-text report followed by the chart data as a JSON block between
// kChartBegin and kChartEnd. Requires active weights and at least one
// evaluation (Error(kIncompleteProject) otherwise). Identical projects give
// identical bytes.
std::string export_report(const Project& p, ReportKind kind);

}  // namespace ahpeval::storage
