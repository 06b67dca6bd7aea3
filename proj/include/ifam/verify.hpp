#pragma once

#include <string>
#include <vector>

#include "ifam/oracles.hpp"

namespace ifam {

enum class Verdict { match, loose, violation };

/// One bound-vs-oracle comparison. A violation means an implementation bug:
/// every compared statement is a proven theorem or an exact construction.
struct ReportRow {
  std::string suite;
  std::string item;
  std::string params;
  std::string bound;
  std::string oracle;
  Verdict verdict = Verdict::match;
  std::string note;
};

std::string verdict_name(Verdict v);
long count_violations(const std::vector<ReportRow>& rows);
std::string rows_to_json(const std::vector<ReportRow>& rows);
std::string rows_to_csv(const std::vector<ReportRow>& rows);

/// Suites, one per acceptance area. n_max / k_max shrink the sweeps
/// (defaults match the stated grids); jobs parallelizes grid cells with a
/// deterministic ordered merge.
std::vector<ReportRow> verify_diversity(long n_max = 14, long k_max = 5, int jobs = 1);
std::vector<ReportRow> verify_breakpoints(long n_max = 14, long k_max = 5, int jobs = 1);
std::vector<ReportRow> verify_equality(long n_max = 12, long k_max = 5, int jobs = 1);
std::vector<ReportRow> verify_weighted(long n_max = 12, long k_max = 5, int jobs = 1);
std::vector<ReportRow> verify_cliques(long n_max = 9, long k_max = 3, int jobs = 1);
std::vector<ReportRow> verify_lemmin(int jobs = 1);
std::vector<ReportRow> verify_duals(long n_max = 14, long k_max = 6, int jobs = 1);
std::vector<ReportRow> verify_dominance(long n_max = 14, long k_max = 5, int jobs = 1);
std::vector<ReportRow> verify_feasibility(int jobs = 1);

const std::vector<std::string>& verify_suite_names();
std::vector<ReportRow> verify_suite(const std::string& name, long n_max, long k_max, int jobs);
std::vector<ReportRow> verify_all(long n_max = 14, long k_max = 5, int jobs = 1);

}  // namespace ifam
