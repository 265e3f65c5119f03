#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uigram/gateway.hpp"
#include "uigram/grammar.hpp"
#include "uigram/layout.hpp"

namespace uigram {

// The three layout metrics operate on invisible-filtered element lists with
// coordinates normalized to [0,1] by the canvas size. Definitions are
// documented in README.md; they follow the forms commonly used for layout
// generation work: optimal same-label matching for MaxIoU, six-coordinate
// minimum gap with a -log(1-g) penalty for Alignment, and the pairwise
// intersection ratio for Overlap.

/// Optimal same-label matching IoU between a generated and a reference
/// element list: within each label the assignment maximizing total pairwise
/// IoU is found exactly, and the summed IoU is divided by
/// max(|generated|, |reference|). Both lists empty is defined as 1.0 (noted
/// in notes); exactly one empty is 0.0.
double max_iou(std::span<const PlacedElement> generated,
               std::span<const PlacedElement> reference, Canvas canvas,
               std::vector<std::string>* notes = nullptr);

/// 100 * sum of pairwise intersection areas / sum of element areas.
/// Zero total area yields 0 with a note.
double overlap(std::span<const PlacedElement> elements, Canvas canvas,
               std::vector<std::string>* notes = nullptr);

/// For each element the nearest same-kind coordinate of any other element is
/// found over {left, x-center, right, top, y-center, bottom}; gaps within
/// 1e-9 count as aligned. The metric is 100 * sum(-log(1 - g_i)) / n, so a
/// layout where every element aligns with at least one other scores exactly
/// 0. Fewer than two elements yields 0 with a note.
double alignment(std::span<const PlacedElement> elements, Canvas canvas,
                 std::vector<std::string>* notes = nullptr);

struct ScreenEval {
  std::string screen_id;
  std::string status;  // ok | parse_failed | validation_failed |
                       // transport_failed | missing_reference
  std::optional<double> max_iou;
  std::optional<double> overlap;
  std::optional<double> alignment;
  std::optional<double> conformance;
  std::vector<std::string> notes;
};

struct EvalAggregates {
  int ok_count = 0;
  int failure_count = 0;
  std::optional<double> mean_max_iou;
  std::optional<double> mean_overlap;
  std::optional<double> mean_alignment;
  std::optional<double> mean_conformance;
};

struct EvalReport {
  std::vector<ScreenEval> per_screen;  // sorted by screen_id
  EvalAggregates aggregates;           // means over status == ok screens
  bool has_conformance = false;        // a grammar was supplied
};

struct EvalOptions {
  ConformanceOptions conformance;
};

/// Applies filter_invisible to both sides, computes all metrics per ok
/// result, conformance when a grammar and reported rules are present, and
/// aggregates per-screen means over ok screens. Results without a reference
/// are marked missing_reference and excluded from aggregates.
EvalReport evaluate_batch(std::span<const GenerationResult> results,
                          const std::map<std::string, UILayout>& references,
                          const Vocabulary& vocab, Canvas canvas,
                          const GrammarSet* grammar = nullptr,
                          EvalOptions options = {});

/// Full-precision JSON report.
void save_report_json(const EvalReport& report, const std::filesystem::path& path);
/// Full-precision CSV: one row per screen plus a final "mean" row.
void save_report_csv(const EvalReport& report, const std::filesystem::path& path);
EvalReport load_report_json(const std::filesystem::path& path);

/// Human-readable summary table (2 decimals).
std::string format_summary_table(const EvalReport& report);

}  // namespace uigram
