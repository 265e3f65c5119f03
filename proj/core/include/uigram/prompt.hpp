#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "uigram/grammar.hpp"
#include "uigram/ingest.hpp"
#include "uigram/layout.hpp"

namespace uigram {

enum class PromptVariant { plain, grammar };

std::string_view to_string(PromptVariant variant);
PromptVariant prompt_variant_from_string(std::string_view name);

/// Prompt template text with {placeholder} markers. The defaults implement
/// the two shipped prompt designs; every piece of wording is user-editable
/// by pointing the CLI at a directory of replacement files.
struct PromptTemplates {
  std::string plain;    // placeholders: label_list, example_summary,
                        //               example_layout_json, target_summary
  std::string grammar;  // adds: example_grammar, provided_grammar

  static PromptTemplates defaults();
  /// Reads plain_prompt.txt and grammar_prompt.txt from dir.
  static PromptTemplates load_dir(const std::filesystem::path& dir);
};

struct PromptBundle {
  PromptVariant variant = PromptVariant::plain;
  std::string text;
  std::string example_screen_id;
  std::set<std::string> grammar_source_ids;  // empty for the plain variant
  std::string target_screen_id;              // empty when the target is summary-only
  std::string target_summary;
  std::string vocabulary_hash;

  /// Key used by the mock transport's fixture directory.
  std::string prompt_hash() const;
};

/// Renders the 1-shot prompt without grammar: task instruction, the label
/// constraint list, the example (summary + layout JSON), the response-format
/// directive, and the target summary, in that order. Throws DataError when
/// the example is unusable (no summary) or equals the target screen.
PromptBundle build_plain_prompt(const ScreenRecord& example,
                                const std::string& target_summary,
                                const Vocabulary& vocab,
                                const PromptTemplates& templates = PromptTemplates::defaults(),
                                const std::string& target_screen_id = "");

/// Renders the grammar-guided prompt: the example is demonstrated as a
/// two-step process (its own rule list, then its layout), the provided
/// grammar block follows, the model is asked to report the rules it used,
/// and the prompt ends with the response-format directive and the target
/// summary. Throws DataError when the provided grammar's sources include the
/// target screen, or the example equals the target screen.
PromptBundle build_grammar_prompt(const ScreenRecord& example,
                                  const GrammarSet& example_grammar,
                                  const GrammarSet& provided_grammar,
                                  const std::string& target_summary,
                                  const Vocabulary& vocab,
                                  const PromptTemplates& templates = PromptTemplates::defaults(),
                                  const std::string& target_screen_id = "");

/// Comma-separated vocabulary labels, in vocabulary order.
std::string render_label_list(const Vocabulary& vocab);

/// One "LHS -> RHS1 RHS2" line per rule, sorted.
std::string render_rule_lines(const GrammarSet& grammar);

/// Writes the bundle as JSON (metadata + text + prompt hash) and the bare
/// rendered text next to it.
void save_bundle(const PromptBundle& bundle,
                 const std::filesystem::path& json_path,
                 const std::filesystem::path& text_path);
PromptBundle load_bundle(const std::filesystem::path& json_path);

struct GenerationPlan {
  std::string example_screen_id;
  std::uint64_t seed = 0;
  std::vector<PromptBundle> bundles;  // ordered by target screen_id
};

/// Deterministic batch planning shared by the CLI and tests: picks the
/// in-context example uniformly with the seeded PRNG from the eligible pool
/// (the generation side when a split is given), excludes it from the
/// targets, and renders one bundle per remaining summarized record. For the
/// grammar variant a provided grammar and a split are required and leakage
/// is checked per bundle. limit == 0 means no limit.
GenerationPlan plan_generation(std::span<const ScreenRecord> records,
                               PromptVariant variant,
                               const GrammarSet* provided_grammar,
                               const SplitResult* split,
                               const Vocabulary& vocab,
                               const PromptTemplates& templates,
                               std::uint64_t seed, std::size_t limit = 0);

}  // namespace uigram
