#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uigram/layout.hpp"

namespace uigram {

/// One parent-children rule. Two rules are equal iff the lhs and the full
/// ordered rhs match; "A -> B C" and "A -> C B" are different rules.
struct ProductionRule {
  std::string lhs;
  std::vector<std::string> rhs;  // non-empty

  bool operator==(const ProductionRule&) const = default;
  auto operator<=>(const ProductionRule&) const = default;
};

/// "LHS -> RHS1 RHS2", the serialization used in grammar files and prompts.
std::string to_string(const ProductionRule& rule);

/// Parses the "LHS -> RHS1 RHS2" form. Throws DataError on empty sides or a
/// missing arrow.
ProductionRule rule_from_string(std::string_view text);

struct GrammarEntry {
  ProductionRule rule;
  std::int64_t count = 0;
  double probability = 0.0;  // count / total count of rules sharing the lhs
};

struct GrammarSet {
  std::vector<GrammarEntry> entries;  // sorted by rule, unique
  std::set<std::string> source_screen_ids;

  bool contains(const ProductionRule& rule) const;
  const GrammarEntry* find(const ProductionRule& rule) const;
  std::int64_t total_count() const;
};

/// One rule per internal node of the tree, in pre-order; a node's rule has
/// the node label as lhs and the children labels in document order as rhs.
/// Leaves contribute nothing. The result is a multiset: duplicates stay.
std::vector<ProductionRule> extract_rules(const UILayout& layout);

/// Union of extract_rules over the layouts, duplicate rules merged with
/// summed counts. probability = count / total count of same-lhs rules.
/// source_screen_ids is left empty; callers that know the originating
/// screens fill it in. Throws DataError on an empty layout list.
GrammarSet build_grammar(std::span<const UILayout> layouts);

struct LabelNode {
  std::string label;
  std::vector<LabelNode> children;

  bool operator==(const LabelNode&) const = default;
};

struct SampleLimits {
  int max_depth = 10;    // nodes at max_depth become leaves
  int max_nodes = 200;   // exceeding this aborts with DataError
};

/// Top-down stochastic expansion from root_symbol: a node whose label has
/// rules expands by one of them, picked proportionally to rule counts with
/// the seeded PRNG; labels without rules are leaves. Throws DataError when
/// the grammar has no rule for root_symbol or the tree exceeds max_nodes.
LabelNode sample_structure(const GrammarSet& grammar,
                           const std::string& root_symbol, std::uint64_t seed,
                           SampleLimits limits = {});

struct ConformanceOptions {
  /// Count reported rules with multiplicity (default) or deduplicated.
  bool count_multiplicity = true;
};

struct ConformanceReport {
  std::vector<ProductionRule> used_rules;  // as counted (deduplicated if configured)
  std::int64_t in_grammar_count = 0;
  std::int64_t total_count = 0;
  bool defined = false;  // false when the reported list is empty
  double fraction = 0.0; // in_grammar_count / total_count when defined
};

/// How many reported rules exist in the grammar's rule set.
ConformanceReport conformance(std::span<const ProductionRule> reported,
                              const GrammarSet& grammar,
                              ConformanceOptions options = {});

// Grammar file format: JSON Lines. The first line is a header
// {"source_screen_ids": [...], "version": "..."}; every following line is
// one rule {"lhs": s, "rhs": [...], "count": n, "p": f}.
void save_grammar_file(const GrammarSet& grammar,
                       const std::filesystem::path& path);
GrammarSet load_grammar_file(const std::filesystem::path& path);

}  // namespace uigram
