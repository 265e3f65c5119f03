#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "uigram/layout.hpp"

namespace uigram {

/// One corpus entry: a screen's layout joined with its natural-language
/// summary and app store metadata.
struct ScreenRecord {
  std::string screen_id;
  std::string app_package;
  UILayout layout;
  std::string summary;
  double app_rating = 0.0;
  std::int64_t app_downloads = 0;
  std::string layout_path;  // source hierarchy file, for manifests
};

struct CorpusReport {
  int loaded = 0;
  int missing_summary = 0;   // layout present, no usable summary
  int missing_layout = 0;    // summary present, no layout file
  int missing_metadata = 0;  // record kept with synthetic package / zero stats
  std::vector<std::string> file_errors;
};

struct Corpus {
  std::vector<ScreenRecord> records;  // sorted by screen_id
  CorpusReport report;
};

/// Joins a directory of <screen_id>.json hierarchy files with a JSON Lines
/// summaries file {"screen_id", "summary"} and a JSON Lines metadata file
/// {"screen_id", "app_package", "rating", "downloads"}. A record is produced
/// per screen that has both a layout and a non-empty summary; everything
/// missing a side is counted in the report. Screens without metadata get a
/// synthetic package equal to their screen_id so they can never leak across
/// an app split. Throws DataError on duplicate screen_ids, unreadable
/// sources, or an empty join.
Corpus load_corpus(const std::filesystem::path& hierarchy_dir,
                   const std::filesystem::path& summaries_file,
                   const std::filesystem::path& metadata_file,
                   Canvas canvas = kDefaultCanvas);

/// Keeps records with app_rating > min_rating and app_downloads >
/// min_downloads (both strict), then truncates to the top_k best by
/// (downloads desc, rating desc, screen_id asc). The returned order is that
/// ranking.
std::vector<ScreenRecord> quality_filter(std::vector<ScreenRecord> records,
                                         double min_rating,
                                         std::int64_t min_downloads,
                                         std::size_t top_k);

struct SplitResult {
  std::set<std::string> grammar_set_ids;     // app packages
  std::set<std::string> generation_set_ids;  // disjoint from grammar_set_ids
  std::uint64_t seed = 0;
  double fraction = 0.0;
};

/// Shuffles the distinct app packages with the seeded PRNG and assigns the
/// first ceil(grammar_fraction * P) to the grammar set, the rest to the
/// generation set. Deterministic for a fixed (records, fraction, seed).
/// Throws DataError when the corpus has fewer than two packages.
SplitResult split_by_app(std::span<const ScreenRecord> records,
                         double grammar_fraction, std::uint64_t seed);

// Corpus manifest: JSON Lines, one record header per line with the layout
// stored as a path relative to the manifest's directory.
void save_manifest(std::span<const ScreenRecord> records,
                   const std::filesystem::path& manifest_path);
std::vector<ScreenRecord> load_manifest(const std::filesystem::path& manifest_path,
                                        Canvas canvas = kDefaultCanvas);

void save_split_file(const SplitResult& split, const std::filesystem::path& path);
SplitResult load_split_file(const std::filesystem::path& path);

}  // namespace uigram
