#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uigram {

/// Axis-aligned box in integer canvas pixels. left <= right and
/// top <= bottom for valid boxes; zero-area boxes (left == right or
/// top == bottom) are legal inputs and have area 0.
struct Bounds {
  int left = 0;
  int top = 0;
  int right = 0;
  int bottom = 0;

  std::int64_t width() const { return std::int64_t{right} - left; }
  std::int64_t height() const { return std::int64_t{bottom} - top; }
  std::int64_t area() const { return width() * height(); }

  bool operator==(const Bounds&) const = default;
};

struct Canvas {
  int width = 1440;
  int height = 2560;

  bool operator==(const Canvas&) const = default;
};

/// Screen capture resolution of the RICO-style corpora this toolkit targets.
inline constexpr Canvas kDefaultCanvas{1440, 2560};

struct UIElement {
  std::string label;
  Bounds bounds;
  std::vector<UIElement> children;  // document order, significant

  bool operator==(const UIElement&) const = default;
};

struct UILayout {
  UIElement root;
  Canvas canvas;

  bool operator==(const UILayout&) const = default;
};

/// Ordered label set with a designated root symbol and the subset of labels
/// that are structural rather than visible. Label matching is exact
/// (case-sensitive) everywhere.
struct Vocabulary {
  std::vector<std::string> labels;
  std::string root_symbol;
  std::vector<std::string> invisible;

  bool contains(std::string_view label) const;
  bool is_invisible(std::string_view label) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Stable hex digest of (labels, root_symbol, invisible); recorded in
  /// prompt bundles so evaluation can detect vocabulary drift.
  std::string digest() const;

  /// The 25-label vocabulary used by CLAY-style corpora, with the five
  /// commonly invisible structural labels marked.
  static Vocabulary clay_default();

  bool operator==(const Vocabulary&) const = default;
};

struct PlacedElement {
  std::string label;
  Bounds bounds;

  bool operator==(const PlacedElement&) const = default;
};

enum class ViolationKind {
  unknown_label,
  inverted_bounds,
  out_of_canvas,
  missing_root,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string path;  // dot-joined child indexes from the root, "" for the root
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

std::size_t count_elements(const UILayout& layout);

/// Depth-first pre-order listing of every element.
std::vector<PlacedElement> flatten(const UILayout& layout);

/// flatten() with elements whose label is in vocab.invisible removed.
/// Removal deletes the node only; its descendants stay in the listing.
std::vector<PlacedElement> filter_invisible(const UILayout& layout,
                                            const Vocabulary& vocab);

/// Structural check against a vocabulary and canvas. Violations are data,
/// never exceptions: unknown labels, inverted or out-of-canvas bounds, and
/// a root whose label is not the vocabulary's root symbol.
ValidationResult validate(const UILayout& layout, const Vocabulary& vocab,
                          const Canvas& canvas);

// Layout JSON schema: {"label": string, "bounds": [left, top, right, bottom],
// "children": [...]}. The canvas is not part of the schema and is supplied by
// the caller when parsing.
std::string layout_to_json(const UILayout& layout, int indent = -1);
UILayout layout_from_json(std::string_view text, Canvas canvas);
UILayout load_layout_file(const std::filesystem::path& path, Canvas canvas);
void save_layout_file(const UILayout& layout, const std::filesystem::path& path,
                      int indent = 2);

// Vocabulary file schema: {"labels": [...], "root_symbol": s, "invisible": [...]}.
Vocabulary load_vocabulary_file(const std::filesystem::path& path);
void save_vocabulary_file(const Vocabulary& vocab,
                          const std::filesystem::path& path);

}  // namespace uigram
