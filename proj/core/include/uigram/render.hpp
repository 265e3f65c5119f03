#pragma once

#include <string>
#include <string_view>

#include "uigram/layout.hpp"

namespace uigram {

struct RenderOptions {
  bool filter_invisible = false;  // drop structural labels before drawing
  int display_width = 360;        // per panel; height follows the canvas aspect
};

/// Deterministic label color, evenly spaced hues over the vocabulary order.
/// Labels outside the vocabulary render gray.
std::string label_color(const Vocabulary& vocab, std::string_view label,
                        bool stroke = false);

/// Static SVG of one layout: a stroked, translucently filled rectangle per
/// element with the label written at its top-left corner. Byte-stable for
/// identical inputs.
std::string render_layout(const UILayout& layout, const Vocabulary& vocab,
                          RenderOptions options = {});

/// Side-by-side panels ("original" left, "generated" right) sharing one
/// color map, with a legend listing the union of labels used by either side.
std::string render_pair(const UILayout& original, const UILayout& generated,
                        const Vocabulary& vocab, RenderOptions options = {});

}  // namespace uigram
