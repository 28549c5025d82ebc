#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jmb/pair_search.hpp"

namespace jmb {

/// One parsed block of a shape string: `P<m>`, `P<m>^(<t>)`, with an
/// optional `~S<k>` marking a symmetric constituent S_k.
struct ShapeBlock {
  unsigned m = 1;
  unsigned t = 1;
  std::optional<unsigned> symmetric_k;

  friend bool operator==(const ShapeBlock&, const ShapeBlock&) = default;
};

/// Blocks joined by `+`, e.g. "P6^(5)+P3" or "P64~S66+P1".
std::string format_shape(const SaturatedPair& pair);

/// Throws ParseError on bad syntax.
std::vector<ShapeBlock> parse_shape(std::string_view text);

/// Rebuilds the pair from a shape string using the catalog entries for l,
/// then validates it. A `~S<k>` annotation is optional but must match. Throws ParseError or ValidationError.
SaturatedPair pair_from_shape(std::string_view text, Characteristic l,
                              const Catalog& catalog = Catalog::paper());

}  // namespace jmb
