#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "jmb/catalog.hpp"

namespace jmb {

/// Line-oriented text form of a catalog:
///
///   # comment
///   jordan-catalog v1 mode=paper-verbatim
///   kind=constituent degree=3 cond=in:5 index=2520 label=3.A7 center=3 src=...
///
/// Row kinds: primitive, constituent, component, quasicomponent. Values with
/// spaces are double-quoted. `index` accepts a decimal, `fact(k)` or a
/// product of those joined by `*`.
std::string serialize_catalog(const Catalog& catalog);

/// The header's mode selects the builtin base; rows replace base rows with
/// the same key or add new ones. Throws ParseError (with line number) for
/// malformed text and ValidationError for invalid or duplicate rows.
Catalog parse_catalog(std::string_view text);

Catalog load_catalog_file(const std::filesystem::path& path);

/// Evaluates `decimal | fact(k) | a*b`.
Nat parse_index_expr(std::string_view text);

}  // namespace jmb
