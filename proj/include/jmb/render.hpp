#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jmb/catalog.hpp"
#include "jmb/pair_search.hpp"
#include "jmb/tensor_search.hpp"
#include "jmb/verify.hpp"

namespace jmb {

enum class Format { Table, Csv, Json };

/// Accepts "table", "csv", "json". Throws ValidationError otherwise.
Format parse_format(std::string_view text);

/// Quotes a CSV field when it holds `+`, `,`, `"` or a newline.
std::string csv_field(std::string_view text);

std::string render_bounds(const std::vector<BoundResult>& rows, Format fmt);

/// Exact value, approximation and every listed maximiser block by block.
std::string render_certificate(const BoundResult& result);
std::string render_certificate_json(const BoundResult& result);

/// The product expression of a pair, e.g. "6531840^5*5! * 216".
std::string product_expression(const SaturatedPair& pair);

std::string render_primitive(const PrimitiveResult& result, Format fmt, unsigned sig = 3);
std::string render_report(const Report& report, Format fmt);
std::string render_constituents(const Catalog& catalog, Characteristic l, unsigned max_degree,
                                Format fmt);
std::string render_threshold(const ThresholdResult& result, Format fmt, unsigned sig = 3);
std::string render_weisfeiler(const std::vector<WeisfeilerRow>& rows, Format fmt,
                              unsigned sig = 3);
std::string render_discrepancies(Format fmt);

}  // namespace jmb
