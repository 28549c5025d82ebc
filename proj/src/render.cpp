#include "jmb/render.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "jmb/errors.hpp"

namespace jmb {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

/// Left-aligned text table with a header rule.
std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  const auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) s += "  ";
      s += r[c];
      if (c + 1 < r.size()) s += std::string(width[c] - r[c].size(), ' ');
    }
    out << s << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  const auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << ',';
      out << csv_field(r[c]);
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string index_term(const ConstituentEntry& e) {
  if (e.kind == ConstituentKind::Symmetric) return e.label.substr(1) + "!";
  return e.index.to_string();
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw ValidationError("unknown format '" + std::string(text) + "'");
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of("+,\"\n") == std::string_view::npos) return std::string(text);
  std::string s = "\"";
  for (char c : text) {
    if (c == '"') s += '"';
    s += c;
  }
  return s + "\"";
}

std::string render_bounds(const std::vector<BoundResult>& rows, Format fmt) {
  if (fmt == Format::Json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"n", r.n},
                     {"l", r.l},
                     {"value", r.value.to_string()},
                     {"sci", r.value_sci.str()},
                     {"shapes", r.shapes()},
                     {"flags", r.flags}});
    }
    return out.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"n", "l", "value", "sci", "shapes", "flags"};
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    body.push_back({std::to_string(r.n), std::to_string(r.l), r.value.to_string(),
                    r.value_sci.str(), join(r.shapes(), fmt == Format::Csv ? ";" : " | "),
                    join(r.flags, fmt == Format::Csv ? ";" : " ")});
  }
  return fmt == Format::Csv ? csv(header, body) : text_table(header, body);
}

std::string product_expression(const SaturatedPair& pair) {
  std::vector<std::string> terms;
  for (const auto& b : pair.blocks) {
    std::string t = index_term(b.entry);
    if (b.t > 1) t += "^" + std::to_string(b.t) + "*" + std::to_string(b.t) + "!";
    terms.push_back(t);
  }
  return join(terms, " * ");
}

std::string render_certificate(const BoundResult& r) {
  std::ostringstream out;
  out << "f(" << r.n << ", " << r.l << ") = " << r.value.to_string() << "\n";
  out << "  ~ " << r.value_sci.str() << "\n";
  out << "maximisers: " << r.tie_count;
  if (r.tie_count > r.argmax.size()) out << " (showing " << r.argmax.size() << ")";
  out << "\n";
  for (std::size_t i = 0; i < r.argmax.size(); ++i) {
    const auto& p = r.argmax[i];
    out << "pair " << (i + 1) << ": " << p.shape() << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& b : p.blocks) {
      rows.push_back({"P" + std::to_string(b.entry.degree), b.entry.label,
                      std::string(to_string(b.entry.kind)), b.entry.index.to_string(),
                      std::to_string(b.t)});
    }
    std::istringstream table(text_table({"block", "group", "kind", "index", "t"}, rows));
    for (std::string line; std::getline(table, line);) out << "  " << line << "\n";
    out << "  product: " << product_expression(p) << "\n";
    out << "  check:   " << (pair_value(p) == r.value ? "equal" : "MISMATCH") << "\n";
  }
  if (!r.flags.empty()) out << "flags: " << join(r.flags, " ") << "\n";
  return out.str();
}

std::string render_certificate_json(const BoundResult& r) {
  json pairs = json::array();
  for (const auto& p : r.argmax) {
    json blocks = json::array();
    for (const auto& b : p.blocks) {
      blocks.push_back({{"m", b.entry.degree},
                        {"label", b.entry.label},
                        {"kind", std::string(to_string(b.entry.kind))},
                        {"index", b.entry.index.to_string()},
                        {"t", b.t}});
    }
    pairs.push_back({{"shape", p.shape()}, {"product", product_expression(p)}, {"blocks", blocks}});
  }
  json out = {{"n", r.n},
              {"l", r.l},
              {"value", r.value.to_string()},
              {"sci", r.value_sci.str()},
              {"shapes", r.shapes()},
              {"flags", r.flags},
              {"tie_count", r.tie_count},
              {"pairs", pairs}};
  return out.dump(2) + "\n";
}

std::string render_primitive(const PrimitiveResult& r, Format fmt, unsigned sig) {
  std::vector<std::string> configs;
  for (const auto& c : r.argmax) configs.push_back(c.to_string());
  const std::string sci = sci_string(r.value, sig).str();
  if (fmt == Format::Json) {
    json out = {{"n", r.n},         {"l", r.l},          {"value", r.value.to_string()},
                {"sci", sci},       {"configs", configs}, {"flags", r.flags}};
    return out.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"n", "l", "value", "sci", "configs", "flags"};
  const std::vector<std::vector<std::string>> body = {
      {std::to_string(r.n), std::to_string(r.l), r.value.to_string(), sci,
       join(configs, fmt == Format::Csv ? ";" : " "), join(r.flags, fmt == Format::Csv ? ";" : " ")}};
  return fmt == Format::Csv ? csv(header, body) : text_table(header, body);
}

std::string render_report(const Report& report, Format fmt) {
  if (fmt == Format::Json) {
    json items = json::array();
    for (const auto& i : report.items) {
      items.push_back({{"id", i.id},
                       {"status", std::string(to_string(i.status))},
                       {"lhs_sci", i.lhs_sci},
                       {"rhs_sci", i.rhs_sci},
                       {"note", i.note}});
    }
    json out = {{"suite", report.suite},
                {"pass", report.count(Status::Pass)},
                {"fail", report.count(Status::Fail)},
                {"discrepancy", report.count(Status::Discrepancy)},
                {"items", items}};
    return out.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"id", "status", "lhs", "rhs", "note"};
  std::vector<std::vector<std::string>> body;
  for (const auto& i : report.items) {
    body.push_back({i.id, std::string(to_string(i.status)), i.lhs_sci, i.rhs_sci, i.note});
  }
  if (fmt == Format::Csv) return csv(header, body);
  std::ostringstream out;
  out << text_table(header, body);
  out << report.suite << ": " << report.count(Status::Pass) << " pass, "
      << report.count(Status::Fail) << " fail, " << report.count(Status::Discrepancy)
      << " discrepancy\n";
  return out.str();
}

std::string render_constituents(const Catalog& catalog, Characteristic l, unsigned max_degree,
                                Format fmt) {
  json rows = json::array();
  std::vector<std::vector<std::string>> body;
  for (unsigned m = 1; m <= max_degree; ++m) {
    const auto e = catalog.constituent(l, m);
    const std::string index = e ? e->index.to_string() : "";
    const std::string N = m >= 2 ? catalog.N_bound(m, l).to_string() : "";
    if (fmt == Format::Json) {
      json row = {{"m", m}, {"N", N}};
      if (e) {
        row["constituent"] = {{"label", e->label},
                              {"index", index},
                              {"kind", std::string(to_string(e->kind))},
                              {"center", e->center_order},
                              {"source", e->source_anchor}};
      } else {
        row["constituent"] = nullptr;
      }
      rows.push_back(row);
    } else {
      body.push_back({std::to_string(m), e ? e->label : "-",
                      e ? std::string(to_string(e->kind)) : "none", index, N,
                      e ? e->source_anchor : ""});
    }
  }
  if (fmt == Format::Json) {
    json out = {{"l", l.value()},
                {"mode", std::string(to_string(catalog.mode()))},
                {"degrees", rows}};
    return out.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"m", "constituent", "kind", "index", "N(m,l)",
                                           "source"};
  return fmt == Format::Csv ? csv(header, body) : text_table(header, body);
}

std::string render_threshold(const ThresholdResult& r, Format fmt, unsigned sig) {
  if (fmt == Format::Json) {
    json out = {{"l", r.l}, {"n0", r.n0}, {"window_end", r.window_end}};
    if (r.last_failure) {
      out["last_failure"] = {{"n", r.last_failure->n},
                             {"value", r.last_failure->value.to_string()},
                             {"sci", sci_string(r.last_failure->value, sig).str()},
                             {"shapes", r.last_failure->shapes()}};
    } else {
      out["last_failure"] = nullptr;
    }
    return out.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"l", "n0", "window_end", "last_failure_n",
                                           "last_failure_value", "sci", "shapes"};
  std::vector<std::string> row = {std::to_string(r.l), std::to_string(r.n0),
                                  std::to_string(r.window_end)};
  if (r.last_failure) {
    row.push_back(std::to_string(r.last_failure->n));
    row.push_back(r.last_failure->value.to_string());
    row.push_back(sci_string(r.last_failure->value, sig).str());
    row.push_back(join(r.last_failure->shapes(), fmt == Format::Csv ? ";" : " | "));
  } else {
    row.insert(row.end(), {"", "", "", ""});
  }
  if (fmt == Format::Csv) return csv(header, {row});
  std::ostringstream out;
  out << "threshold n(" << r.l << ") = " << r.n0 << " (checked up to " << r.window_end << ")\n";
  if (r.last_failure) {
    out << "last failure: n = " << r.last_failure->n << ", f = "
        << r.last_failure->value.to_string() << " (" << sci_string(r.last_failure->value, sig).str()
        << ") via " << join(r.last_failure->shapes(), " | ") << "\n";
  }
  return out.str();
}

std::string render_weisfeiler(const std::vector<WeisfeilerRow>& rows, Format fmt, unsigned sig) {
  const WeisfeilerRow* worst = worst_alpha(rows);
  if (fmt == Format::Json) {
    json items = json::array();
    for (const auto& r : rows) {
      json row = {{"n", r.n},
                  {"l", r.l},
                  {"f", r.f.to_string()},
                  {"f_sci", sci_string(r.f, sig).str()},
                  {"bound_sci", sci_string(r.bound, sig).str()},
                  {"dominates", r.dominates}};
      row["alpha"] = r.n >= 2 ? json(r.alpha) : json(nullptr);
      items.push_back(row);
    }
    json out = {{"rows", items}};
    if (worst) out["worst"] = {{"n", worst->n}, {"l", worst->l}, {"alpha", worst->alpha}};
    return out.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"n", "l", "f_sci", "bound_sci", "alpha", "dominates"};
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    body.push_back({std::to_string(r.n), std::to_string(r.l), sci_string(r.f, sig).str(),
                    sci_string(r.bound, sig).str(), r.n >= 2 ? fixed(r.alpha, 4) : "",
                    r.dominates ? "yes" : "NO"});
  }
  if (fmt == Format::Csv) return csv(header, body);
  std::ostringstream out;
  out << text_table(header, body);
  if (worst) {
    out << "worst alpha: n = " << worst->n << ", l = " << worst->l << ", alpha = "
        << fixed(worst->alpha, 4) << "\n";
  }
  return out.str();
}

std::string render_discrepancies(Format fmt) {
  const auto& d = discrepancies();
  if (fmt == Format::Json) {
    json out = json::array();
    for (const auto& x : d) {
      out.push_back({{"id", x.id},
                     {"printed", x.printed},
                     {"alternative", x.alternative},
                     {"anchor", x.anchor},
                     {"note", x.note}});
    }
    return out.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"id", "printed", "alternative", "anchor", "note"};
  std::vector<std::vector<std::string>> body;
  for (const auto& x : d) body.push_back({x.id, x.printed, x.alternative, x.anchor, x.note});
  return fmt == Format::Csv ? csv(header, body) : text_table(header, body);
}

}  // namespace jmb
