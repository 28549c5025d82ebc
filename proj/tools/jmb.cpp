#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jmb/catalog.hpp"
#include "jmb/catalog_io.hpp"
#include "jmb/errors.hpp"
#include "jmb/pair_search.hpp"
#include "jmb/render.hpp"
#include "jmb/tensor_search.hpp"
#include "jmb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string catalog_path;
  std::string mode = "paper-verbatim";
  std::string format = "table";
  unsigned sig = 3;
  unsigned window = 150;
};

jmb::Catalog load_catalog(const CliConfig& cfg, bool mode_given) {
  std::string path = cfg.catalog_path;
  if (path.empty()) {
    if (const char* env = std::getenv("JMB_CATALOG"); env && *env) path = env;
  }
  const auto mode = jmb::parse_catalog_mode(cfg.mode);
  if (path.empty()) return jmb::Catalog::builtin(mode);
  jmb::Catalog c = jmb::load_catalog_file(path);
  if (mode_given) c.set_mode(mode);
  return c;
}

std::vector<unsigned> parse_prime_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw jmb::ValidationError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw jmb::ValidationError("not a number: '" + item + "'");
    out.push_back(jmb::Characteristic(v).value());
  }
  if (out.empty()) throw jmb::ValidationError("empty characteristic list");
  return out;
}

void flag_discrepancies(std::vector<jmb::BoundResult>& rows) {
  for (auto& r : rows) {
    const std::string id = jmb::golden_discrepancy_id(r.n, r.l);
    if (!id.empty()) r.flags.push_back("discrepancy=" + id);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bounds for abelian normal subgroups of finite linear groups"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--catalog", cfg.catalog_path, "Catalog file (overrides JMB_CATALOG)");
  auto* mode_opt = app.add_option("--mode", cfg.mode, "paper-verbatim | corrected | permissive")
                       ->check(CLI::IsMember({"paper-verbatim", "corrected", "permissive"}));
  app.add_option("--format", cfg.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--sig", cfg.sig, "Significant digits in approximations")
      ->check(CLI::Range(1u, 30u));

  unsigned n = 0;
  unsigned long l = 0;
  bool certificate = false;
  auto* bound = app.add_subcommand("bound", "f(n, l) for one degree");
  bound->add_option("n", n, "Degree")->required();
  bound->add_option("--char", l, "Characteristic")->required();
  bound->add_flag("--certificate", certificate, "List maximising pairs block by block");

  unsigned from = 1, to = 1;
  auto* table = app.add_subcommand("table", "f(n, l) over a range of degrees");
  table->add_option("--char", l, "Characteristic")->required();
  table->add_option("--from", from, "First degree")->required();
  table->add_option("--to", to, "Last degree")->required();

  auto* primitive = app.add_subcommand("primitive", "Best tensor-induced primitive bound");
  primitive->add_option("n", n, "Degree")->required();
  primitive->add_option("--char", l, "Characteristic")->required();

  unsigned max_degree = 72;
  bool serialize = false;
  auto* catalog = app.add_subcommand("catalog", "Effective constituents per degree");
  catalog->add_option("--char", l, "Characteristic");
  catalog->add_option("--max-degree", max_degree, "Last degree listed")
      ->check(CLI::Range(1u, jmb::kMaxPairDegree));
  catalog->add_flag("--dump", serialize, "Print the catalog in its file format");

  std::string suite = "all";
  bool show_ledger = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "registry | prop8 | golden | all")
      ->check(CLI::IsMember({"registry", "prop8", "golden", "all"}));
  verify->add_flag("--discrepancies", show_ledger, "Print the discrepancy ledger");

  auto* thresh = app.add_subcommand("threshold", "Least degree from which the generic bound holds");
  thresh->add_option("--char", l, "Characteristic")->required();
  thresh->add_option("--window", cfg.window, "Last degree checked")
      ->check(CLI::Range(2u, jmb::kMaxPairDegree));

  unsigned wf_to = 63;
  std::string wf_chars = "2,3,5,7,11,13,17,19";
  auto* wf = app.add_subcommand("weisfeiler", "Compare f(n, l) with n^4 (n+2)!");
  wf->add_option("--to", wf_to, "Last degree")->check(CLI::Range(1u, jmb::kMaxPairDegree));
  wf->add_option("--chars", wf_chars, "Comma-separated characteristics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const jmb::Catalog cat = load_catalog(cfg, mode_opt->count() > 0);
    const jmb::Format fmt = jmb::parse_format(cfg.format);

    if (*bound) {
      auto r = jmb::best_pair(n, jmb::Characteristic(l), cat, cfg.sig);
      std::vector<jmb::BoundResult> rows{r};
      flag_discrepancies(rows);
      if (certificate) {
        std::cout << (fmt == jmb::Format::Json ? jmb::render_certificate_json(rows[0])
                                               : jmb::render_certificate(rows[0]));
      } else {
        std::cout << jmb::render_bounds(rows, fmt);
      }
      return kExitOk;
    }
    if (*table) {
      if (from < 1 || from > to || to > jmb::kMaxPairDegree) {
        std::cerr << "error: need 1 <= --from <= --to <= " << jmb::kMaxPairDegree << "\n";
        return kExitUsage;
      }
      auto rows = jmb::bound_table(jmb::Characteristic(l), from, to, cat, cfg.sig);
      flag_discrepancies(rows);
      std::cout << jmb::render_bounds(rows, fmt);
      return kExitOk;
    }
    if (*primitive) {
      std::cout << jmb::render_primitive(jmb::primitive_bound(n, jmb::Characteristic(l), cat), fmt,
                                         cfg.sig);
      return kExitOk;
    }
    if (*catalog) {
      if (serialize) {
        std::cout << jmb::serialize_catalog(cat);
        return kExitOk;
      }
      if (l == 0) {
        std::cerr << "error: --char is required unless --dump is given\n";
        return kExitUsage;
      }
      std::cout << jmb::render_constituents(cat, jmb::Characteristic(l), max_degree, fmt);
      return kExitOk;
    }
    if (*verify) {
      if (show_ledger) {
        std::cout << jmb::render_discrepancies(fmt);
        return kExitOk;
      }
      std::vector<jmb::Report> reports;
      if (suite == "registry" || suite == "all") reports.push_back(jmb::run_registry(cat));
      if (suite == "prop8" || suite == "all") reports.push_back(jmb::verify_prop8(cat));
      if (suite == "golden" || suite == "all") reports.push_back(jmb::golden_tables(cat));
      bool ok = true;
      if (fmt == jmb::Format::Json && reports.size() > 1) {
        std::cout << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
          std::string body = jmb::render_report(reports[i], fmt);
          body.pop_back();
          std::cout << body << (i + 1 < reports.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
      } else {
        for (const auto& r : reports) std::cout << jmb::render_report(r, fmt);
      }
      for (const auto& r : reports) ok = ok && r.ok();
      return ok ? kExitOk : kExitFail;
    }
    if (*thresh) {
      std::cout << jmb::render_threshold(jmb::threshold(jmb::Characteristic(l), cfg.window, cat),
                                         fmt, cfg.sig);
      return kExitOk;
    }
    if (*wf) {
      const auto rows = jmb::weisfeiler(wf_to, parse_prime_list(wf_chars), cat);
      std::cout << jmb::render_weisfeiler(rows, fmt, cfg.sig);
      for (const auto& r : rows) {
        if (!r.dominates) return kExitFail;
      }
      return kExitOk;
    }
  } catch (const jmb::NotFoundError& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kExitFail;
  } catch (const jmb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const jmb::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const jmb::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const jmb::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
