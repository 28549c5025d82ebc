#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jmb/catalog.hpp"

namespace jmb {

/// Integer expression over naturals:
///
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' factor)?
///   atom   := integer | 'l' | '(' expr ')' | fact(e) | N(e, e) | idx(e, e)
///           | prod(e, e)
///
/// `l` is the characteristic under test. idx(m, l) is the constituent index
/// for subdegree m, 0 when there is none. prod(a, b) = a (a+1) ... b, 1 when
/// b < a.
class Expr {
 public:
  struct Node;

  /// Throws ParseError.
  static Expr parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  bool uses_l() const noexcept;

  /// Throws DomainError when `l` is needed but absent, ResourceError for a
  /// factorial above the cap.
  Nat eval(const Catalog& catalog, std::optional<Characteristic> l = std::nullopt) const;

  /// k when the whole expression is fact(k); such values are compared
  /// without being materialised.
  std::optional<std::uint64_t> factorial_argument(const Catalog& catalog,
                                                  std::optional<Characteristic> l) const;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

enum class Relation { Less, LessEq, Greater, GreaterEq, Equal };

std::string_view to_string(Relation r);
bool holds(Relation r, std::strong_ordering ord);

/// Exact comparison; a side of the form fact(k) with k above the factorial
/// cap goes through compare_with_factorial.
std::strong_ordering compare(const Expr& a, const Expr& b, const Catalog& catalog,
                             std::optional<Characteristic> l);

/// `e0 rel e1 rel e2 ...`, e.g. "fact(59) < 2520^19*fact(19) < fact(60)".
struct Chain {
  std::vector<Expr> terms;
  std::vector<Relation> relations;

  /// Throws ParseError.
  static Chain parse(std::string_view text);
  bool uses_l() const;
};

}  // namespace jmb
