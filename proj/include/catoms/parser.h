#pragma once
// Text format for c-atom programs.
//
//   program  := { rule "." }
//   rule     := head [ ":-" body ] | ":-" body
//   head     := "bot" | catom
//   body     := lit { "," lit }
//   lit      := [ "not" ] catom
//   catom    := ATOM | "(" set "," "{" [ set { "," set } ] "}" ")" | agg
//   set      := "{" [ ATOM { "," ATOM } ] "}"
//   agg      := ("count" set | ("sum"|"avg"|"min"|"max") "{" wa { "," wa } "}") CMP INT
//             | INT "{" celem { "," celem } "}" INT
//   wa       := ATOM "=" INT ;  celem := [ "not" ] ATOM
//   CMP      := "<=" | "<" | ">=" | ">" | "==" | "=" | "!="
//
// "%" starts a line comment. Aggregates are expanded into explicit c-atoms
// while parsing.

#include <catoms/core.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catoms {

enum class AggregateKind { count, sum, avg, min, max, choice };
enum class Comparator { lt, le, eq, ne, ge, gt };

struct AggregateElement {
    std::string atom;
    std::int64_t weight = 0; ///< sum/avg/min/max only
    bool negated        = false; ///< choice only
};

struct AggregateSugar {
    AggregateKind kind = AggregateKind::count;
    std::vector<AggregateElement> elements;
    Comparator cmp    = Comparator::ge;
    std::int64_t rhs  = 0;
    std::int64_t lower = 0; ///< choice bounds
    std::int64_t upper = 0;
};

/// Expands aggregate sugar into (D, {T ⊆ D : F(T) ⊕ rhs}). Element names
/// must be present in `atoms`. sum and count of ∅ are 0; min/max/avg of ∅
/// are undefined, so ∅ is never a solution for them.
[[nodiscard]] CAtom expand_aggregate(const AggregateSugar& sugar, const AtomTable& atoms);

/// Throws ParseError; invariant violations use code Errc::semantic.
[[nodiscard]] Program parse_program(std::string_view text);

/// Canonical text; parse_program(render(p)) == p for parsed programs.
[[nodiscard]] std::string render(const Program& p);
[[nodiscard]] std::string render(const Rule& r, const AtomTable& atoms);
[[nodiscard]] std::string render(const CAtom& a, const AtomTable& atoms);

/// Parses "a,p(1),q" (optionally wrapped in braces) against a known atom
/// table. Unknown names raise Errc::usage.
[[nodiscard]] Interpretation parse_atom_list(std::string_view text, const AtomTable& atoms);

} // namespace catoms
