#pragma once
// Level mappings and weakly / strongly well-supported models.

#include <catoms/core.h>

#include <cstdint>
#include <map>
#include <optional>

namespace catoms {

/// Maps every atom of a model M to a positive level.
struct LevelMapping {
    std::map<AtomId, std::uint32_t> levels;

    [[nodiscard]] Interpretation domain() const;
    [[nodiscard]] std::uint32_t at(AtomId a) const; ///< Errc::unmapped_atom when absent
    friend bool operator==(const LevelMapping&, const LevelMapping&) = default;
};

enum class WsKind { weak, strong };
enum class WsMethod { constructive, brute };

const char* to_string(WsKind k);
const char* to_string(WsMethod m);

/// Largest level over X; 0 for the empty set.
[[nodiscard]] std::uint32_t h_value(const Interpretation& x, const LevelMapping& l);

/// Least H(X) over solutions X ⊆ M with X ⊨_M A; empty when there is none.
[[nodiscard]] std::optional<std::uint32_t> l_value(const CAtom& a, const Interpretation& m, const LevelMapping& l);

/// Needs a basic program and a mapping whose domain is exactly M.
[[nodiscard]] bool check_ws(const Program& p, const Interpretation& m, const LevelMapping& l, WsKind kind);

/// Brute search is limited to |M| <= 7 (Errc::cap_exceeded otherwise) and
/// returns the lexicographically least witness over canonical atom order.
[[nodiscard]] std::optional<LevelMapping> find_ws(const Program& p, const Interpretation& m, WsKind kind,
                                                  WsMethod method);

inline constexpr std::size_t kBruteLevelCap = 7;

} // namespace catoms
