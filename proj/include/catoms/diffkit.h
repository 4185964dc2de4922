#pragma once
// Random program generation and a side-by-side comparison of every
// implemented semantics, with the expected relationships between them
// checked as it goes.

#include <catoms/core.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace catoms {

struct GenConfig {
    std::size_t atom_count   = 4; ///< at most 6; atoms are named a, b, c, ...
    std::size_t rule_count   = 4;
    double naf_probability   = 0.0;
    bool monotone_only       = false;
    bool general_heads       = false;
    std::uint64_t seed       = 0;
};

/// Deterministic in `cfg`.
[[nodiscard]] Program generate(const GenConfig& cfg);

struct Verdict {
    enum class Kind { accept, reject, unsupported } kind = Kind::reject;
    std::string reason; ///< why the semantics does not apply
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct SemanticsVerdict {
    Interpretation model;
    std::map<std::string, Verdict> verdicts;
};

/// A violated relationship between semantics, e.g. "complement-within-reduct".
struct Finding {
    std::string property;
    Interpretation model;
    std::string detail;
};

inline const std::vector<std::string> kSemantics = {"flp", "mr", "mt", "ours-complement", "ours-reduct"};

struct Comparison {
    std::vector<SemanticsVerdict> rows; ///< one per subset of the atom universe, canonical order
    std::vector<Finding> findings;

    /// Accepted models per semantics; semantics that do not apply are left out.
    [[nodiscard]] std::map<std::string, std::vector<Interpretation>> accepted() const;
};

/// Evaluates every semantics on every subset of the universe. "ours-*" use
/// the instance construction, so they cover general heads; "mt" needs a
/// monotone program and "flp" a basic one. Throws Errc::cap_exceeded per
/// `limits` and when the universe is larger than the level-mapping search
/// can handle.
[[nodiscard]] Comparison compare(const Program& p, const Limits& limits = {}, unsigned workers = 1);

/// One corpus line: {"program": ..., "seed": ..., "verdicts": {...}}.
[[nodiscard]] std::string corpus_record(std::uint64_t seed, const Program& p, const Comparison& c);

} // namespace catoms
