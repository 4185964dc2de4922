#pragma once
// Conditional satisfaction, the two-argument consequence operator and answer
// sets of basic programs, by reduct and by complement.

#include <catoms/core.h>

#include <cstddef>
#include <vector>

namespace catoms {

enum class Mode { reduct, complement };

const char* to_string(Mode m);

/// S ⊨_M A: S satisfies A and every I with S∩D ⊆ I ⊆ M∩D is a solution.
/// Vacuously reduces to satisfies(S, A) when S∩D ⊄ M∩D.
[[nodiscard]] bool cond_sat(const Interpretation& s, const Interpretation& m, const CAtom& a);

/// T_P(S, M). Rules with a bottom head never contribute. Needs a basic
/// program without naf-atoms.
[[nodiscard]] Interpretation tp_step(const Program& p, const Interpretation& s, const Interpretation& m);

struct TpTrace {
    std::vector<Interpretation> stages; ///< T^0 = ∅, T^1, ... up to the last distinct stage
    std::size_t converged_at = 0;       ///< index of the fixpoint stage
    bool converged           = true;    ///< false when the iteration cycles (only possible if M is no model)

    [[nodiscard]] const Interpretation& result() const { return stages.back(); }
};

[[nodiscard]] TpTrace tp_lfp(const Program& p, const Interpretation& m);

/// Replaces every `not A` by the complement of A.
[[nodiscard]] Program complement_program(const Program& p);

/// Drops rules with a naf-atom `not A` such that M satisfies A and strips
/// the remaining naf-atoms.
[[nodiscard]] Program reduct(const Program& p, const Interpretation& m);

/// Model check against P first, then M = T^∞(∅, M) of the reduct or of the
/// complement program.
[[nodiscard]] bool check_answer_set(const Program& p, const Interpretation& m, Mode mode);

/// All answer sets in canonical order. Answer sets lie inside hset(P), so
/// only subsets of hset(P) are swept.
[[nodiscard]] std::vector<Interpretation> enumerate_answer_sets(const Program& p, Mode mode,
                                                                const Limits& limits = {}, unsigned workers = 1);

} // namespace catoms
