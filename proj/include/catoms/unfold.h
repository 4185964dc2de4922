#pragma once
// Unfolding of c-atom programs into normal logic programs, the embedding of
// normal programs as c-atom programs, and a stable-model engine for normal
// programs.

#include <catoms/fixpoint.h>

#include <optional>
#include <string>
#include <vector>

namespace catoms {

/// `head :- pos, not neg.`; an empty head is an integrity constraint.
/// Bodies are ascending and duplicate-free.
struct NormalRule {
    std::optional<AtomId> head;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;

    friend bool operator==(const NormalRule&, const NormalRule&) = default;
};

/// Constraints sort after ordinary rules; then by head, positive body and
/// negative body (bodies compared by length, then lexicographically).
bool canonical_less(const NormalRule& a, const NormalRule& b);

struct NormalProgram {
    AtomTablePtr atoms;
    std::vector<NormalRule> rules;

    friend bool operator==(const NormalProgram& a, const NormalProgram& b) {
        return *a.atoms == *b.atoms && a.rules == b.rules;
    }
};

struct Unfolding {
    bool bottom = false; ///< the c-atom has no solutions and can never hold
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;

    friend bool operator==(const Unfolding&, const Unfolding&) = default;
};

/// One conjunction per solution X: pos = X, neg = D∖X. A c-atom without
/// solutions unfolds to the single bottom marker.
[[nodiscard]] std::vector<Unfolding> unfold_catom(const CAtom& a);

/// Alternative unfolding into one conjunction per maximal interval [X, Y]
/// of solutions (every set between X and Y is a solution): pos = X,
/// neg = D∖Y.
[[nodiscard]] std::vector<Unfolding> unfold_catom_intervals(const CAtom& a);

enum class UnfoldStyle { solutions, intervals };

/// Cross product of the body unfoldings of every rule. Needs a basic program
/// without naf-atoms; the per-rule product is bounded by the candidate
/// budget. Rules whose body contains a bottom unfolding are dropped, bottom
/// heads become constraints, and the result is deduplicated and sorted.
[[nodiscard]] NormalProgram unfold_program(const Program& p, const Limits& limits = {},
                                           UnfoldStyle style = UnfoldStyle::solutions);

/// Each atom a becomes ({a},{{a}}); constraints get a bottom head.
[[nodiscard]] Program catom_embed(const NormalProgram& n);

/// Gelfond-Lifschitz reduct: drop rules with `not b` for some b in M, strip
/// the remaining negative literals.
[[nodiscard]] NormalProgram gl_reduct(const NormalProgram& n, const Interpretation& m);

/// Iterates I_{k+1} = {head : pos ⊆ I_k, neg ∩ M = ∅} from ∅ and compares the
/// limit with M; every constraint must be blocked by M.
[[nodiscard]] bool is_gl_stable(const NormalProgram& n, const Interpretation& m);

/// Stable models in canonical order, swept over subsets of the rule heads.
[[nodiscard]] std::vector<Interpretation> gl_stable_models(const NormalProgram& n, const Limits& limits = {},
                                                           unsigned workers = 1);

/// "a :- b, not c." per line, no trailing newline. Facts render as "a."; a
/// constraint with an empty body renders as ":- #true.".
[[nodiscard]] std::string render_normal(const NormalProgram& n);

/// Answer sets of a basic program computed through unfolding. Complement
/// mode unfolds the complement program once; reduct mode unfolds P^M for
/// every candidate M ⊆ hset(P) and keeps M when it is a stable model of it.
[[nodiscard]] std::vector<Interpretation> answer_sets_via_unfolding(const Program& p, Mode mode,
                                                                    const Limits& limits = {},
                                                                    unsigned workers     = 1,
                                                                    UnfoldStyle style = UnfoldStyle::solutions);

} // namespace catoms
