#pragma once
// Competing semantics for programs with c-atoms: computations and stable
// models for monotone programs (Marek-Truszczynski), NSS-reduct answer sets
// (Marek-Remmel), FLP-reduct answer sets, and the aggregate consequence
// operator over solution pairs (Pelov).

#include <catoms/core.h>

#include <vector>

namespace catoms {

/// Rules whose body S satisfies.
[[nodiscard]] std::vector<Rule> applicable(const Program& p, const Interpretation& s);

/// S' ∈ tnd(P, S), decided without enumerating tnd.
[[nodiscard]] bool in_tnd(const Program& p, const Interpretation& s, const Interpretation& next);

/// Nondeterministic one-step provability: every S' ⊆ hset(P(S)) satisfying
/// the head of each applicable rule, in canonical order.
[[nodiscard]] std::vector<Interpretation> tnd(const Program& p, const Interpretation& s, const Limits& limits = {});

struct Computation {
    std::vector<Interpretation> steps; ///< X_0 = ∅, X_1, ... up to stabilisation
    [[nodiscard]] Interpretation result() const;
};

/// True iff consecutive steps grow and each step is in tnd of its
/// predecessor; the last step must also reproduce itself.
[[nodiscard]] bool is_computation(const Program& p, const Computation& c);

/// X_{i+1} = union of head(r)_d ∩ M over the rules applicable in X_i.
[[nodiscard]] Computation canonical_computation(const Program& p, const Interpretation& m);

/// Drops rules with a naf-atom satisfied by M and strips the remaining naf
/// literals. Heads are left untouched.
[[nodiscard]] Program mt_reduct(const Program& p, const Interpretation& m);

/// M is the result of a computation of the reduct. Needs a monotone program
/// (Errc::not_monotone).
[[nodiscard]] bool mt_stable(const Program& p, const Interpretation& m, const Limits& limits = {});

/// Searches every computation of the reduct that stays inside M; works for
/// any program, intended for diagnostics on non-monotone ones.
[[nodiscard]] bool mt_stable_exhaustive(const Program& p, const Interpretation& m, const Limits& limits = {});

/// Replaces `not A` by the complement of A; unlike complement_program it
/// accepts arbitrary heads.
[[nodiscard]] Program complement_naf(const Program& p);

/// Keeps rules with M ⊨ body and turns each into `a :- closures of body`
/// for every a in head_d ∩ M. Needs a program without naf-atoms.
[[nodiscard]] Program nss_reduct(const Program& p, const Interpretation& m);

/// One-step provability for programs with elementary heads:
/// {a : some rule a :- body with X ⊨ body}.
[[nodiscard]] Interpretation horn_step(const Program& p, const Interpretation& x);

/// M is a model and the least fixpoint of horn_step over nss_reduct(P, M)
/// equals M. Naf-atoms are first replaced by their complements unless
/// `complement_naf_atoms` is false, in which case they raise
/// Errc::not_positive.
[[nodiscard]] bool mr_answer_set(const Program& p, const Interpretation& m, bool complement_naf_atoms = true);

/// M is a minimal model of the rules whose body M satisfies. Basic programs
/// only.
[[nodiscard]] bool flp_answer_set(const Program& p, const Interpretation& m, const Limits& limits = {});

struct SolutionPair {
    Interpretation s_plus;
    Interpretation s_minus;
};

/// Every J ⊆ A_d with s_plus ⊆ J and J ∩ s_minus = ∅ is a solution of A.
[[nodiscard]] bool solves(const SolutionPair& pair, const CAtom& a);

/// ⟨I∩M∩A_d, A_d∖M⟩ solves A.
[[nodiscard]] bool pelov_cond_sat(const Interpretation& i, const Interpretation& m, const CAtom& a);

/// Heads of the rules whose positive body is pelov-conditionally satisfied.
/// Needs a basic program without naf-atoms.
[[nodiscard]] Interpretation k_operator(const Program& p, const Interpretation& i, const Interpretation& m);

} // namespace catoms
