#pragma once
// Data model for propositional programs with abstract constraint atoms:
// interned atoms, interpretations, c-atoms, rules and programs, plus the
// basic semantic checks (satisfaction, models, support) shared by every
// engine in the library.

#include <catoms/error.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace catoms {

using AtomId = std::uint32_t;

/// Hard limit on |domain| of a single c-atom; solution families are kept as
/// explicit 32-bit masks over the local domain.
inline constexpr std::size_t kDomainCap = 24;

/// Interned universe of atom names. Ids are dense and follow ascending
/// lexicographic order of the names, so id order is the canonical order.
class AtomTable {
public:
    AtomTable() = default;
    /// Sorts and deduplicates `names`.
    explicit AtomTable(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] bool empty() const noexcept { return names_.empty(); }
    [[nodiscard]] const std::string& name(AtomId id) const { return names_.at(id); }
    [[nodiscard]] std::optional<AtomId> find(std::string_view name) const;
    [[nodiscard]] std::span<const std::string> names() const noexcept { return names_; }

    friend bool operator==(const AtomTable& a, const AtomTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

using AtomTablePtr = std::shared_ptr<const AtomTable>;

/// A set of atoms with bitset semantics. Equality is extensional.
class Interpretation {
public:
    Interpretation() = default;
    Interpretation(std::initializer_list<AtomId> ids);
    explicit Interpretation(std::span<const AtomId> ids);

    /// Interpretation containing ids[i] for every set bit i of `mask`.
    static Interpretation from_mask(std::span<const AtomId> ids, std::uint64_t mask);

    [[nodiscard]] bool contains(AtomId id) const noexcept;
    void insert(AtomId id);
    void erase(AtomId id);

    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
    [[nodiscard]] bool subset_of(const Interpretation& other) const noexcept;
    [[nodiscard]] bool intersects(const Interpretation& other) const noexcept;
    /// Largest member + 1, or 0 when empty.
    [[nodiscard]] std::size_t extent() const noexcept;

    [[nodiscard]] std::vector<AtomId> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
                f(static_cast<AtomId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
            }
        }
    }

    Interpretation& operator|=(const Interpretation& o);
    Interpretation& operator&=(const Interpretation& o);
    Interpretation& operator-=(const Interpretation& o);
    friend Interpretation operator|(Interpretation a, const Interpretation& b) { return a |= b; }
    friend Interpretation operator&(Interpretation a, const Interpretation& b) { return a &= b; }
    friend Interpretation operator-(Interpretation a, const Interpretation& b) { return a -= b; }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    [[nodiscard]] std::size_t hash() const noexcept;

private:
    friend bool canonical_less(const Interpretation&, const Interpretation&);
    void trim();
    std::vector<std::uint64_t> words_;
};

/// Canonical order on sets: by size, then lexicographically on the ascending
/// member sequence.
bool canonical_less(const Interpretation& a, const Interpretation& b);
void sort_canonical(std::vector<Interpretation>& sets);

/// Renders `{a,b}` using atom names in canonical order.
std::string to_string(const Interpretation& s, const AtomTable& atoms);
std::vector<std::string> atom_names(const Interpretation& s, const AtomTable& atoms);

/// Bit i refers to the i-th element of the c-atom's (ascending) domain.
using LocalMask = std::uint32_t;

/// Canonical order of local masks; agrees with canonical_less on the
/// corresponding sets because domains are ascending.
bool mask_less(LocalMask a, LocalMask b) noexcept;

/// A c-atom (D, C) with an explicit, canonically ordered solution family.
class CAtom {
public:
    /// The empty c-atom (∅, ∅), used as bottom.
    CAtom() = default;

    static CAtom elementary(AtomId a);
    static CAtom bottom() { return CAtom(); }
    /// Builds (domain, solutions); duplicates in either are merged. Throws
    /// Errc::semantic if a solution leaves the domain and Errc::cap_exceeded
    /// when |domain| > kDomainCap.
    static CAtom make(const Interpretation& domain, std::span<const Interpretation> solutions);
    /// `domain` ascending and duplicate-free; masks refer to its positions.
    static CAtom from_masks(std::vector<AtomId> domain, std::vector<LocalMask> masks);

    [[nodiscard]] std::span<const AtomId> domain() const noexcept { return domain_; }
    [[nodiscard]] Interpretation domain_set() const { return Interpretation(std::span<const AtomId>(domain_)); }
    [[nodiscard]] std::span<const LocalMask> solution_masks() const noexcept { return solutions_; }
    [[nodiscard]] std::vector<Interpretation> solutions() const;
    [[nodiscard]] std::size_t solution_count() const noexcept { return solutions_.size(); }
    [[nodiscard]] LocalMask full_mask() const noexcept {
        return domain_.size() == 32 ? ~LocalMask{0} : (LocalMask{1} << domain_.size()) - 1;
    }

    [[nodiscard]] bool has_solution(LocalMask m) const noexcept;
    /// S ∩ domain as a local mask.
    [[nodiscard]] LocalMask project(const Interpretation& s) const noexcept;
    [[nodiscard]] Interpretation expand(LocalMask m) const;

    [[nodiscard]] bool is_elementary() const noexcept;
    [[nodiscard]] bool is_bottom() const noexcept { return domain_.empty() && solutions_.empty(); }
    /// Superset-closed within the domain (equivalently: closed).
    [[nodiscard]] bool is_monotone() const;

    friend bool operator==(const CAtom&, const CAtom&) = default;
    friend auto operator<=>(const CAtom&, const CAtom&) = default;

private:
    std::vector<AtomId> domain_;
    std::vector<LocalMask> solutions_;
};

struct Rule {
    CAtom head;
    std::vector<CAtom> pos;
    std::vector<CAtom> neg;

    [[nodiscard]] bool is_basic() const noexcept { return head.is_elementary() || head.is_bottom(); }
    [[nodiscard]] bool is_positive() const noexcept { return neg.empty(); }
    [[nodiscard]] bool is_constraint() const noexcept { return head.is_bottom(); }
    /// The head atom of a rule with an elementary head.
    [[nodiscard]] AtomId head_atom() const { return head.domain().front(); }

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Immutable program; class flags are computed on construction.
class Program {
public:
    Program();
    /// Throws Errc::semantic when a rule mentions an atom outside `atoms`.
    Program(AtomTablePtr atoms, std::vector<Rule> rules);

    [[nodiscard]] const AtomTable& atoms() const noexcept { return *atoms_; }
    [[nodiscard]] const AtomTablePtr& atom_table() const noexcept { return atoms_; }
    [[nodiscard]] std::span<const Rule> rules() const noexcept { return rules_; }
    [[nodiscard]] std::size_t size() const noexcept { return rules_.size(); }
    [[nodiscard]] Interpretation universe() const;

    [[nodiscard]] bool is_basic() const noexcept { return basic_; }
    [[nodiscard]] bool is_positive() const noexcept { return positive_; }
    [[nodiscard]] bool is_monotone() const noexcept { return monotone_; }
    [[nodiscard]] bool is_naf_monotone() const noexcept { return naf_monotone_; }

    /// Same atom names and identical rule lists.
    friend bool operator==(const Program& a, const Program& b);

private:
    AtomTablePtr atoms_;
    std::vector<Rule> rules_;
    bool basic_        = true;
    bool positive_     = true;
    bool monotone_     = true;
    bool naf_monotone_ = true;
};

/// Budget for exhaustive sweeps: a sweep over k atoms is allowed when
/// 2^k <= candidate_budget.
struct Limits {
    std::uint64_t candidate_budget = std::uint64_t{1} << 20;

    [[nodiscard]] bool allows(std::size_t atom_count) const noexcept {
        return atom_count < 64 && (std::uint64_t{1} << atom_count) <= candidate_budget;
    }
    /// Throws Errc::cap_exceeded unless allows(atom_count).
    void require(std::size_t atom_count, std::string_view what) const;
};

// ---------------------------------------------------------------------------
// Satisfaction and models
// ---------------------------------------------------------------------------
[[nodiscard]] bool satisfies(const Interpretation& s, const CAtom& a);
[[nodiscard]] inline bool satisfies_naf(const Interpretation& s, const CAtom& a) { return !satisfies(s, a); }
[[nodiscard]] bool satisfies_body(const Interpretation& s, const Rule& r);
[[nodiscard]] bool satisfies_rule(const Interpretation& s, const Rule& r);
[[nodiscard]] bool is_model(const Interpretation& s, const Program& p);
/// Throws Errc::cap_exceeded when 2^|s| exceeds the budget.
[[nodiscard]] bool is_minimal_model(const Interpretation& s, const Program& p, const Limits& limits = {});
[[nodiscard]] bool supports(const Interpretation& s, const Program& p, AtomId a);

// ---------------------------------------------------------------------------
// C-atom transformations and classification
// ---------------------------------------------------------------------------
/// (D, 2^D \ C).
[[nodiscard]] CAtom complement(const CAtom& a);
/// (D, {Y ⊆ D : ∃Z ∈ C, Z ⊆ Y}).
[[nodiscard]] CAtom closure(const CAtom& a);

struct CAtomClass {
    bool elementary = false;
    bool monotone   = false;
    bool convex     = false;
    bool closed     = false;
    friend bool operator==(const CAtomClass&, const CAtomClass&) = default;
};
[[nodiscard]] CAtomClass classify(const CAtom& a);

[[nodiscard]] Interpretation hset(const Program& p);

// ---------------------------------------------------------------------------
// Exhaustive candidate sweeps
// ---------------------------------------------------------------------------
/// Every subset M of `atoms` with pred(M), in canonical order. The candidate
/// space is split across `workers` threads; the result does not depend on
/// the worker count. Throws Errc::cap_exceeded per `limits`.
[[nodiscard]] std::vector<Interpretation> sweep_subsets(const Interpretation& atoms, const Limits& limits,
                                                        unsigned workers,
                                                        const std::function<bool(const Interpretation&)>& pred);

/// Runs body(i) for i in [0, n) on up to `workers` threads and rethrows the
/// first exception (by index) raised by any worker.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

} // namespace catoms

template <>
struct std::hash<catoms::Interpretation> {
    std::size_t operator()(const catoms::Interpretation& s) const noexcept { return s.hash(); }
};
