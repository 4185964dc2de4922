#pragma once
// Naive reference implementations written straight from the definitions.
// They share only the data model with the library and use set equality
// instead of local bitmasks, so they can serve as independent oracles.

#include "support.h"

#include <algorithm>
#include <map>
#include <optional>

namespace catoms::oracle {

inline bool member(const std::vector<Interpretation>& family, const Interpretation& x) {
    return std::find(family.begin(), family.end(), x) != family.end();
}

inline bool sat(const Interpretation& s, const CAtom& a) { return member(a.solutions(), s & a.domain_set()); }

inline bool body(const Interpretation& s, const Rule& r) {
    for (const auto& a : r.pos) {
        if (!sat(s, a)) { return false; }
    }
    for (const auto& a : r.neg) {
        if (sat(s, a)) { return false; }
    }
    return true;
}

inline bool model(const Interpretation& s, const Program& p) {
    for (const auto& r : p.rules()) {
        if (body(s, r) && !sat(s, r.head)) { return false; }
    }
    return true;
}

/// Every subset of the domain of `a` lying between `low` and `high`.
inline std::vector<Interpretation> between(const Interpretation& low, const Interpretation& high) {
    std::vector<Interpretation> out;
    for (auto& extra : test::all_subsets(high - low)) { out.push_back(low | extra); }
    return out;
}

inline bool cond_sat(const Interpretation& s, const Interpretation& m, const CAtom& a) {
    if (!sat(s, a)) { return false; }
    Interpretation d = a.domain_set();
    if (!(s & d).subset_of(m & d)) { return true; }
    auto sols = a.solutions();
    for (const auto& i : between(s & d, m & d)) {
        if (!member(sols, i)) { return false; }
    }
    return true;
}

/// Answer sets of a basic program, by reduct or by complement, straight
/// from the definitions.
inline bool answer_set(const Program& p, const Interpretation& m, bool by_complement) {
    if (!model(m, p)) { return false; }
    std::vector<Rule> q;
    for (const auto& r : p.rules()) {
        if (by_complement) {
            Rule c{r.head, r.pos, {}};
            for (const auto& a : r.neg) {
                std::vector<Interpretation> sols;
                for (auto& x : test::all_subsets(a.domain_set())) {
                    if (!sat(x, a)) { sols.push_back(x); }
                }
                c.pos.push_back(CAtom::make(a.domain_set(), sols));
            }
            q.push_back(std::move(c));
        }
        else {
            bool drop = false;
            for (const auto& a : r.neg) { drop = drop || sat(m, a); }
            if (!drop) { q.push_back(Rule{r.head, r.pos, {}}); }
        }
    }
    Interpretation t;
    for (;;) {
        Interpretation next;
        for (const auto& r : q) {
            if (!r.head.is_elementary()) { continue; }
            bool fire = true;
            for (const auto& a : r.pos) { fire = fire && cond_sat(t, m, a); }
            if (fire) { next.insert(r.head.domain().front()); }
        }
        if (next == t) { break; }
        t = next;
    }
    return t == m;
}

/// A normal rule in plain form; an empty head marks a constraint.
struct Normal {
    std::optional<AtomId> head;
    std::vector<AtomId> pos, neg;
};

/// Textbook Gelfond-Lifschitz: reduct by M, least model of the positive
/// remainder, compare with M; constraints must not fire in M.
inline bool gl_stable(const std::vector<Normal>& rules, const Interpretation& m) {
    std::vector<Normal> reduct;
    for (const auto& r : rules) {
        bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId b) { return m.contains(b); });
        if (blocked) { continue; }
        if (!r.head) {
            if (std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return m.contains(a); })) { return false; }
            continue;
        }
        reduct.push_back(Normal{r.head, r.pos, {}});
    }
    Interpretation least;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : reduct) {
            if (least.contains(*r.head)) { continue; }
            if (std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return least.contains(a); })) {
                least.insert(*r.head);
                changed = true;
            }
        }
    }
    return least == m;
}

/// Direct reading of the level functionals.
inline std::optional<std::uint32_t> level_of(const CAtom& a, const Interpretation& m,
                                             const std::map<AtomId, std::uint32_t>& l) {
    std::optional<std::uint32_t> best;
    for (const auto& x : a.solutions()) {
        if (!x.subset_of(m) || !cond_sat(x, m, a)) { continue; }
        std::uint32_t h = 0;
        x.for_each([&](AtomId id) { h = std::max(h, l.at(id)); });
        if (!best || h < *best) { best = h; }
    }
    return best;
}

inline bool well_supported(const Program& p, const Interpretation& m, const std::map<AtomId, std::uint32_t>& l,
                           bool strong) {
    if (!model(m, p)) { return false; }
    for (AtomId b : m.members()) {
        bool found = false;
        for (const auto& r : p.rules()) {
            if (!r.head.is_elementary() || r.head.domain().front() != b || !body(m, r)) { continue; }
            bool ok = true;
            for (const auto& a : r.pos) {
                auto lv = level_of(a, m, l);
                ok      = ok && lv && *lv < l.at(b);
            }
            if (strong) {
                for (const auto& a : r.neg) {
                    std::vector<Interpretation> sols;
                    for (auto& x : test::all_subsets(a.domain_set())) {
                        if (!sat(x, a)) { sols.push_back(x); }
                    }
                    auto lv = level_of(CAtom::make(a.domain_set(), sols), m, l);
                    ok      = ok && lv && *lv < l.at(b);
                }
            }
            found = found || ok;
        }
        if (!found) { return false; }
    }
    return true;
}

/// Exhaustive search over every mapping M -> {1..|M|}.
inline bool has_level_mapping(const Program& p, const Interpretation& m, bool strong) {
    std::vector<AtomId> ids = m.members();
    std::size_t n           = ids.size();
    std::vector<std::uint32_t> digits(n, 1);
    for (;;) {
        std::map<AtomId, std::uint32_t> l;
        for (std::size_t i = 0; i < n; ++i) { l[ids[i]] = digits[i]; }
        if (well_supported(p, m, l, strong)) { return true; }
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++digits[i] <= n) { break; }
            digits[i] = 1;
        }
        if (i == n) { return false; }
    }
}

} // namespace catoms::oracle
