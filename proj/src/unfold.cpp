#include <catoms/unfold.h>

#include <algorithm>
#include <tuple>

namespace catoms {

namespace {

bool body_less(const std::vector<AtomId>& a, const std::vector<AtomId>& b) {
    if (a.size() != b.size()) { return a.size() < b.size(); }
    return a < b;
}

std::vector<AtomId> merge(const std::vector<AtomId>& a, const std::vector<AtomId>& b) {
    std::vector<AtomId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Unfolding conjunction(const CAtom& a, LocalMask pos, LocalMask neg) {
    return Unfolding{false, a.expand(pos).members(), a.expand(neg).members()};
}

bool within(LocalMask sub, LocalMask super) { return (sub & ~super) == 0; }

} // namespace

bool canonical_less(const NormalRule& a, const NormalRule& b) {
    if (a.head.has_value() != b.head.has_value()) { return a.head.has_value(); }
    if (a.head != b.head) { return *a.head < *b.head; }
    if (a.pos != b.pos) { return body_less(a.pos, b.pos); }
    return body_less(a.neg, b.neg);
}

std::vector<Unfolding> unfold_catom(const CAtom& a) {
    if (a.solution_count() == 0) { return {Unfolding{true, {}, {}}}; }
    std::vector<Unfolding> out;
    for (LocalMask x : a.solution_masks()) { out.push_back(conjunction(a, x, a.full_mask() & ~x)); }
    return out;
}

std::vector<Unfolding> unfold_catom_intervals(const CAtom& a) {
    if (a.solution_count() == 0) { return {Unfolding{true, {}, {}}}; }
    constexpr std::size_t kMaxSolutions = 4096;
    if (a.solution_count() > kMaxSolutions) {
        fail(Errc::cap_exceeded, "interval unfolding is limited to c-atoms with at most 4096 solutions");
    }
    auto sols = a.solution_masks();
    std::vector<std::pair<LocalMask, LocalMask>> intervals;
    for (LocalMask low : sols) {
        for (LocalMask high : sols) {
            if (!within(low, high)) { continue; }
            LocalMask free = high & ~low;
            bool full      = true;
            for (LocalMask sub = free; full; sub = (sub - 1) & free) {
                full = a.has_solution(low | sub);
                if (sub == 0) { break; }
            }
            if (full) { intervals.emplace_back(low, high); }
        }
    }
    std::vector<Unfolding> out;
    for (auto [low, high] : intervals) {
        bool maximal = std::none_of(intervals.begin(), intervals.end(), [&](const auto& o) {
            return o != std::pair{low, high} && within(o.first, low) && within(high, o.second);
        });
        if (maximal) { out.push_back(conjunction(a, low, a.full_mask() & ~high)); }
    }
    return out;
}

NormalProgram unfold_program(const Program& p, const Limits& limits, UnfoldStyle style) {
    if (!p.is_basic() || !p.is_positive()) {
        fail(Errc::not_basic_positive, "unfold_program needs a basic program without naf-atoms");
    }
    NormalProgram out{p.atom_table(), {}};
    for (const Rule& r : p.rules()) {
        std::vector<std::vector<Unfolding>> parts;
        bool dead          = false;
        std::uint64_t size = 1;
        for (const auto& a : r.pos) {
            parts.push_back(style == UnfoldStyle::solutions ? unfold_catom(a) : unfold_catom_intervals(a));
            dead = dead || parts.back().front().bottom;
            size *= parts.back().size();
            if (size > limits.candidate_budget) {
                fail(Errc::cap_exceeded, "unfolding a rule would produce more than " +
                                             std::to_string(limits.candidate_budget) + " rules");
            }
        }
        if (dead) { continue; }
        std::optional<AtomId> head;
        if (!r.is_constraint()) { head = r.head_atom(); }
        // Odometer over the per-literal choices.
        std::vector<std::size_t> pick(parts.size(), 0);
        for (;;) {
            NormalRule nr{head, {}, {}};
            for (std::size_t i = 0; i < parts.size(); ++i) {
                nr.pos = merge(nr.pos, parts[i][pick[i]].pos);
                nr.neg = merge(nr.neg, parts[i][pick[i]].neg);
            }
            out.rules.push_back(std::move(nr));
            std::size_t i = 0;
            for (; i < parts.size(); ++i) {
                if (++pick[i] < parts[i].size()) { break; }
                pick[i] = 0;
            }
            if (i == parts.size()) { break; }
        }
    }
    std::sort(out.rules.begin(), out.rules.end(),
              [](const NormalRule& a, const NormalRule& b) { return canonical_less(a, b); });
    out.rules.erase(std::unique(out.rules.begin(), out.rules.end()), out.rules.end());
    return out;
}

Program catom_embed(const NormalProgram& n) {
    std::vector<Rule> rules;
    rules.reserve(n.rules.size());
    for (const auto& nr : n.rules) {
        Rule r;
        if (nr.head) { r.head = CAtom::elementary(*nr.head); }
        for (AtomId a : nr.pos) { r.pos.push_back(CAtom::elementary(a)); }
        for (AtomId a : nr.neg) { r.neg.push_back(CAtom::elementary(a)); }
        rules.push_back(std::move(r));
    }
    return Program(n.atoms, std::move(rules));
}

NormalProgram gl_reduct(const NormalProgram& n, const Interpretation& m) {
    NormalProgram out{n.atoms, {}};
    for (const auto& nr : n.rules) {
        if (std::none_of(nr.neg.begin(), nr.neg.end(), [&](AtomId b) { return m.contains(b); })) {
            out.rules.push_back(NormalRule{nr.head, nr.pos, {}});
        }
    }
    return out;
}

bool is_gl_stable(const NormalProgram& n, const Interpretation& m) {
    auto blocked = [&](const NormalRule& nr, const Interpretation& i) {
        return std::any_of(nr.neg.begin(), nr.neg.end(), [&](AtomId b) { return m.contains(b); }) ||
               std::any_of(nr.pos.begin(), nr.pos.end(), [&](AtomId a) { return !i.contains(a); });
    };
    for (const auto& nr : n.rules) {
        if (!nr.head && !blocked(nr, m)) { return false; }
    }
    Interpretation i;
    for (;;) {
        Interpretation next;
        for (const auto& nr : n.rules) {
            if (nr.head && !blocked(nr, i)) { next.insert(*nr.head); }
        }
        if (next == i) { break; }
        i = std::move(next);
    }
    return i == m;
}

std::vector<Interpretation> gl_stable_models(const NormalProgram& n, const Limits& limits, unsigned workers) {
    Interpretation heads;
    for (const auto& nr : n.rules) {
        if (nr.head) { heads.insert(*nr.head); }
    }
    return sweep_subsets(heads, limits, workers, [&](const Interpretation& m) { return is_gl_stable(n, m); });
}

std::string render_normal(const NormalProgram& n) {
    std::string out;
    for (const auto& nr : n.rules) {
        if (!out.empty()) { out += '\n'; }
        std::string body;
        for (AtomId a : nr.pos) { body += (body.empty() ? "" : ", ") + n.atoms->name(a); }
        for (AtomId a : nr.neg) { body += (body.empty() ? "not " : ", not ") + n.atoms->name(a); }
        if (nr.head) {
            out += n.atoms->name(*nr.head) + (body.empty() ? "." : " :- " + body + ".");
        }
        else {
            out += ":- " + (body.empty() ? std::string("#true") : body) + ".";
        }
    }
    return out;
}

std::vector<Interpretation> answer_sets_via_unfolding(const Program& p, Mode mode, const Limits& limits,
                                                      unsigned workers, UnfoldStyle style) {
    if (!p.is_basic()) { fail(Errc::not_basic, "answer_sets_via_unfolding needs a basic program"); }
    if (mode == Mode::complement) {
        NormalProgram n = unfold_program(complement_program(p), limits, style);
        return sweep_subsets(hset(p), limits, workers, [&](const Interpretation& m) { return is_gl_stable(n, m); });
    }
    return sweep_subsets(hset(p), limits, workers, [&](const Interpretation& m) {
        return is_gl_stable(unfold_program(reduct(p, m), limits, style), m);
    });
}

} // namespace catoms
