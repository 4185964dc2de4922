#include <catoms/altsem.h>

#include <catoms/fixpoint.h>

#include <algorithm>
#include <unordered_set>

namespace catoms {

std::vector<Rule> applicable(const Program& p, const Interpretation& s) {
    std::vector<Rule> out;
    for (const Rule& r : p.rules()) {
        if (satisfies_body(s, r)) { out.push_back(r); }
    }
    return out;
}

namespace {

Interpretation head_union(const std::vector<Rule>& rules) {
    Interpretation out;
    for (const Rule& r : rules) { out |= r.head.domain_set(); }
    return out;
}

bool heads_hold(const std::vector<Rule>& rules, const Interpretation& s) {
    return std::all_of(rules.begin(), rules.end(), [&](const Rule& r) { return satisfies(s, r.head); });
}

} // namespace

bool in_tnd(const Program& p, const Interpretation& s, const Interpretation& next) {
    std::vector<Rule> app = applicable(p, s);
    return next.subset_of(head_union(app)) && heads_hold(app, next);
}

std::vector<Interpretation> tnd(const Program& p, const Interpretation& s, const Limits& limits) {
    std::vector<Rule> app = applicable(p, s);
    return sweep_subsets(head_union(app), limits, 1, [&](const Interpretation& x) { return heads_hold(app, x); });
}

Interpretation Computation::result() const {
    Interpretation out;
    for (const auto& x : steps) { out |= x; }
    return out;
}

bool is_computation(const Program& p, const Computation& c) {
    if (c.steps.empty() || !c.steps.front().empty()) { return false; }
    for (std::size_t i = 0; i + 1 < c.steps.size(); ++i) {
        if (!c.steps[i].subset_of(c.steps[i + 1]) || !in_tnd(p, c.steps[i], c.steps[i + 1])) { return false; }
    }
    return in_tnd(p, c.steps.back(), c.steps.back());
}

Computation canonical_computation(const Program& p, const Interpretation& m) {
    Computation c;
    c.steps.emplace_back();
    for (;;) {
        Interpretation next = head_union(applicable(p, c.steps.back())) & m;
        if (next == c.steps.back()) { break; }
        if (std::find(c.steps.begin(), c.steps.end(), next) != c.steps.end()) { break; }
        c.steps.push_back(std::move(next));
    }
    return c;
}

Program mt_reduct(const Program& p, const Interpretation& m) {
    std::vector<Rule> rules;
    for (const Rule& r : p.rules()) {
        if (std::any_of(r.neg.begin(), r.neg.end(), [&](const CAtom& a) { return satisfies(m, a); })) { continue; }
        rules.push_back(Rule{r.head, r.pos, {}});
    }
    return Program(p.atom_table(), std::move(rules));
}

bool mt_stable(const Program& p, const Interpretation& m, const Limits&) {
    if (!p.is_monotone()) { fail(Errc::not_monotone, "mt_stable needs a program whose c-atoms are all monotone"); }
    Program q     = mt_reduct(p, m);
    Computation c = canonical_computation(q, m);
    return c.result() == m && is_computation(q, c);
}

bool mt_stable_exhaustive(const Program& p, const Interpretation& m, const Limits& limits) {
    Program q = mt_reduct(p, m);
    std::unordered_set<Interpretation> seen;
    std::vector<Interpretation> stack{Interpretation{}};
    while (!stack.empty()) {
        Interpretation x = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(x).second) { continue; }
        if (x == m && in_tnd(q, m, m)) { return true; }
        std::vector<Rule> app = applicable(q, x);
        Interpretation reach  = head_union(app) & m;
        if (!x.subset_of(reach)) { continue; }
        for (auto& y : sweep_subsets(reach - x, limits, 1, [](const Interpretation&) { return true; })) {
            Interpretation next = x | y;
            if (heads_hold(app, next) && !seen.contains(next)) { stack.push_back(std::move(next)); }
        }
    }
    return false;
}

Program complement_naf(const Program& p) {
    std::vector<Rule> rules;
    rules.reserve(p.size());
    for (const Rule& r : p.rules()) {
        Rule q{r.head, r.pos, {}};
        for (const auto& a : r.neg) {
            CAtom c = complement(a);
            if (std::find(q.pos.begin(), q.pos.end(), c) == q.pos.end()) { q.pos.push_back(std::move(c)); }
        }
        rules.push_back(std::move(q));
    }
    return Program(p.atom_table(), std::move(rules));
}

Program nss_reduct(const Program& p, const Interpretation& m) {
    if (!p.is_positive()) { fail(Errc::not_positive, "nss_reduct needs a program without naf-atoms"); }
    std::vector<Rule> rules;
    for (const Rule& r : p.rules()) {
        if (!satisfies_body(m, r)) { continue; }
        std::vector<CAtom> body;
        for (const auto& a : r.pos) {
            CAtom c = closure(a);
            if (std::find(body.begin(), body.end(), c) == body.end()) { body.push_back(std::move(c)); }
        }
        (r.head.domain_set() & m).for_each([&](AtomId a) {
            Rule q{CAtom::elementary(a), body, {}};
            if (std::find(rules.begin(), rules.end(), q) == rules.end()) { rules.push_back(std::move(q)); }
        });
    }
    Program out(p.atom_table(), std::move(rules));
    if (!out.is_basic() || !out.is_monotone()) {
        fail(Errc::unsupported, "nss_reduct produced a non-Horn rule");
    }
    return out;
}

Interpretation horn_step(const Program& p, const Interpretation& x) {
    Interpretation out;
    for (const Rule& r : p.rules()) {
        if (!r.is_constraint() && satisfies_body(x, r)) { out.insert(r.head_atom()); }
    }
    return out;
}

bool mr_answer_set(const Program& p, const Interpretation& m, bool complement_naf_atoms) {
    if (!p.is_positive() && !complement_naf_atoms) {
        fail(Errc::not_positive, "mr_answer_set needs a program without naf-atoms");
    }
    Program q = p.is_positive() ? p : complement_naf(p);
    if (!is_model(m, q)) { return false; }
    Program horn = nss_reduct(q, m);
    Interpretation x;
    for (;;) {
        Interpretation next = horn_step(horn, x);
        if (next == x) { break; }
        x = std::move(next);
    }
    return x == m;
}

bool flp_answer_set(const Program& p, const Interpretation& m, const Limits& limits) {
    if (!p.is_basic()) { fail(Errc::not_basic, "flp_answer_set needs a basic program"); }
    std::vector<Rule> kept = applicable(p, m);
    return is_minimal_model(m, Program(p.atom_table(), std::move(kept)), limits);
}

bool solves(const SolutionPair& pair, const CAtom& a) {
    LocalMask plus  = a.project(pair.s_plus);
    LocalMask minus = a.project(pair.s_minus);
    if ((plus & minus) != 0) { return false; }
    LocalMask free = a.full_mask() & ~plus & ~minus;
    for (LocalMask sub = free;; sub = (sub - 1) & free) {
        if (!a.has_solution(plus | sub)) { return false; }
        if (sub == 0) { break; }
    }
    return true;
}

bool pelov_cond_sat(const Interpretation& i, const Interpretation& m, const CAtom& a) {
    Interpretation dom = a.domain_set();
    return solves(SolutionPair{i & m & dom, dom - m}, a);
}

Interpretation k_operator(const Program& p, const Interpretation& i, const Interpretation& m) {
    if (!p.is_basic() || !p.is_positive()) {
        fail(Errc::not_basic_positive, "k_operator needs a basic program without naf-atoms");
    }
    Interpretation out;
    for (const Rule& r : p.rules()) {
        if (r.is_constraint()) { continue; }
        if (std::all_of(r.pos.begin(), r.pos.end(), [&](const CAtom& a) { return pelov_cond_sat(i, m, a); })) {
            out.insert(r.head_atom());
        }
    }
    return out;
}

} // namespace catoms
