#include <catoms/fixpoint.h>

#include <algorithm>
#include <bit>

namespace catoms {

const char* to_string(Mode m) { return m == Mode::reduct ? "reduct" : "complement"; }

namespace {

void require_basic(const Program& p, const char* what) {
    if (!p.is_basic()) { fail(Errc::not_basic, std::string(what) + " needs a basic program (elementary or bot heads)"); }
}

void require_basic_positive(const Program& p, const char* what) {
    if (!p.is_basic() || !p.is_positive()) {
        fail(Errc::not_basic_positive, std::string(what) + " needs a basic program without naf-atoms");
    }
}

} // namespace

bool cond_sat(const Interpretation& s, const Interpretation& m, const CAtom& a) {
    LocalMask low  = a.project(s);
    LocalMask high = a.project(m);
    if (!a.has_solution(low)) { return false; }
    if ((low & ~high) != 0) { return true; }
    LocalMask free = high & ~low;
    if (a.solution_count() < (std::size_t{1} << std::popcount(free))) { return false; }
    // Walk every submask of `free`, including 0 and `free` itself.
    for (LocalMask sub = free;; sub = (sub - 1) & free) {
        if (!a.has_solution(low | sub)) { return false; }
        if (sub == 0) { break; }
    }
    return true;
}

Interpretation tp_step(const Program& p, const Interpretation& s, const Interpretation& m) {
    require_basic_positive(p, "tp_step");
    Interpretation out;
    for (const Rule& r : p.rules()) {
        if (r.is_constraint() || out.contains(r.head_atom())) { continue; }
        if (std::all_of(r.pos.begin(), r.pos.end(), [&](const CAtom& a) { return cond_sat(s, m, a); })) {
            out.insert(r.head_atom());
        }
    }
    return out;
}

TpTrace tp_lfp(const Program& p, const Interpretation& m) {
    require_basic_positive(p, "tp_lfp");
    TpTrace trace;
    trace.stages.emplace_back();
    for (;;) {
        Interpretation next = tp_step(p, trace.stages.back(), m);
        if (next == trace.stages.back()) { break; }
        if (std::find(trace.stages.begin(), trace.stages.end(), next) != trace.stages.end()) {
            trace.converged = false;
            break;
        }
        trace.stages.push_back(std::move(next));
    }
    trace.converged_at = trace.stages.size() - 1;
    return trace;
}

Program complement_program(const Program& p) {
    require_basic(p, "complement_program");
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

Program reduct(const Program& p, const Interpretation& m) {
    require_basic(p, "reduct");
    std::vector<Rule> rules;
    for (const Rule& r : p.rules()) {
        if (std::any_of(r.neg.begin(), r.neg.end(), [&](const CAtom& a) { return satisfies(m, a); })) { continue; }
        rules.push_back(Rule{r.head, r.pos, {}});
    }
    return Program(p.atom_table(), std::move(rules));
}

bool check_answer_set(const Program& p, const Interpretation& m, Mode mode) {
    require_basic(p, "check_answer_set");
    if (!is_model(m, p)) { return false; }
    Program q = mode == Mode::reduct ? reduct(p, m) : complement_program(p);
    TpTrace t = tp_lfp(q, m);
    return t.converged && t.result() == m;
}

std::vector<Interpretation> enumerate_answer_sets(const Program& p, Mode mode, const Limits& limits,
                                                  unsigned workers) {
    require_basic(p, "enumerate_answer_sets");
    // The derived program is fixed in complement mode; build it once.
    if (mode == Mode::complement) {
        Program q = complement_program(p);
        return sweep_subsets(hset(p), limits, workers, [&](const Interpretation& m) {
            if (!is_model(m, p)) { return false; }
            TpTrace t = tp_lfp(q, m);
            return t.converged && t.result() == m;
        });
    }
    return sweep_subsets(hset(p), limits, workers,
                         [&](const Interpretation& m) { return check_answer_set(p, m, mode); });
}

} // namespace catoms
