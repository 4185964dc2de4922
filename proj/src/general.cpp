#include <catoms/general.h>

#include <algorithm>

namespace catoms {

std::vector<Rule> inst_rule(const Rule& r, const Interpretation& m) {
    std::vector<Rule> out;
    LocalMask inside = r.head.project(m);
    if (!r.head.has_solution(inside)) { return out; }
    for (AtomId b : r.head.expand(inside).members()) { out.push_back(Rule{CAtom::elementary(b), r.pos, r.neg}); }
    return out;
}

Program inst_program(const Program& p, const Interpretation& m) {
    std::vector<Rule> rules;
    for (const Rule& r : p.rules()) {
        for (Rule& q : inst_rule(r, m)) {
            if (std::find(rules.begin(), rules.end(), q) == rules.end()) { rules.push_back(std::move(q)); }
        }
    }
    return Program(p.atom_table(), std::move(rules));
}

bool check_answer_set_general(const Program& p, const Interpretation& m, Mode mode) {
    return is_model(m, p) && check_answer_set(inst_program(p, m), m, mode);
}

std::vector<Interpretation> enumerate_answer_sets_general(const Program& p, Mode mode, const Limits& limits,
                                                          unsigned workers) {
    return sweep_subsets(hset(p), limits, workers,
                         [&](const Interpretation& m) { return check_answer_set_general(p, m, mode); });
}

} // namespace catoms
