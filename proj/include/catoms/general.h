#pragma once
// Answer sets of programs with arbitrary c-atom heads, through the
// instance of a program with respect to a candidate model.

#include <catoms/fixpoint.h>

#include <vector>

namespace catoms {

/// One rule `b :- body` per b in M∩D when M∩D is a solution of the head
/// (D, C); nothing otherwise. Bottom-headed rules always vanish.
[[nodiscard]] std::vector<Rule> inst_rule(const Rule& r, const Interpretation& m);

/// Union of inst_rule over P with duplicates removed, in first-seen order.
[[nodiscard]] Program inst_program(const Program& p, const Interpretation& m);

[[nodiscard]] bool check_answer_set_general(const Program& p, const Interpretation& m, Mode mode);

[[nodiscard]] std::vector<Interpretation> enumerate_answer_sets_general(const Program& p, Mode mode,
                                                                        const Limits& limits = {},
                                                                        unsigned workers     = 1);

} // namespace catoms
