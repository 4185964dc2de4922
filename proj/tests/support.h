#pragma once

#include <catoms/core.h>
#include <catoms/parser.h>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace catoms::test {

inline Program load(const std::string& name) {
    std::ifstream in(std::string(CATOMS_PROGRAMS_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str());
}

inline Interpretation set_of(const Program& p, std::string_view atoms) { return parse_atom_list(atoms, p.atoms()); }

inline std::vector<Interpretation> sets_of(const Program& p, std::initializer_list<std::string_view> lists) {
    std::vector<Interpretation> out;
    for (auto l : lists) { out.push_back(set_of(p, l)); }
    return out;
}

inline std::vector<std::string> show(const std::vector<Interpretation>& sets, const Program& p) {
    std::vector<std::string> out;
    for (const auto& s : sets) { out.push_back(to_string(s, p.atoms())); }
    return out;
}

/// Every subset of `atoms`, in no particular order.
inline std::vector<Interpretation> all_subsets(const Interpretation& atoms) {
    std::vector<AtomId> ids = atoms.members();
    std::vector<Interpretation> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ids.size()); ++m) {
        out.push_back(Interpretation::from_mask(ids, m));
    }
    return out;
}

} // namespace catoms::test
