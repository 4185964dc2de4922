#include <catoms/wellsupport.h>

#include <catoms/fixpoint.h>

#include <algorithm>
#include <bit>

namespace catoms {

const char* to_string(WsKind k) { return k == WsKind::weak ? "weak" : "strong"; }
const char* to_string(WsMethod m) { return m == WsMethod::brute ? "brute" : "constructive"; }

Interpretation LevelMapping::domain() const {
    Interpretation out;
    for (const auto& [a, lvl] : levels) { out.insert(a); }
    return out;
}

std::uint32_t LevelMapping::at(AtomId a) const {
    auto it = levels.find(a);
    if (it == levels.end()) { fail(Errc::unmapped_atom, "level mapping has no entry for atom #" + std::to_string(a)); }
    return it->second;
}

std::uint32_t h_value(const Interpretation& x, const LevelMapping& l) {
    std::uint32_t out = 0;
    x.for_each([&](AtomId a) { out = std::max(out, l.at(a)); });
    return out;
}

namespace {

/// Solutions X ⊆ M of A with X ⊨_M A, as bitmasks over the positions of
/// M's members.
std::vector<std::uint32_t> witnesses(const CAtom& a, const Interpretation& m, const std::vector<AtomId>& members) {
    std::vector<std::uint32_t> out;
    LocalMask inside = a.project(m);
    for (LocalMask x : a.solution_masks()) {
        if ((x & ~inside) != 0) { continue; }
        Interpretation xs = a.expand(x);
        if (!cond_sat(xs, m, a)) { continue; }
        std::uint32_t bits = 0;
        xs.for_each([&](AtomId id) {
            auto pos = std::lower_bound(members.begin(), members.end(), id) - members.begin();
            bits |= std::uint32_t{1} << pos;
        });
        out.push_back(bits);
    }
    return out;
}

/// Everything about (P, M, kind) that does not depend on the levels,
/// precomputed so that many mappings can be tested cheaply.
class WsChecker {
public:
    WsChecker(const Program& p, const Interpretation& m, WsKind kind) : members_(m.members()) {
        if (!p.is_basic()) { fail(Errc::not_basic, "well-support checks need a basic program"); }
        if (members_.size() > 32) { fail(Errc::cap_exceeded, "well-support checks are limited to 32 atoms"); }
        model_ = is_model(m, p);
        if (!model_) { return; }
        support_.resize(members_.size());
        for (const Rule& r : p.rules()) {
            if (r.is_constraint() || !m.contains(r.head_atom()) || !satisfies_body(m, r)) { continue; }
            std::vector<std::vector<std::uint32_t>> reqs;
            bool usable = true;
            auto add    = [&](const CAtom& a) {
                auto w = witnesses(a, m, members_);
                usable = usable && !w.empty();
                reqs.push_back(std::move(w));
            };
            for (const auto& a : r.pos) { add(a); }
            if (kind == WsKind::strong) {
                for (const auto& a : r.neg) { add(complement(a)); }
            }
            if (!usable) { continue; }
            auto pos = std::lower_bound(members_.begin(), members_.end(), r.head_atom()) - members_.begin();
            support_[static_cast<std::size_t>(pos)].push_back(std::move(reqs));
        }
    }

    [[nodiscard]] const std::vector<AtomId>& members() const { return members_; }

    /// `levels[i]` is the level of members()[i].
    [[nodiscard]] bool check(const std::vector<std::uint32_t>& levels) const {
        if (!model_) { return false; }
        for (std::size_t i = 0; i < members_.size(); ++i) {
            bool ok = std::any_of(support_[i].begin(), support_[i].end(), [&](const auto& reqs) {
                return std::all_of(reqs.begin(), reqs.end(), [&](const auto& ws) {
                    return std::any_of(ws.begin(), ws.end(), [&](std::uint32_t x) { return height(x, levels) < levels[i]; });
                });
            });
            if (!ok) { return false; }
        }
        return true;
    }

private:
    static std::uint32_t height(std::uint32_t x, const std::vector<std::uint32_t>& levels) {
        std::uint32_t h = 0;
        for (; x; x &= x - 1) { h = std::max(h, levels[static_cast<std::size_t>(std::countr_zero(x))]); }
        return h;
    }

    std::vector<AtomId> members_;
    bool model_ = false;
    // Per member: candidate rules, each a list of per-literal witness sets.
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> support_;
};

std::vector<std::uint32_t> as_vector(const LevelMapping& l, const std::vector<AtomId>& members) {
    std::vector<std::uint32_t> out;
    out.reserve(members.size());
    for (AtomId a : members) {
        std::uint32_t v = l.at(a);
        if (v == 0) { fail(Errc::semantic, "levels must be positive"); }
        out.push_back(v);
    }
    return out;
}

LevelMapping as_mapping(const std::vector<std::uint32_t>& levels, const std::vector<AtomId>& members) {
    LevelMapping l;
    for (std::size_t i = 0; i < members.size(); ++i) { l.levels[members[i]] = levels[i]; }
    return l;
}

/// Depth-first over dense rankings (the used levels are exactly 1..k) in
/// lexicographic order. Every witness compresses to a dense one that is
/// pointwise no larger, so the first dense hit is the least witness overall.
bool search_dense(const WsChecker& checker, std::vector<std::uint32_t>& levels, std::vector<std::uint32_t>& used,
                  std::size_t pos, std::uint32_t top) {
    std::size_t n = levels.size();
    if (pos == n) { return checker.check(levels); }
    for (std::uint32_t v = 1; v <= n; ++v) {
        std::uint32_t next_top = std::max(top, v);
        std::size_t distinct   = 0;
        for (std::uint32_t k = 1; k <= next_top; ++k) { distinct += (used[k] > 0 || k == v) ? 1 : 0; }
        if (next_top - distinct > n - pos - 1) { continue; }
        levels[pos] = v;
        ++used[v];
        if (search_dense(checker, levels, used, pos + 1, next_top)) { return true; }
        --used[v];
    }
    return false;
}

} // namespace

std::optional<std::uint32_t> l_value(const CAtom& a, const Interpretation& m, const LevelMapping& l) {
    std::optional<std::uint32_t> best;
    LocalMask inside = a.project(m);
    for (LocalMask x : a.solution_masks()) {
        if ((x & ~inside) != 0) { continue; }
        Interpretation xs = a.expand(x);
        if (!cond_sat(xs, m, a)) { continue; }
        std::uint32_t h = h_value(xs, l);
        if (!best || h < *best) { best = h; }
    }
    return best;
}

bool check_ws(const Program& p, const Interpretation& m, const LevelMapping& l, WsKind kind) {
    if (!p.is_basic()) { fail(Errc::not_basic, "check_ws needs a basic program"); }
    if (l.domain() != m) { fail(Errc::unmapped_atom, "level mapping domain must equal the model"); }
    WsChecker checker(p, m, kind);
    return checker.check(as_vector(l, checker.members()));
}

std::optional<LevelMapping> find_ws(const Program& p, const Interpretation& m, WsKind kind, WsMethod method) {
    if (!p.is_basic()) { fail(Errc::not_basic, "find_ws needs a basic program"); }
    if (method == WsMethod::constructive) {
        Program derived = kind == WsKind::weak ? reduct(p, m) : complement_program(p);
        TpTrace trace   = tp_lfp(derived, m);
        LevelMapping l;
        for (std::size_t k = 1; k < trace.stages.size(); ++k) {
            (trace.stages[k] & m).for_each([&](AtomId a) { l.levels.try_emplace(a, static_cast<std::uint32_t>(k)); });
        }
        if (l.domain() != m || !check_ws(p, m, l, kind)) { return std::nullopt; }
        return l;
    }
    if (m.size() > kBruteLevelCap) {
        fail(Errc::cap_exceeded, "brute level-mapping search is limited to models of at most " +
                                     std::to_string(kBruteLevelCap) + " atoms");
    }
    if (!is_model(m, p)) { return std::nullopt; }
    WsChecker checker(p, m, kind);
    std::vector<std::uint32_t> levels(m.size(), 0);
    std::vector<std::uint32_t> used(m.size() + 1, 0);
    if (!search_dense(checker, levels, used, 0, 0)) { return std::nullopt; }
    return as_mapping(levels, checker.members());
}

} // namespace catoms
