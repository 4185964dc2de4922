#include <catoms/diffkit.h>

#include <catoms/altsem.h>
#include <catoms/fixpoint.h>
#include <catoms/general.h>
#include <catoms/parser.h>
#include <catoms/wellsupport.h>

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace catoms {

/////////////////////////////////////////////////////////////////////////////////////////
// Generator
/////////////////////////////////////////////////////////////////////////////////////////
namespace {

// Draws are taken straight from the engine so the stream is identical on
// every standard library.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    bool chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 rng_;
};

CAtom random_catom(Draw& draw, std::size_t atom_count, bool monotone) {
    std::vector<AtomId> pool(atom_count);
    std::iota(pool.begin(), pool.end(), AtomId{0});
    std::size_t k = 1 + draw.below(std::min<std::size_t>(3, atom_count));
    for (std::size_t i = 0; i < k; ++i) { std::swap(pool[i], pool[i + draw.below(atom_count - i)]); }
    std::vector<AtomId> dom(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(dom.begin(), dom.end());
    std::vector<LocalMask> sols;
    for (LocalMask m = 0; m < (LocalMask{1} << k); ++m) {
        if (draw.chance(0.5)) { sols.push_back(m); }
    }
    CAtom a = CAtom::from_masks(std::move(dom), std::move(sols));
    return monotone ? closure(a) : a;
}

CAtom random_body_atom(Draw& draw, const GenConfig& cfg) {
    if (draw.chance(0.5)) { return CAtom::elementary(static_cast<AtomId>(draw.below(cfg.atom_count))); }
    return random_catom(draw, cfg.atom_count, cfg.monotone_only);
}

} // namespace

Program generate(const GenConfig& cfg) {
    if (cfg.atom_count > 6) { fail(Errc::usage, "generated programs use at most 6 atoms"); }
    if (cfg.atom_count == 0) { return Program(); }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < cfg.atom_count; ++i) { names.emplace_back(1, static_cast<char>('a' + i)); }
    auto atoms = std::make_shared<const AtomTable>(std::move(names));
    Draw draw(cfg.seed);
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < cfg.rule_count; ++i) {
        Rule r;
        std::size_t body = draw.below(4);
        for (std::size_t j = 0; j < body; ++j) {
            bool negated = draw.chance(cfg.naf_probability);
            CAtom a      = random_body_atom(draw, cfg);
            auto& list   = negated ? r.neg : r.pos;
            if (std::find(list.begin(), list.end(), a) == list.end()) { list.push_back(std::move(a)); }
        }
        if (cfg.general_heads && draw.chance(0.5)) {
            r.head = random_catom(draw, cfg.atom_count, cfg.monotone_only);
        }
        else if (body > 0 && draw.chance(1.0 / 16)) {
            r.head = CAtom::bottom();
        }
        else {
            r.head = CAtom::elementary(static_cast<AtomId>(draw.below(cfg.atom_count)));
        }
        rules.push_back(std::move(r));
    }
    return Program(std::move(atoms), std::move(rules));
}

/////////////////////////////////////////////////////////////////////////////////////////
// Comparator
/////////////////////////////////////////////////////////////////////////////////////////
std::map<std::string, std::vector<Interpretation>> Comparison::accepted() const {
    std::map<std::string, std::vector<Interpretation>> out;
    for (const auto& row : rows) {
        for (const auto& [name, v] : row.verdicts) {
            if (v.kind == Verdict::Kind::unsupported) { continue; }
            auto& list = out[name];
            if (v.kind == Verdict::Kind::accept) { list.push_back(row.model); }
        }
    }
    return out;
}

namespace {

Verdict verdict(bool accepted) { return Verdict{accepted ? Verdict::Kind::accept : Verdict::Kind::reject, {}}; }
Verdict unsupported(std::string reason) { return Verdict{Verdict::Kind::unsupported, std::move(reason)}; }

struct RowResult {
    SemanticsVerdict row;
    std::vector<Finding> findings;
};

class RowChecker {
public:
    RowChecker(const Program& p, const Limits& limits) : p_(p), limits_(limits) {
        if (p.is_basic()) { complemented_ = complement_program(p); }
    }

    RowResult run(const Interpretation& m) const {
        RowResult out;
        out.row.model = m;
        auto note     = [&](const char* property, std::string detail) {
            out.findings.push_back(Finding{property, m, std::move(detail)});
        };
        bool ours_r = check_answer_set_general(p_, m, Mode::reduct);
        bool ours_c = check_answer_set_general(p_, m, Mode::complement);
        bool mr     = mr_answer_set(p_, m);
        auto& v     = out.row.verdicts;
        v["ours-reduct"]     = verdict(ours_r);
        v["ours-complement"] = verdict(ours_c);
        v["mr"]              = verdict(mr);
        bool mt              = false;
        bool flp             = false;
        if (p_.is_monotone()) {
            mt      = mt_stable(p_, m, limits_);
            v["mt"] = verdict(mt);
        }
        else {
            v["mt"] = unsupported("program is not monotone");
        }
        if (p_.is_basic()) {
            flp      = flp_answer_set(p_, m, limits_);
            v["flp"] = verdict(flp);
        }
        else {
            v["flp"] = unsupported("program has non-elementary heads");
        }

        if (ours_r || ours_c) {
            m.for_each([&](AtomId a) {
                if (!supports(m, p_, a)) { note("answer-set-supported", "answer set does not support " + p_.atoms().name(a)); }
            });
        }
        if (p_.is_positive() && (ours_r || ours_c) && !mr) { note("mr-contains-ours", "answer set rejected by mr"); }
        if (p_.is_monotone() && ours_r != mt) { note("mt-equals-reduct", "ours-reduct and mt disagree"); }
        if (!p_.is_basic()) { return out; }

        if (ours_r != check_answer_set(p_, m, Mode::reduct) || ours_c != check_answer_set(p_, m, Mode::complement)) {
            note("instance-matches-basic", "instance semantics differs from the basic one");
        }
        if (ours_c && !ours_r) { note("complement-within-reduct", "complement answer set is not a reduct answer set"); }
        if (p_.is_naf_monotone() && ours_c != ours_r) { note("modes-agree-naf-monotone", "modes differ on a naf-monotone program"); }
        if (p_.is_positive() && ours_r && !is_minimal_model(m, p_, limits_)) {
            note("positive-answer-set-minimal", "answer set of a positive program is not a minimal model");
        }
        if (p_.is_monotone() && (ours_r != flp || ours_c != flp)) { note("flp-equals-ours-monotone", "ours and flp disagree"); }
        if (p_.is_positive()) {
            std::vector<AtomId> members = m.members();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
                Interpretation r = Interpretation::from_mask(members, mask);
                if (k_operator(p_, r, m) != tp_step(p_, r, m)) {
                    note("k-operator-equals-tp", "k_operator and tp_step differ at R = " + to_string(r, p_.atoms()));
                }
            }
        }
        if (m.size() <= kBruteLevelCap) {
            bool weak   = find_ws(p_, m, WsKind::weak, WsMethod::brute).has_value();
            bool strong = find_ws(p_, m, WsKind::strong, WsMethod::brute).has_value();
            bool comp   = find_ws(complemented_, m, WsKind::strong, WsMethod::brute).has_value();
            if (ours_r != weak) { note("reduct-iff-weak-support", "reduct verdict and weak well-support disagree"); }
            if (ours_c != comp) { note("complement-iff-strong-support", "complement verdict and strong well-support disagree"); }
            if (p_.is_naf_monotone() && weak != strong) { note("weak-strong-agree", "weak and strong witnesses disagree"); }
            if (weak != find_ws(p_, m, WsKind::weak, WsMethod::constructive).has_value() ||
                strong != find_ws(p_, m, WsKind::strong, WsMethod::constructive).has_value()) {
                note("constructive-matches-brute", "constructive and brute level mappings disagree");
            }
        }
        return out;
    }

private:
    const Program& p_;
    const Limits& limits_;
    Program complemented_;
};

} // namespace

Comparison compare(const Program& p, const Limits& limits, unsigned workers) {
    std::vector<Interpretation> candidates =
        sweep_subsets(p.universe(), limits, 1, [](const Interpretation&) { return true; });
    RowChecker checker(p, limits);
    std::vector<RowResult> results(candidates.size());
    parallel_for(candidates.size(), workers, [&](std::size_t i) { results[i] = checker.run(candidates[i]); });
    Comparison out;
    for (auto& r : results) {
        out.rows.push_back(std::move(r.row));
        for (auto& f : r.findings) { out.findings.push_back(std::move(f)); }
    }
    return out;
}

std::string corpus_record(std::uint64_t seed, const Program& p, const Comparison& c) {
    nlohmann::json verdicts = nlohmann::json::object();
    for (const auto& [name, models] : c.accepted()) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& m : models) { list.push_back(atom_names(m, p.atoms())); }
        verdicts[name] = std::move(list);
    }
    nlohmann::json rec{{"seed", seed}, {"program", render(p)}, {"verdicts", std::move(verdicts)}};
    return rec.dump();
}

} // namespace catoms
