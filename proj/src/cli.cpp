#include <catoms/cli.h>

#include <catoms/altsem.h>
#include <catoms/diffkit.h>
#include <catoms/fixpoint.h>
#include <catoms/general.h>
#include <catoms/parser.h>
#include <catoms/unfold.h>
#include <catoms/wellsupport.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace catoms::cli {
namespace {

using nlohmann::json;

struct Options {
    bool json_out = false;
    std::uint64_t cap = 0;
    unsigned jobs     = 1;

    std::string file;
    std::string mode   = "both";
    std::string model;
    std::string kind   = "weak";
    std::string method = "brute";
    std::string semantics;
    bool minimal    = false;
    bool solve      = false;
    bool intervals  = false;
    bool exhaustive = false;

    GenConfig gen;
    std::size_t count = 100;
    std::string corpus;
};

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) { fail(Errc::usage, "cannot open '" + path + "'"); }
    buf << file.rdbuf();
    return buf.str();
}

std::string fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream s;
    s << std::hex;
    s.width(16);
    s.fill('0');
    s << h;
    return s.str();
}

json set_json(const Interpretation& s, const AtomTable& atoms) { return atom_names(s, atoms); }

json sets_json(const std::vector<Interpretation>& sets, const AtomTable& atoms) {
    json out = json::array();
    for (const auto& s : sets) { out.push_back(set_json(s, atoms)); }
    return out;
}

void print_sets(std::ostream& out, const std::vector<Interpretation>& sets, const AtomTable& atoms) {
    if (sets.empty()) { out << "(none)\n"; }
    for (const auto& s : sets) { out << to_string(s, atoms) << '\n'; }
}

std::vector<Mode> modes_of(const std::string& mode) {
    if (mode == "reduct") { return {Mode::reduct}; }
    if (mode == "complement") { return {Mode::complement}; }
    return {Mode::reduct, Mode::complement};
}

class Runner {
public:
    Runner(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {
        limits_.candidate_budget = opt.cap;
    }

    void run(const std::string& command) {
        command_ = command;
        if (command == "fuzz") {
            fuzz();
            return;
        }
        program_ = parse_program(read_source(opt_.file, in_));
        if (command == "parse") { parse(); }
        else if (command == "models") { models(); }
        else if (command == "answersets") { answersets(); }
        else if (command == "check") { check(); }
        else if (command == "wellsupported") { wellsupported(); }
        else if (command == "unfold") { unfold(); }
        else if (command == "altsem") { altsem(); }
        else if (command == "compare") { comparison(); }
    }

private:
    const AtomTable& atoms() const { return program_.atoms(); }

    Interpretation model_arg() const {
        if (opt_.model.empty()) { fail(Errc::usage, "--model is required"); }
        return parse_atom_list(opt_.model, atoms());
    }

    void emit(json results, bool with_program = true) {
        json env;
        env["command"]      = command_;
        env["program_hash"] = with_program ? json(fnv1a(render(program_))) : json(nullptr);
        env["results"]      = std::move(results);
        env["limits"]       = {{"candidate_budget", limits_.candidate_budget},
                               {"domain_cap", kDomainCap},
                               {"level_cap", kBruteLevelCap}};
        out_ << env.dump(2) << '\n';
    }

    void parse() {
        std::string text = render(program_);
        if (opt_.json_out) {
            std::vector<std::string> names(atoms().names().begin(), atoms().names().end());
            emit({{"program", text},
                  {"atoms", names},
                  {"rules", program_.size()},
                  {"class",
                   {{"basic", program_.is_basic()},
                    {"positive", program_.is_positive()},
                    {"monotone", program_.is_monotone()},
                    {"naf_monotone", program_.is_naf_monotone()}}}});
            return;
        }
        if (!text.empty()) { out_ << text << '\n'; }
    }

    void models() {
        auto found = sweep_subsets(program_.universe(), limits_, opt_.jobs, [&](const Interpretation& s) {
            return opt_.minimal ? is_minimal_model(s, program_, limits_) : is_model(s, program_);
        });
        if (opt_.json_out) {
            emit({{"minimal", opt_.minimal}, {"models", sets_json(found, atoms())}});
            return;
        }
        print_sets(out_, found, atoms());
    }

    std::vector<Interpretation> answer_sets(Mode mode) const {
        return program_.is_basic() ? enumerate_answer_sets(program_, mode, limits_, opt_.jobs)
                                   : enumerate_answer_sets_general(program_, mode, limits_, opt_.jobs);
    }

    void answersets() {
        auto modes = modes_of(opt_.mode);
        json results;
        for (Mode m : modes) {
            auto found = answer_sets(m);
            if (opt_.json_out) {
                results[to_string(m)] = sets_json(found, atoms());
                continue;
            }
            if (modes.size() > 1) { out_ << to_string(m) << ":\n"; }
            print_sets(out_, found, atoms());
        }
        if (opt_.json_out) { emit(std::move(results)); }
    }

    void check() {
        Interpretation m = model_arg();
        auto modes       = modes_of(opt_.mode);
        json results{{"model", set_json(m, atoms())}};
        for (Mode mode : modes) {
            bool accepted = check_answer_set_general(program_, m, mode);
            results[to_string(mode)] = accepted;
            if (!opt_.json_out) {
                if (modes.size() > 1) { out_ << to_string(mode) << ": "; }
                out_ << (accepted ? "accept" : "reject") << '\n';
            }
        }
        if (opt_.json_out) { emit(std::move(results)); }
    }

    void wellsupported() {
        Interpretation m = model_arg();
        WsKind kind      = opt_.kind == "strong" ? WsKind::strong : WsKind::weak;
        WsMethod method  = opt_.method == "constructive" ? WsMethod::constructive : WsMethod::brute;
        auto found       = find_ws(program_, m, kind, method);
        if (opt_.json_out) {
            json levels = nullptr;
            if (found) {
                levels = json::object();
                for (const auto& [a, lvl] : found->levels) { levels[atoms().name(a)] = lvl; }
            }
            emit({{"model", set_json(m, atoms())},
                  {"kind", to_string(kind)},
                  {"method", to_string(method)},
                  {"well_supported", found.has_value()},
                  {"levels", levels}});
            return;
        }
        if (!found) {
            out_ << "not well-supported\n";
            return;
        }
        out_ << "well-supported\n";
        for (const auto& [a, lvl] : found->levels) { out_ << atoms().name(a) << '=' << lvl << '\n'; }
    }

    void unfold() {
        UnfoldStyle style = opt_.intervals ? UnfoldStyle::intervals : UnfoldStyle::solutions;
        Mode mode         = opt_.mode == "reduct" ? Mode::reduct : Mode::complement;
        if (opt_.solve) {
            if (!program_.is_basic()) { fail(Errc::not_basic, "unfold --solve needs a basic program"); }
            auto found = answer_sets_via_unfolding(program_, mode, limits_, opt_.jobs, style);
            if (opt_.json_out) {
                emit({{"mode", to_string(mode)}, {"answer_sets", sets_json(found, atoms())}});
                return;
            }
            print_sets(out_, found, atoms());
            return;
        }
        Program source = program_;
        if (!opt_.model.empty()) {
            Interpretation m = model_arg();
            if (!source.is_basic()) { source = inst_program(source, m); }
            if (!source.is_positive()) {
                source = mode == Mode::reduct ? reduct(source, m) : complement_program(source);
            }
        }
        else if (!source.is_positive()) {
            if (mode == Mode::reduct) { fail(Errc::usage, "unfolding by reduct needs --model"); }
            source = complement_program(source);
        }
        std::string text = render_normal(unfold_program(source, limits_, style));
        if (opt_.json_out) {
            emit({{"program", text}});
            return;
        }
        if (!text.empty()) { out_ << text << '\n'; }
    }

    bool altsem_accepts(const Interpretation& m) const {
        if (opt_.semantics == "mr") { return mr_answer_set(program_, m); }
        if (opt_.semantics == "flp") { return flp_answer_set(program_, m, limits_); }
        return opt_.exhaustive ? mt_stable_exhaustive(program_, m, limits_) : mt_stable(program_, m, limits_);
    }

    void altsem() {
        if (opt_.semantics == "mt" && !opt_.exhaustive && !program_.is_monotone()) {
            fail(Errc::not_monotone, "mt needs a monotone program (use --exhaustive to search computations)");
        }
        if (opt_.semantics == "flp" && !program_.is_basic()) {
            fail(Errc::not_basic, "flp needs a basic program");
        }
        if (!opt_.model.empty()) {
            Interpretation m = model_arg();
            bool accepted    = altsem_accepts(m);
            if (opt_.json_out) {
                emit({{"semantics", opt_.semantics}, {"model", set_json(m, atoms())}, {"accepted", accepted}});
                return;
            }
            out_ << (accepted ? "accept" : "reject") << '\n';
            return;
        }
        auto found = sweep_subsets(hset(program_), limits_, opt_.jobs,
                                   [&](const Interpretation& m) { return altsem_accepts(m); });
        if (opt_.json_out) {
            emit({{"semantics", opt_.semantics}, {"models", sets_json(found, atoms())}});
            return;
        }
        print_sets(out_, found, atoms());
    }

    json findings_json(const std::vector<Finding>& findings, const AtomTable& table) const {
        json out = json::array();
        for (const auto& f : findings) {
            out.push_back({{"property", f.property}, {"model", set_json(f.model, table)}, {"detail", f.detail}});
        }
        return out;
    }

    void comparison() {
        Comparison c  = compare(program_, limits_, opt_.jobs);
        auto accepted = c.accepted();
        std::map<std::string, std::string> unsupported;
        for (const auto& [name, v] : c.rows.front().verdicts) {
            if (v.kind == Verdict::Kind::unsupported) { unsupported[name] = v.reason; }
        }
        if (opt_.json_out) {
            json verdicts = json::object();
            for (const auto& [name, models] : accepted) { verdicts[name] = sets_json(models, atoms()); }
            emit({{"verdicts", verdicts},
                  {"unsupported", unsupported},
                  {"findings", findings_json(c.findings, atoms())}});
            return;
        }
        for (const auto& name : kSemantics) {
            if (auto it = unsupported.find(name); it != unsupported.end()) {
                out_ << name << ": unsupported (" << it->second << ")\n";
                continue;
            }
            out_ << name << ":\n";
            print_sets(out_, accepted[name], atoms());
        }
        out_ << "findings:\n";
        if (c.findings.empty()) { out_ << "(none)\n"; }
        for (const auto& f : c.findings) {
            out_ << f.property << ' ' << to_string(f.model, atoms()) << ": " << f.detail << '\n';
        }
    }

    void fuzz() {
        struct Outcome {
            std::uint64_t seed = 0;
            Program program;
            Comparison comparison;
        };
        std::vector<Outcome> outcomes(opt_.count);
        parallel_for(opt_.count, opt_.jobs, [&](std::size_t i) {
            GenConfig cfg = opt_.gen;
            cfg.seed      = opt_.gen.seed + i;
            Outcome& o    = outcomes[i];
            o.seed        = cfg.seed;
            o.program     = generate(cfg);
            o.comparison  = compare(o.program, limits_, 1);
        });
        std::size_t total = 0;
        json records      = json::array();
        json findings     = json::array();
        std::ofstream corpus;
        if (!opt_.corpus.empty()) {
            corpus.open(opt_.corpus, std::ios::app | std::ios::binary);
            if (!corpus) { fail(Errc::usage, "cannot open corpus file '" + opt_.corpus + "'"); }
        }
        for (const auto& o : outcomes) {
            std::string record = corpus_record(o.seed, o.program, o.comparison);
            if (corpus.is_open()) { corpus << record << '\n'; }
            total += o.comparison.findings.size();
            if (opt_.json_out) {
                records.push_back(json::parse(record));
                for (auto f : findings_json(o.comparison.findings, o.program.atoms())) {
                    f["seed"] = o.seed;
                    findings.push_back(std::move(f));
                }
                continue;
            }
            for (const auto& f : o.comparison.findings) {
                out_ << "seed " << o.seed << ' ' << f.property << ' ' << to_string(f.model, o.program.atoms())
                     << ": " << f.detail << '\n';
            }
        }
        if (opt_.json_out) {
            emit({{"programs", opt_.count}, {"findings", findings}, {"records", records}}, false);
            return;
        }
        out_ << "programs " << opt_.count << ", findings " << total << '\n';
    }

    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
    Limits limits_;
    std::string command_;
    Program program_;
};

int code_for(Errc e) {
    switch (e) {
        case Errc::parse:
        case Errc::usage: return usage_error;
        case Errc::cap_exceeded: return cap_error;
        default: return precondition_error;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    opt.cap = Limits{}.candidate_budget;
    if (const char* env = std::getenv("CATOMS_CAP")) {
        try {
            std::size_t used = 0;
            opt.cap          = std::stoull(env, &used);
            if (used != std::string_view(env).size()) { throw std::invalid_argument(env); }
        }
        catch (const std::exception&) {
            err << "error: CATOMS_CAP must be a non-negative integer\n";
            return usage_error;
        }
    }

    CLI::App app{"Answer sets of logic programs with abstract constraint atoms", "catoms"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json_out, "Emit a JSON envelope instead of text");
    app.add_option("--cap", opt.cap, "Candidate budget for exhaustive sweeps (default 2^20)");
    app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    auto with_file = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("file", opt.file, "Program file, '-' for stdin")->required();
        return sub;
    };
    auto mode_option = [&](CLI::App* sub, std::vector<std::string> choices) {
        sub->add_option("--mode", opt.mode, "Treatment of naf-atoms")->check(CLI::IsMember(std::move(choices)));
    };

    auto* parse = with_file(app.add_subcommand("parse", "Print the canonical form of a program"));
    auto* models = with_file(app.add_subcommand("models", "List all models"));
    models->add_flag("--minimal", opt.minimal, "Only minimal models");
    auto* answersets = with_file(app.add_subcommand("answersets", "List answer sets"));
    mode_option(answersets, {"reduct", "complement", "both"});
    auto* check = with_file(app.add_subcommand("check", "Decide whether a set is an answer set"));
    check->add_option("--model", opt.model, "Comma-separated atoms")->required();
    mode_option(check, {"reduct", "complement", "both"});
    auto* ws = with_file(app.add_subcommand("wellsupported", "Search a level mapping"));
    ws->add_option("--model", opt.model, "Comma-separated atoms")->required();
    ws->add_option("--kind", opt.kind)->check(CLI::IsMember({"weak", "strong"}));
    ws->add_option("--method", opt.method)->check(CLI::IsMember({"brute", "constructive"}));
    auto* unfold = with_file(app.add_subcommand("unfold", "Translate into a normal logic program"));
    unfold->add_flag("--solve", opt.solve, "Print answer sets computed through the unfolding");
    unfold->add_flag("--intervals", opt.intervals, "Unfold by maximal solution intervals");
    unfold->add_option("--model", opt.model, "Candidate model for reduct or instance");
    mode_option(unfold, {"reduct", "complement"});
    auto* altsem = with_file(app.add_subcommand("altsem", "Evaluate a competing semantics"));
    altsem->add_option("--semantics", opt.semantics)->required()->check(CLI::IsMember({"mr", "mt", "flp"}));
    altsem->add_option("--model", opt.model, "Comma-separated atoms");
    altsem->add_flag("--exhaustive", opt.exhaustive, "mt: search all computations");
    auto* cmp = with_file(app.add_subcommand("compare", "Evaluate every semantics on every candidate"));
    auto* fuzz = app.add_subcommand("fuzz", "Compare semantics on random programs");
    fuzz->fallthrough();
    fuzz->add_option("--atoms", opt.gen.atom_count)->check(CLI::Range(0, 6));
    fuzz->add_option("--rules", opt.gen.rule_count);
    fuzz->add_option("--count", opt.count);
    fuzz->add_option("--seed", opt.gen.seed);
    fuzz->add_flag("--monotone", opt.gen.monotone_only, "Only monotone c-atoms");
    fuzz->add_flag("--naf{0.3}", opt.gen.naf_probability, "Probability of a naf literal (0.3 when given bare)");
    fuzz->add_flag("--general", opt.gen.general_heads, "Allow non-elementary heads");
    fuzz->add_option("--corpus", opt.corpus, "Append one JSON record per program to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }

    std::string command;
    for (auto* sub : {parse, models, answersets, check, ws, unfold, altsem, cmp, fuzz}) {
        if (sub->parsed()) { command = sub->get_name(); }
    }
    if (opt.mode == "both" && unfold->parsed()) { opt.mode = "complement"; }

    try {
        Runner runner(opt, in, out);
        runner.run(command);
        return ok;
    }
    catch (const ParseError& e) {
        err << opt.file << ':' << e.span().line << ':' << e.span().column << ": error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return code_for(e.code());
    }
}

} // namespace catoms::cli
