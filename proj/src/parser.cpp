#include <catoms/parser.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>

namespace catoms {
namespace {

// Aggregate arithmetic on 64-bit weights cannot overflow in 128 bits.
__extension__ using Wide = __int128;

/////////////////////////////////////////////////////////////////////////////////////////
// Lexer
/////////////////////////////////////////////////////////////////////////////////////////
enum class Tok { end, ident, integer, punct };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::int64_t value = 0;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    [[nodiscard]] const Token& peek() const { return cur_; }
    Token next() {
        Token t = cur_;
        advance();
        return t;
    }
    [[nodiscard]] bool at(std::string_view punct) const { return cur_.kind == Tok::punct && cur_.text == punct; }
    [[nodiscard]] bool at_ident(std::string_view word) const { return cur_.kind == Tok::ident && cur_.text == word; }
    bool accept(std::string_view punct) {
        if (!at(punct)) { return false; }
        advance();
        return true;
    }
    Token expect(std::string_view punct) {
        if (!at(punct)) { error(cur_.span, "expected '" + std::string(punct) + "' but found " + describe(cur_)); }
        return next();
    }
    [[noreturn]] void error(SourceSpan span, const std::string& msg) const { throw ParseError(span, msg); }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Tok::end: return "end of input";
            case Tok::integer: return "integer '" + t.text + "'";
            case Tok::ident: return "identifier '" + t.text + "'";
            case Tok::punct: return "'" + t.text + "'";
        }
        return "token";
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') { bump(); }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            }
            else {
                break;
            }
        }
    }
    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }
    void advance() {
        skip_space();
        cur_      = Token{};
        cur_.span = SourceSpan{line_, col_, pos_, pos_};
        if (pos_ >= text_.size()) { return; }
        char c = text_[pos_];
        auto finish = [&](Tok kind) {
            cur_.kind     = kind;
            cur_.span.end = pos_;
            cur_.text     = std::string(text_.substr(cur_.span.begin, pos_ - cur_.span.begin));
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                bump();
            }
            finish(Tok::ident);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            bump();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) { bump(); }
            finish(Tok::integer);
            const char* digits = cur_.text.data() + (c == '+' ? 1 : 0);
            auto [p, ec]       = std::from_chars(digits, cur_.text.data() + cur_.text.size(), cur_.value);
            if (ec != std::errc{} || p != cur_.text.data() + cur_.text.size()) {
                throw ParseError(cur_.span, "integer out of range: " + cur_.text);
            }
            return;
        }
        static constexpr std::string_view two[] = {":-", "<=", ">=", "==", "!="};
        for (auto op : two) {
            if (text_.substr(pos_, 2) == op) {
                bump();
                bump();
                finish(Tok::punct);
                return;
            }
        }
        if (std::string_view(".,(){}<>=").find(c) != std::string_view::npos) {
            bump();
            finish(Tok::punct);
            return;
        }
        bump();
        cur_.span.end = pos_;
        throw ParseError(cur_.span, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_  = 0;
    std::size_t line_ = 1;
    std::size_t col_  = 1;
    Token cur_;
};

SourceSpan join(SourceSpan a, const SourceSpan& b) {
    a.end = b.end;
    return a;
}

bool is_keyword(std::string_view w) {
    return w == "not" || w == "bot" || w == "count" || w == "sum" || w == "avg" || w == "min" || w == "max";
}

/////////////////////////////////////////////////////////////////////////////////////////
// Syntax tree
/////////////////////////////////////////////////////////////////////////////////////////
struct NamedAtom {
    std::string name;
    SourceSpan span;
};

struct SetExpr {
    std::vector<NamedAtom> atoms;
    SourceSpan span;
};

struct CAtomExpr {
    enum class Kind { atom, bottom, explicit_set, aggregate } kind = Kind::atom;
    NamedAtom atom;
    SetExpr domain;
    std::vector<SetExpr> solutions;
    AggregateSugar sugar;
    std::vector<SourceSpan> element_spans;
    SourceSpan span;
};

struct LitExpr {
    bool negated = false;
    CAtomExpr atom;
};

struct RuleExpr {
    CAtomExpr head;
    std::vector<LitExpr> body;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    std::vector<RuleExpr> program() {
        std::vector<RuleExpr> rules;
        while (lex_.peek().kind != Tok::end) {
            rules.push_back(rule());
            lex_.expect(".");
        }
        return rules;
    }

    std::vector<NamedAtom> atom_list() {
        std::vector<NamedAtom> out;
        bool braced = lex_.accept("{");
        if (!(braced && lex_.at("}")) && lex_.peek().kind != Tok::end) {
            do { out.push_back(atom()); } while (lex_.accept(","));
        }
        if (braced) { lex_.expect("}"); }
        if (lex_.peek().kind != Tok::end) { lex_.error(lex_.peek().span, "unexpected " + Lexer::describe(lex_.peek())); }
        return out;
    }

private:
    RuleExpr rule() {
        RuleExpr r;
        if (lex_.at(":-")) {
            r.head.kind = CAtomExpr::Kind::bottom;
            r.head.span = lex_.peek().span;
        }
        else {
            r.head = catom();
        }
        if (lex_.accept(":-")) {
            do { r.body.push_back(literal()); } while (lex_.accept(","));
        }
        return r;
    }

    LitExpr literal() {
        LitExpr l;
        if (lex_.at_ident("not")) {
            lex_.next();
            l.negated = true;
        }
        l.atom = catom();
        return l;
    }

    NamedAtom atom() {
        const Token& t = lex_.peek();
        if (t.kind != Tok::ident) { lex_.error(t.span, "expected atom but found " + Lexer::describe(t)); }
        if (is_keyword(t.text)) { lex_.error(t.span, "reserved word '" + t.text + "' cannot be used as an atom"); }
        Token id = lex_.next();
        NamedAtom a{id.text, id.span};
        if (lex_.accept("(")) {
            a.name += '(';
            bool first = true;
            do {
                Token arg = lex_.next();
                if (arg.kind == Tok::integer) {
                    a.name += (first ? "" : ",") + std::to_string(arg.value);
                }
                else if (arg.kind == Tok::ident) {
                    a.name += (first ? "" : ",") + arg.text;
                }
                else {
                    lex_.error(arg.span, "expected integer or identifier argument but found " + Lexer::describe(arg));
                }
                first = false;
            } while (lex_.accept(","));
            a.name += ')';
            a.span = join(a.span, lex_.expect(")").span);
        }
        return a;
    }

    SetExpr set() {
        SetExpr s;
        s.span = lex_.expect("{").span;
        if (!lex_.at("}")) {
            do { s.atoms.push_back(atom()); } while (lex_.accept(","));
        }
        s.span = join(s.span, lex_.expect("}").span);
        return s;
    }

    Comparator comparator() {
        Token t = lex_.next();
        if (t.kind == Tok::punct) {
            if (t.text == "<") { return Comparator::lt; }
            if (t.text == "<=") { return Comparator::le; }
            if (t.text == "=" || t.text == "==") { return Comparator::eq; }
            if (t.text == "!=") { return Comparator::ne; }
            if (t.text == ">=") { return Comparator::ge; }
            if (t.text == ">") { return Comparator::gt; }
        }
        lex_.error(t.span, "expected comparison operator but found " + Lexer::describe(t));
    }

    Token integer() {
        Token t = lex_.next();
        if (t.kind != Tok::integer) { lex_.error(t.span, "expected integer but found " + Lexer::describe(t)); }
        return t;
    }

    CAtomExpr catom() {
        CAtomExpr c;
        const Token& t = lex_.peek();
        c.span         = t.span;
        if (t.kind == Tok::punct && t.text == "(") {
            lex_.next();
            c.kind   = CAtomExpr::Kind::explicit_set;
            c.domain = set();
            lex_.expect(",");
            lex_.expect("{");
            if (!lex_.at("}")) {
                do { c.solutions.push_back(set()); } while (lex_.accept(","));
            }
            lex_.expect("}");
            c.span = join(c.span, lex_.expect(")").span);
            return c;
        }
        if (t.kind == Tok::integer) {
            c.kind         = CAtomExpr::Kind::aggregate;
            c.sugar.kind   = AggregateKind::choice;
            c.sugar.lower  = lex_.next().value;
            lex_.expect("{");
            do {
                AggregateElement e;
                SourceSpan start = lex_.peek().span;
                if (lex_.at_ident("not")) {
                    lex_.next();
                    e.negated = true;
                }
                NamedAtom a = atom();
                e.atom      = a.name;
                c.sugar.elements.push_back(e);
                c.element_spans.push_back(join(start, a.span));
            } while (lex_.accept(","));
            lex_.expect("}");
            Token u       = integer();
            c.sugar.upper = u.value;
            c.span        = join(c.span, u.span);
            return c;
        }
        if (t.kind == Tok::ident && t.text == "bot") {
            c.kind = CAtomExpr::Kind::bottom;
            lex_.next();
            return c;
        }
        if (t.kind == Tok::ident && t.text == "count") {
            lex_.next();
            c.kind       = CAtomExpr::Kind::aggregate;
            c.sugar.kind = AggregateKind::count;
            SetExpr s    = set();
            for (auto& a : s.atoms) {
                c.sugar.elements.push_back({a.name, 0, false});
                c.element_spans.push_back(a.span);
            }
            if (s.atoms.empty()) { throw ParseError(s.span, "aggregate needs at least one element", Errc::semantic); }
            c.sugar.cmp = comparator();
            Token v     = integer();
            c.sugar.rhs = v.value;
            c.span      = join(c.span, v.span);
            return c;
        }
        if (t.kind == Tok::ident && (t.text == "sum" || t.text == "avg" || t.text == "min" || t.text == "max")) {
            c.kind       = CAtomExpr::Kind::aggregate;
            c.sugar.kind = t.text == "sum"   ? AggregateKind::sum
                           : t.text == "avg" ? AggregateKind::avg
                           : t.text == "min" ? AggregateKind::min
                                             : AggregateKind::max;
            lex_.next();
            lex_.expect("{");
            do {
                NamedAtom a = atom();
                lex_.expect("=");
                Token w = integer();
                c.sugar.elements.push_back({a.name, w.value, false});
                c.element_spans.push_back(join(a.span, w.span));
            } while (lex_.accept(","));
            lex_.expect("}");
            c.sugar.cmp = comparator();
            Token v     = integer();
            c.sugar.rhs = v.value;
            c.span      = join(c.span, v.span);
            return c;
        }
        c.kind = CAtomExpr::Kind::atom;
        c.atom = atom();
        c.span = c.atom.span;
        return c;
    }

    Lexer lex_;
};

/////////////////////////////////////////////////////////////////////////////////////////
// Lowering
/////////////////////////////////////////////////////////////////////////////////////////
void collect(const CAtomExpr& c, std::vector<std::string>& names) {
    switch (c.kind) {
        case CAtomExpr::Kind::atom: names.push_back(c.atom.name); break;
        case CAtomExpr::Kind::bottom: break;
        case CAtomExpr::Kind::explicit_set:
            for (auto& a : c.domain.atoms) { names.push_back(a.name); }
            for (auto& s : c.solutions) {
                for (auto& a : s.atoms) { names.push_back(a.name); }
            }
            break;
        case CAtomExpr::Kind::aggregate:
            for (auto& e : c.sugar.elements) { names.push_back(e.atom); }
            break;
    }
}

Interpretation lower_set(const SetExpr& s, const AtomTable& atoms) {
    Interpretation out;
    for (const auto& a : s.atoms) {
        AtomId id = *atoms.find(a.name);
        if (out.contains(id)) { throw ParseError(a.span, "duplicate atom '" + a.name + "' in set", Errc::semantic); }
        out.insert(id);
    }
    return out;
}

CAtom lower(const CAtomExpr& c, const AtomTable& atoms) {
    switch (c.kind) {
        case CAtomExpr::Kind::atom: return CAtom::elementary(*atoms.find(c.atom.name));
        case CAtomExpr::Kind::bottom: return CAtom::bottom();
        case CAtomExpr::Kind::explicit_set: {
            Interpretation dom = lower_set(c.domain, atoms);
            if (dom.size() > kDomainCap) {
                throw ParseError(c.domain.span,
                                 "c-atom domain exceeds the " + std::to_string(kDomainCap) + "-atom cap",
                                 Errc::semantic);
            }
            std::vector<Interpretation> sols;
            for (const auto& s : c.solutions) {
                Interpretation x = lower_set(s, atoms);
                if (!x.subset_of(dom)) {
                    throw ParseError(s.span, "solution is not a subset of the c-atom domain", Errc::semantic);
                }
                if (std::find(sols.begin(), sols.end(), x) != sols.end()) {
                    throw ParseError(s.span, "duplicate solution in c-atom", Errc::semantic);
                }
                sols.push_back(std::move(x));
            }
            return CAtom::make(dom, sols);
        }
        case CAtomExpr::Kind::aggregate: {
            std::set<std::pair<std::string, bool>> seen;
            std::set<std::string> weighted;
            for (std::size_t i = 0; i < c.sugar.elements.size(); ++i) {
                const auto& e = c.sugar.elements[i];
                bool dup      = !seen.emplace(e.atom, e.negated).second;
                if (c.sugar.kind != AggregateKind::choice && c.sugar.kind != AggregateKind::count) {
                    dup = dup || !weighted.insert(e.atom).second;
                }
                if (dup) {
                    throw ParseError(c.element_spans[i], "duplicate aggregate element '" + e.atom + "'",
                                     Errc::semantic);
                }
            }
            try {
                return expand_aggregate(c.sugar, atoms);
            }
            catch (const ParseError&) {
                throw;
            }
            catch (const Error& e) {
                throw ParseError(c.span, e.what(), Errc::semantic);
            }
        }
    }
    return CAtom::bottom();
}

bool compare(Wide lhs, Comparator cmp, Wide rhs) {
    switch (cmp) {
        case Comparator::lt: return lhs < rhs;
        case Comparator::le: return lhs <= rhs;
        case Comparator::eq: return lhs == rhs;
        case Comparator::ne: return lhs != rhs;
        case Comparator::ge: return lhs >= rhs;
        case Comparator::gt: return lhs > rhs;
    }
    return false;
}

} // namespace

/////////////////////////////////////////////////////////////////////////////////////////
// Public interface
/////////////////////////////////////////////////////////////////////////////////////////
CAtom expand_aggregate(const AggregateSugar& s, const AtomTable& atoms) {
    if (s.elements.empty()) { fail(Errc::semantic, "aggregate needs at least one element"); }
    if (s.kind == AggregateKind::choice && !(0 <= s.lower && s.lower <= s.upper)) {
        fail(Errc::semantic, "choice bounds must satisfy 0 <= L <= U");
    }
    std::vector<AtomId> dom;
    for (const auto& e : s.elements) {
        auto id = atoms.find(e.atom);
        if (!id) { fail(Errc::semantic, "unknown atom '" + e.atom + "' in aggregate"); }
        dom.push_back(*id);
    }
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    if (dom.size() > kDomainCap) {
        fail(Errc::cap_exceeded, "aggregate has " + std::to_string(dom.size()) + " distinct atoms (cap " +
                                     std::to_string(kDomainCap) + ")");
    }
    auto local = [&](const std::string& name) {
        AtomId id = *atoms.find(name);
        return static_cast<std::size_t>(std::lower_bound(dom.begin(), dom.end(), id) - dom.begin());
    };
    // Per local position: weight (weighted kinds) or pos/neg membership (choice).
    std::vector<std::int64_t> weight(dom.size(), 0);
    LocalMask pos_set = 0, neg_set = 0;
    for (const auto& e : s.elements) {
        std::size_t i = local(e.atom);
        weight[i]     = e.weight;
        (e.negated ? neg_set : pos_set) |= LocalMask{1} << i;
    }
    std::vector<LocalMask> sols;
    LocalMask n = LocalMask{1} << dom.size();
    for (LocalMask t = 0; t < n; ++t) {
        auto size = static_cast<Wide>(std::popcount(t));
        Wide sum = 0;
        std::int64_t lo = 0, hi = 0;
        bool first = true;
        for (LocalMask m = t; m; m &= m - 1) {
            std::int64_t w = weight[static_cast<std::size_t>(std::countr_zero(m))];
            sum += w;
            lo    = first ? w : std::min(lo, w);
            hi    = first ? w : std::max(hi, w);
            first = false;
        }
        bool ok = false;
        switch (s.kind) {
            case AggregateKind::count: ok = compare(size, s.cmp, s.rhs); break;
            case AggregateKind::sum: ok = compare(sum, s.cmp, s.rhs); break;
            case AggregateKind::avg: ok = size > 0 && compare(sum, s.cmp, static_cast<Wide>(s.rhs) * size); break;
            case AggregateKind::min: ok = size > 0 && compare(lo, s.cmp, s.rhs); break;
            case AggregateKind::max: ok = size > 0 && compare(hi, s.cmp, s.rhs); break;
            case AggregateKind::choice: {
                auto k = std::popcount(t & pos_set) + std::popcount(neg_set & ~t);
                ok     = s.lower <= k && k <= s.upper;
                break;
            }
        }
        if (ok) { sols.push_back(t); }
    }
    return CAtom::from_masks(std::move(dom), std::move(sols));
}

Program parse_program(std::string_view text) {
    Parser parser(text);
    std::vector<RuleExpr> exprs = parser.program();
    std::vector<std::string> names;
    for (const auto& r : exprs) {
        collect(r.head, names);
        for (const auto& l : r.body) { collect(l.atom, names); }
    }
    auto atoms = std::make_shared<const AtomTable>(std::move(names));
    std::vector<Rule> rules;
    rules.reserve(exprs.size());
    for (const auto& re : exprs) {
        Rule r;
        r.head = lower(re.head, *atoms);
        for (const auto& l : re.body) {
            CAtom a    = lower(l.atom, *atoms);
            auto& list = l.negated ? r.neg : r.pos;
            if (std::find(list.begin(), list.end(), a) != list.end()) {
                throw ParseError(l.atom.span, "duplicate literal in rule body", Errc::semantic);
            }
            list.push_back(std::move(a));
        }
        rules.push_back(std::move(r));
    }
    return Program(std::move(atoms), std::move(rules));
}

std::string render(const CAtom& a, const AtomTable& atoms) {
    if (a.is_bottom()) { return "bot"; }
    if (a.is_elementary()) { return atoms.name(a.domain().front()); }
    std::string out = "(" + to_string(a.domain_set(), atoms) + ",{";
    bool first      = true;
    for (LocalMask m : a.solution_masks()) {
        if (!first) { out += ','; }
        out += to_string(a.expand(m), atoms);
        first = false;
    }
    return out + "})";
}

std::string render(const Rule& r, const AtomTable& atoms) {
    std::string body;
    for (const auto& a : r.pos) { body += (body.empty() ? "" : ", ") + render(a, atoms); }
    for (const auto& a : r.neg) { body += (body.empty() ? "not " : ", not ") + render(a, atoms); }
    if (body.empty()) { return render(r.head, atoms) + "."; }
    if (r.head.is_bottom()) { return ":- " + body + "."; }
    return render(r.head, atoms) + " :- " + body + ".";
}

std::string render(const Program& p) {
    std::string out;
    for (const auto& r : p.rules()) {
        if (!out.empty()) { out += '\n'; }
        out += render(r, p.atoms());
    }
    return out;
}

Interpretation parse_atom_list(std::string_view text, const AtomTable& atoms) {
    std::vector<NamedAtom> names;
    try {
        names = Parser(text).atom_list();
    }
    catch (const ParseError& e) {
        fail(Errc::usage, std::string("malformed atom list: ") + e.what());
    }
    Interpretation out;
    for (const auto& a : names) {
        auto id = atoms.find(a.name);
        if (!id) { fail(Errc::usage, "unknown atom '" + a.name + "'"); }
        out.insert(*id);
    }
    return out;
}

} // namespace catoms
