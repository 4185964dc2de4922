#include <catoms/core.h>

#include <algorithm>
#include <bit>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace catoms {

const char* to_string(Errc e) {
    switch (e) {
        case Errc::parse: return "ParseError";
        case Errc::semantic: return "SemanticError";
        case Errc::usage: return "UsageError";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::not_basic: return "NotBasic";
        case Errc::not_basic_positive: return "NotBasicPositive";
        case Errc::not_positive: return "NotPositive";
        case Errc::not_monotone: return "NotMonotone";
        case Errc::unmapped_atom: return "UnmappedAtom";
        case Errc::unsupported: return "Unsupported";
    }
    return "Error";
}

ParseError::ParseError(SourceSpan span, const std::string& msg, Errc code)
    : Error(code, std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + msg), span_(span) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

/////////////////////////////////////////////////////////////////////////////////////////
// AtomTable
/////////////////////////////////////////////////////////////////////////////////////////
AtomTable::AtomTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    index_.reserve(names_.size());
    for (AtomId i = 0; i < names_.size(); ++i) { index_.emplace(names_[i], i); }
}

std::optional<AtomId> AtomTable::find(std::string_view name) const {
    if (auto it = index_.find(std::string(name)); it != index_.end()) { return it->second; }
    return std::nullopt;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Interpretation
/////////////////////////////////////////////////////////////////////////////////////////
Interpretation::Interpretation(std::initializer_list<AtomId> ids) {
    for (AtomId a : ids) { insert(a); }
}

Interpretation::Interpretation(std::span<const AtomId> ids) {
    for (AtomId a : ids) { insert(a); }
}

Interpretation Interpretation::from_mask(std::span<const AtomId> ids, std::uint64_t mask) {
    Interpretation r;
    for (; mask; mask &= mask - 1) { r.insert(ids[static_cast<std::size_t>(std::countr_zero(mask))]); }
    return r;
}

bool Interpretation::contains(AtomId id) const noexcept {
    std::size_t w = id / 64;
    return w < words_.size() && ((words_[w] >> (id % 64)) & 1u);
}

void Interpretation::insert(AtomId id) {
    std::size_t w = id / 64;
    if (w >= words_.size()) { words_.resize(w + 1, 0); }
    words_[w] |= std::uint64_t{1} << (id % 64);
}

void Interpretation::erase(AtomId id) {
    std::size_t w = id / 64;
    if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (id % 64));
        trim();
    }
}

std::size_t Interpretation::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) { n += static_cast<std::size_t>(std::popcount(w)); }
    return n;
}

bool Interpretation::subset_of(const Interpretation& o) const noexcept {
    if (words_.size() > o.words_.size()) { return false; }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~o.words_[i]) { return false; }
    }
    return true;
}

bool Interpretation::intersects(const Interpretation& o) const noexcept {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (words_[i] & o.words_[i]) { return true; }
    }
    return false;
}

std::size_t Interpretation::extent() const noexcept {
    if (words_.empty()) { return 0; }
    return (words_.size() - 1) * 64 + static_cast<std::size_t>(64 - std::countl_zero(words_.back()));
}

std::vector<AtomId> Interpretation::members() const {
    std::vector<AtomId> out;
    out.reserve(size());
    for_each([&](AtomId a) { out.push_back(a); });
    return out;
}

Interpretation& Interpretation::operator|=(const Interpretation& o) {
    if (o.words_.size() > words_.size()) { words_.resize(o.words_.size(), 0); }
    for (std::size_t i = 0; i < o.words_.size(); ++i) { words_[i] |= o.words_[i]; }
    return *this;
}

Interpretation& Interpretation::operator&=(const Interpretation& o) {
    if (words_.size() > o.words_.size()) { words_.resize(o.words_.size()); }
    for (std::size_t i = 0; i < words_.size(); ++i) { words_[i] &= o.words_[i]; }
    trim();
    return *this;
}

Interpretation& Interpretation::operator-=(const Interpretation& o) {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) { words_[i] &= ~o.words_[i]; }
    trim();
    return *this;
}

std::size_t Interpretation::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) { h = (h ^ w) * 1099511628211ull; }
    return h;
}

void Interpretation::trim() {
    while (!words_.empty() && words_.back() == 0) { words_.pop_back(); }
}

bool canonical_less(const Interpretation& a, const Interpretation& b) {
    std::size_t na = a.size(), nb = b.size();
    if (na != nb) { return na < nb; }
    std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
        std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
        if (std::uint64_t d = wa ^ wb; d != 0) {
            // The set holding the smallest differing element comes first.
            return (wa & d & (~d + 1)) != 0;
        }
    }
    return false;
}

void sort_canonical(std::vector<Interpretation>& sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
}

std::vector<std::string> atom_names(const Interpretation& s, const AtomTable& atoms) {
    std::vector<std::string> out;
    s.for_each([&](AtomId a) { out.push_back(atoms.name(a)); });
    return out;
}

std::string to_string(const Interpretation& s, const AtomTable& atoms) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](AtomId a) {
        if (!first) { out += ','; }
        out += atoms.name(a);
        first = false;
    });
    out += '}';
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// CAtom
/////////////////////////////////////////////////////////////////////////////////////////
bool mask_less(LocalMask a, LocalMask b) noexcept {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) { return pa < pb; }
    LocalMask d = a ^ b;
    return (a & d & (~d + 1)) != 0;
}

CAtom CAtom::elementary(AtomId a) { return from_masks({a}, {1u}); }

CAtom CAtom::from_masks(std::vector<AtomId> domain, std::vector<LocalMask> masks) {
    if (domain.size() > kDomainCap) {
        fail(Errc::cap_exceeded, "c-atom domain has " + std::to_string(domain.size()) + " atoms (cap " +
                                     std::to_string(kDomainCap) + ")");
    }
    CAtom r;
    r.domain_ = std::move(domain);
    LocalMask full = r.full_mask();
    for (LocalMask m : masks) {
        if (m & ~full) { fail(Errc::semantic, "c-atom solution is not a subset of its domain"); }
    }
    std::sort(masks.begin(), masks.end(), mask_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    r.solutions_ = std::move(masks);
    return r;
}

CAtom CAtom::make(const Interpretation& domain, std::span<const Interpretation> solutions) {
    std::vector<AtomId> dom = domain.members();
    if (dom.size() > kDomainCap) {
        fail(Errc::cap_exceeded, "c-atom domain has " + std::to_string(dom.size()) + " atoms (cap " +
                                     std::to_string(kDomainCap) + ")");
    }
    std::vector<LocalMask> masks;
    masks.reserve(solutions.size());
    for (const auto& x : solutions) {
        if (!x.subset_of(domain)) { fail(Errc::semantic, "c-atom solution is not a subset of its domain"); }
        LocalMask m = 0;
        for (std::size_t i = 0; i < dom.size(); ++i) {
            if (x.contains(dom[i])) { m |= LocalMask{1} << i; }
        }
        masks.push_back(m);
    }
    return from_masks(std::move(dom), std::move(masks));
}

std::vector<Interpretation> CAtom::solutions() const {
    std::vector<Interpretation> out;
    out.reserve(solutions_.size());
    for (LocalMask m : solutions_) { out.push_back(expand(m)); }
    return out;
}

bool CAtom::has_solution(LocalMask m) const noexcept {
    return std::binary_search(solutions_.begin(), solutions_.end(), m, mask_less);
}

LocalMask CAtom::project(const Interpretation& s) const noexcept {
    LocalMask m = 0;
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        if (s.contains(domain_[i])) { m |= LocalMask{1} << i; }
    }
    return m;
}

Interpretation CAtom::expand(LocalMask m) const {
    Interpretation r;
    for (; m; m &= m - 1) { r.insert(domain_[static_cast<std::size_t>(std::countr_zero(m))]); }
    return r;
}

bool CAtom::is_elementary() const noexcept {
    return domain_.size() == 1 && solutions_.size() == 1 && solutions_[0] == 1u;
}

bool CAtom::is_monotone() const {
    // Closure under adding one domain element at a time implies closure under
    // arbitrary supersets.
    LocalMask full = full_mask();
    for (LocalMask x : solutions_) {
        for (LocalMask free = full & ~x; free; free &= free - 1) {
            if (!has_solution(x | (free & (~free + 1)))) { return false; }
        }
    }
    return true;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Program
/////////////////////////////////////////////////////////////////////////////////////////
Program::Program() : atoms_(std::make_shared<AtomTable>()) {}

Program::Program(AtomTablePtr atoms, std::vector<Rule> rules) : atoms_(std::move(atoms)), rules_(std::move(rules)) {
    if (!atoms_) { atoms_ = std::make_shared<AtomTable>(); }
    auto check = [&](const CAtom& a) {
        for (AtomId id : a.domain()) {
            if (id >= atoms_->size()) { fail(Errc::semantic, "rule references an atom outside the atom table"); }
        }
        if (!a.is_monotone()) { monotone_ = false; }
    };
    for (const Rule& r : rules_) {
        check(r.head);
        for (const auto& a : r.pos) { check(a); }
        for (const auto& a : r.neg) {
            check(a);
            if (!a.is_monotone()) { naf_monotone_ = false; }
        }
        basic_    = basic_ && r.is_basic();
        positive_ = positive_ && r.is_positive();
    }
}

Interpretation Program::universe() const {
    Interpretation u;
    for (AtomId i = 0; i < atoms_->size(); ++i) { u.insert(i); }
    return u;
}

bool operator==(const Program& a, const Program& b) {
    return a.atoms() == b.atoms() && a.rules_ == b.rules_;
}

void Limits::require(std::size_t atom_count, std::string_view what) const {
    if (!allows(atom_count)) {
        std::ostringstream msg;
        msg << what << ": sweep over " << atom_count << " atoms exceeds the candidate budget of "
            << candidate_budget;
        fail(Errc::cap_exceeded, msg.str());
    }
}

/////////////////////////////////////////////////////////////////////////////////////////
// Satisfaction
/////////////////////////////////////////////////////////////////////////////////////////
bool satisfies(const Interpretation& s, const CAtom& a) { return a.has_solution(a.project(s)); }

bool satisfies_body(const Interpretation& s, const Rule& r) {
    for (const auto& a : r.pos) {
        if (!satisfies(s, a)) { return false; }
    }
    for (const auto& a : r.neg) {
        if (satisfies(s, a)) { return false; }
    }
    return true;
}

bool satisfies_rule(const Interpretation& s, const Rule& r) { return satisfies(s, r.head) || !satisfies_body(s, r); }

bool is_model(const Interpretation& s, const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return satisfies_rule(s, r); });
}

bool is_minimal_model(const Interpretation& s, const Program& p, const Limits& limits) {
    if (!is_model(s, p)) { return false; }
    limits.require(s.size(), "is_minimal_model");
    std::vector<AtomId> members = s.members();
    std::uint64_t full          = (std::uint64_t{1} << members.size()) - 1;
    for (std::uint64_t m = 0; m < full; ++m) {
        if (is_model(Interpretation::from_mask(members, m), p)) { return false; }
    }
    return true;
}

bool supports(const Interpretation& s, const Program& p, AtomId a) {
    for (const Rule& r : p.rules()) {
        const CAtom& h = r.head;
        auto pos       = std::find(h.domain().begin(), h.domain().end(), a);
        if (pos == h.domain().end() || !satisfies_body(s, r)) { continue; }
        LocalMask bit    = LocalMask{1} << (pos - h.domain().begin());
        LocalMask inside = h.project(s);
        for (LocalMask x : h.solution_masks()) {
            if ((x & bit) && (x & ~inside) == 0) { return true; }
        }
    }
    return false;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Transformations
/////////////////////////////////////////////////////////////////////////////////////////
CAtom complement(const CAtom& a) {
    std::vector<AtomId> dom(a.domain().begin(), a.domain().end());
    std::vector<LocalMask> out;
    std::uint64_t n = std::uint64_t{1} << dom.size();
    out.reserve(static_cast<std::size_t>(n) - a.solution_count());
    for (std::uint64_t m = 0; m < n; ++m) {
        if (!a.has_solution(static_cast<LocalMask>(m))) { out.push_back(static_cast<LocalMask>(m)); }
    }
    return CAtom::from_masks(std::move(dom), std::move(out));
}

namespace {
// up[m] = some solution is a subset of m.
std::vector<char> upward(const CAtom& a) {
    std::size_t n = a.domain().size();
    std::vector<char> up(std::size_t{1} << n, 0);
    for (LocalMask x : a.solution_masks()) { up[x] = 1; }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t m = 0; m < up.size(); ++m) {
            if (m >> i & 1u) { up[m] = up[m] | up[m ^ (std::size_t{1} << i)]; }
        }
    }
    return up;
}

// down[m] = m is a subset of some solution.
std::vector<char> downward(const CAtom& a) {
    std::size_t n = a.domain().size();
    std::vector<char> down(std::size_t{1} << n, 0);
    for (LocalMask x : a.solution_masks()) { down[x] = 1; }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t m = 0; m < down.size(); ++m) {
            if (!(m >> i & 1u)) { down[m] = down[m] | down[m | (std::size_t{1} << i)]; }
        }
    }
    return down;
}
} // namespace

CAtom closure(const CAtom& a) {
    std::vector<char> up = upward(a);
    std::vector<LocalMask> out;
    for (std::size_t m = 0; m < up.size(); ++m) {
        if (up[m]) { out.push_back(static_cast<LocalMask>(m)); }
    }
    return CAtom::from_masks(std::vector<AtomId>(a.domain().begin(), a.domain().end()), std::move(out));
}

CAtomClass classify(const CAtom& a) {
    CAtomClass c;
    c.elementary       = a.is_elementary();
    std::vector<char> up   = upward(a);
    std::vector<char> down = downward(a);
    c.monotone = c.convex = true;
    for (std::size_t m = 0; m < up.size(); ++m) {
        bool sol = a.has_solution(static_cast<LocalMask>(m));
        if (up[m] && !sol) { c.monotone = false; }
        if (up[m] && down[m] && !sol) { c.convex = false; }
    }
    c.closed = c.monotone;
    return c;
}

Interpretation hset(const Program& p) {
    Interpretation h;
    for (const Rule& r : p.rules()) {
        for (AtomId a : r.head.domain()) { h.insert(a); }
    }
    return h;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Sweeps
/////////////////////////////////////////////////////////////////////////////////////////
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) { body(i); }
        return;
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_at(workers, n);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                // Strided partition: index i belongs to worker i % workers.
                for (std::size_t i = w; i < n; i += workers) {
                    try {
                        body(i);
                    }
                    catch (...) {
                        errors[w]   = std::current_exception();
                        error_at[w] = i;
                        return;
                    }
                }
            });
        }
    }
    auto first = std::min_element(error_at.begin(), error_at.end());
    if (*first != n) { std::rethrow_exception(errors[static_cast<std::size_t>(first - error_at.begin())]); }
}

std::vector<Interpretation> sweep_subsets(const Interpretation& atoms, const Limits& limits, unsigned workers,
                                          const std::function<bool(const Interpretation&)>& pred) {
    std::vector<AtomId> ids = atoms.members();
    limits.require(ids.size(), "candidate sweep");
    std::uint64_t total = std::uint64_t{1} << ids.size();
    constexpr std::uint64_t chunk = 256;
    std::size_t chunks            = static_cast<std::size_t>((total + chunk - 1) / chunk);
    std::vector<std::vector<Interpretation>> found(chunks);
    parallel_for(chunks, workers, [&](std::size_t c) {
        std::uint64_t end = std::min(total, (c + 1) * chunk);
        for (std::uint64_t m = c * chunk; m < end; ++m) {
            Interpretation cand = Interpretation::from_mask(ids, m);
            if (pred(cand)) { found[c].push_back(std::move(cand)); }
        }
    });
    std::vector<Interpretation> out;
    for (auto& part : found) {
        for (auto& s : part) { out.push_back(std::move(s)); }
    }
    sort_canonical(out);
    return out;
}

} // namespace catoms
