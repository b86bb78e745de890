#include "simpend/adjunction.hpp"

#include <algorithm>
#include <stdexcept>

#include "simpend/errors.hpp"

namespace simpend {

int object_index(const AdjObject& obj) {
    return 2 * obj.level + (obj.side == AdjSide::a ? 1 : 0);
}

AdjTerm AdjTerm::id(AdjObject obj) {
    if (obj.level < 0) throw ValidationError("negative object level");
    auto node = std::make_shared<Node>();
    node->kind = Kind::id;
    node->dom = obj;
    node->cod = obj;
    return AdjTerm(std::move(node));
}

AdjTerm AdjTerm::comp(const AdjTerm& g, const AdjTerm& f) {
    if (!(f.cod() == g.dom()))
        throw SizeMismatchError(object_index(g.dom()), object_index(f.cod()));
    auto node = std::make_shared<Node>();
    node->kind = Kind::comp;
    node->dom = f.dom();
    node->cod = g.cod();
    node->g = std::make_shared<const AdjTerm>(g);
    node->f = std::make_shared<const AdjTerm>(f);
    return AdjTerm(std::move(node));
}

AdjTerm AdjTerm::f(const AdjTerm& g) {
    if (g.dom().side != AdjSide::b) throw ValidationError("F needs a b-side arrow");
    auto node = std::make_shared<Node>();
    node->kind = Kind::f;
    node->dom = AdjObject{AdjSide::a, g.dom().level};
    node->cod = AdjObject{AdjSide::a, g.cod().level};
    node->f = std::make_shared<const AdjTerm>(g);
    return AdjTerm(std::move(node));
}

AdjTerm AdjTerm::g(const AdjTerm& f) {
    if (f.dom().side != AdjSide::a) throw ValidationError("G needs an a-side arrow");
    auto node = std::make_shared<Node>();
    node->kind = Kind::g;
    node->dom = AdjObject{AdjSide::b, f.dom().level + 1};
    node->cod = AdjObject{AdjSide::b, f.cod().level + 1};
    node->f = std::make_shared<const AdjTerm>(f);
    return AdjTerm(std::move(node));
}

AdjTerm AdjTerm::phi_a(const AdjTerm& f) {
    if (f.dom().side != AdjSide::a) throw ValidationError("phi_a needs an a-side arrow");
    auto node = std::make_shared<Node>();
    node->kind = Kind::phi_a;
    node->dom = AdjObject{AdjSide::a, f.dom().level + 1};
    node->cod = f.cod();
    node->f = std::make_shared<const AdjTerm>(f);
    return AdjTerm(std::move(node));
}

AdjTerm AdjTerm::gamma_c(const AdjTerm& g) {
    if (g.dom().side != AdjSide::b) throw ValidationError("gamma_c needs a b-side arrow");
    auto node = std::make_shared<Node>();
    node->kind = Kind::gamma_c;
    node->dom = g.dom();
    node->cod = AdjObject{AdjSide::b, g.cod().level + 1};
    node->f = std::make_shared<const AdjTerm>(g);
    return AdjTerm(std::move(node));
}

namespace {

// Replays the word from Id(O) innermost out.
std::pair<AdjObject, AdjObject> replay(const AdjWord& w) {
    AdjSide side = AdjSide::b;
    int dl = 0, cl = 0;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        switch (*it) {
            case AdjWord::Sym::F:
                if (side != AdjSide::b) throw ValidationError("F needs a b-side arrow");
                side = AdjSide::a;
                break;
            case AdjWord::Sym::G:
                if (side != AdjSide::a) throw ValidationError("G needs an a-side arrow");
                side = AdjSide::b;
                ++dl;
                ++cl;
                break;
            case AdjWord::Sym::PhiA:
                if (side != AdjSide::a) throw ValidationError("phi_a needs an a-side arrow");
                ++dl;
                break;
            case AdjWord::Sym::GammaC:
                if (side != AdjSide::b) throw ValidationError("gamma_c needs a b-side arrow");
                ++cl;
                break;
        }
    }
    return {AdjObject{side, dl}, AdjObject{side, cl}};
}

}  // namespace

AdjObject adj_dom(const AdjWord& w) { return replay(w).first; }
AdjObject adj_cod(const AdjWord& w) { return replay(w).second; }

AdjTerm term_of(const AdjWord& w) {
    AdjTerm t = AdjTerm::id(AdjObject{});
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        switch (*it) {
            case AdjWord::Sym::F: t = AdjTerm::f(t); break;
            case AdjWord::Sym::G: t = AdjTerm::g(t); break;
            case AdjWord::Sym::PhiA: t = AdjTerm::phi_a(t); break;
            case AdjWord::Sym::GammaC: t = AdjTerm::gamma_c(t); break;
        }
    }
    return t;
}

int term_length(const AdjTerm& t) {
    switch (t.kind()) {
        case AdjTerm::Kind::id: return 1;
        case AdjTerm::Kind::comp: return 1 + term_length(t.g()) + term_length(t.f());
        default: return 1 + term_length(t.arg());
    }
}

namespace {

int comp_length_sum(const AdjTerm& t) {
    switch (t.kind()) {
        case AdjTerm::Kind::id: return 0;
        case AdjTerm::Kind::comp:
            return term_length(t) + comp_length_sum(t.g()) + comp_length_sum(t.f());
        default: return comp_length_sum(t.arg());
    }
}

}  // namespace

int composition_degree(const AdjTerm& t) { return comp_length_sum(t) + term_length(t); }

namespace {

bool composition_free(const AdjTerm& t) {
    switch (t.kind()) {
        case AdjTerm::Kind::id: return true;
        case AdjTerm::Kind::comp: return false;
        default: return composition_free(t.arg());
    }
}

// The right-hand side for a topmost composition g o f, both sides
// composition-free.
AdjTerm rewrite_topmost(const AdjTerm& g, const AdjTerm& f) {
    using K = AdjTerm::Kind;
    if (g.kind() == K::id) return f;                                  // (cat 1)
    if (f.kind() == K::id) return g;                                  // (cat 1)
    if (f.dom().side == AdjSide::a) {
        // a side: the remaining shapes are F _ and phi_a _.
        if (f.kind() == K::phi_a)
            return AdjTerm::phi_a(AdjTerm::comp(g, f.arg()));         // (nat 1)
        if (g.kind() == K::f)
            return AdjTerm::f(AdjTerm::comp(g.arg(), f.arg()));       // (fun 2)
        // g = phi_a g1, f = F f1
        const AdjTerm& f1 = f.arg();
        if (f1.kind() == K::id) return g;                             // (fun 1), (cat 1)
        if (f1.kind() == K::g)
            return AdjTerm::phi_a(AdjTerm::comp(g.arg(), f1.arg()));  // (nat 2)
        return AdjTerm::comp(g.arg(), AdjTerm::f(f1.arg()));          // (phi_a gamma_c)
    }
    // b side: the remaining shapes are G _ and gamma_c _.
    if (g.kind() == K::gamma_c)
        return AdjTerm::gamma_c(AdjTerm::comp(g.arg(), f));           // (nat 1)
    if (f.kind() == K::g)
        return AdjTerm::g(AdjTerm::comp(g.arg(), f.arg()));           // (fun 2)
    // g = G g1, f = gamma_c f1
    const AdjTerm& g1 = g.arg();
    if (g1.kind() == K::id) return f;                                 // (fun 1), (cat 1)
    if (g1.kind() == K::f)
        return AdjTerm::gamma_c(AdjTerm::comp(g1.arg(), f.arg()));    // (nat 2)
    return AdjTerm::comp(AdjTerm::g(g1.arg()), f.arg());              // (phi_a gamma_c)
}

std::optional<AdjTerm> step_rec(const AdjTerm& t) {
    switch (t.kind()) {
        case AdjTerm::Kind::id: return std::nullopt;
        case AdjTerm::Kind::comp:
            if (composition_free(t.g()) && composition_free(t.f()))
                return rewrite_topmost(t.g(), t.f());
            if (auto s = step_rec(t.g())) return AdjTerm::comp(*s, t.f());
            if (auto s = step_rec(t.f())) return AdjTerm::comp(t.g(), *s);
            return std::nullopt;
        case AdjTerm::Kind::f:
            if (auto s = step_rec(t.arg())) return AdjTerm::f(*s);
            return std::nullopt;
        case AdjTerm::Kind::g:
            if (auto s = step_rec(t.arg())) return AdjTerm::g(*s);
            return std::nullopt;
        case AdjTerm::Kind::phi_a:
            if (auto s = step_rec(t.arg())) return AdjTerm::phi_a(*s);
            return std::nullopt;
        case AdjTerm::Kind::gamma_c:
            if (auto s = step_rec(t.arg())) return AdjTerm::gamma_c(*s);
            return std::nullopt;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::optional<AdjTerm> eliminate_step(const AdjTerm& t) { return step_rec(t); }

AdjTerm eliminate_composition_adj(const AdjTerm& t) {
    AdjTerm cur = t;
    int degree = composition_degree(cur);
    while (auto next = eliminate_step(cur)) {
        int d = composition_degree(*next);
        if (d >= degree) throw std::logic_error("composition degree failed to decrease");
        if (!(next->dom() == cur.dom()) || !(next->cod() == cur.cod()))
            throw std::logic_error("rewrite changed the type");
        degree = d;
        cur = *next;
    }
    return cur;
}

AdjWord adj_normal_form(const AdjTerm& t) {
    AdjTerm cf = eliminate_composition_adj(t);
    AdjWord w;
    const AdjTerm* cur = &cf;
    while (cur->kind() != AdjTerm::Kind::id) {
        switch (cur->kind()) {
            case AdjTerm::Kind::f: w.syms.push_back(AdjWord::Sym::F); break;
            case AdjTerm::Kind::g: w.syms.push_back(AdjWord::Sym::G); break;
            case AdjTerm::Kind::phi_a: w.syms.push_back(AdjWord::Sym::PhiA); break;
            case AdjTerm::Kind::gamma_c: w.syms.push_back(AdjWord::Sym::GammaC); break;
            default: throw std::logic_error("composition survived elimination");
        }
        cur = &cur->arg();
    }
    // (fun 1) read backwards: Id at b level k is (GF)^k, at a level k it is
    // F(GF)^k, both over Id(O).
    AdjObject base = cur->dom();
    if (base.side == AdjSide::a) w.syms.push_back(AdjWord::Sym::F);
    for (int k = base.level; k > 0; --k) {
        w.syms.push_back(AdjWord::Sym::G);
        w.syms.push_back(AdjWord::Sym::F);
    }
    return w;
}

namespace {

bool admits(const Frieze& d, int n, int m) {
    return n >= d.type_n && n - d.type_n == m - d.type_m;
}

}  // namespace

IndexedFrieze functor_E(const AdjTerm& t) {
    switch (t.kind()) {
        case AdjTerm::Kind::id: {
            int e = object_index(t.dom());
            return {unit_frieze(), e, e};
        }
        case AdjTerm::Kind::comp: {
            IndexedFrieze ef = functor_E(t.f());
            IndexedFrieze eg = functor_E(t.g());
            IndexedFrieze out{compose(ef.d, eg.d), ef.n, eg.m};
            if (!admits(out.d, out.n, out.m))
                throw std::logic_error("composite outgrew its index");
            return out;
        }
        case AdjTerm::Kind::f:
        case AdjTerm::Kind::g: {
            IndexedFrieze e = functor_E(t.arg());
            return {e.d, e.n + 1, e.m + 1};
        }
        case AdjTerm::Kind::phi_a: {
            IndexedFrieze e = functor_E(t.arg());
            auto cups = e.d.cups;
            cups.emplace_back(e.n + 1, e.n + 2);
            return {validate(std::move(cups), e.d.caps, {e.n + 2, e.m}), e.n + 2, e.m};
        }
        case AdjTerm::Kind::gamma_c: {
            IndexedFrieze e = functor_E(t.arg());
            auto caps = e.d.caps;
            caps.emplace_back(-(e.m + 2), -(e.m + 1));
            return {validate(e.d.cups, std::move(caps), {e.n, e.m + 2}), e.n, e.m + 2};
        }
    }
    throw std::logic_error("unreachable");
}

AdjTerm from_frieze(const IndexedFrieze& e) {
    if (!admits(e.d, e.n, e.m))
        throw ValidationError("frieze does not admit the index (" + std::to_string(e.n) +
                              ", " + std::to_string(e.m) + ")");
    int n = e.n, m = e.m;
    if (n % 2 == 0) {
        std::pair<int, int> top_cap{-m, -(m - 1)};
        if (m >= 2 && std::binary_search(e.d.caps.begin(), e.d.caps.end(), top_cap)) {
            auto caps = e.d.caps;
            caps.erase(std::find(caps.begin(), caps.end(), top_cap));
            Frieze inner = validate(e.d.cups, std::move(caps), {n, m - 2});
            return AdjTerm::gamma_c(from_frieze({std::move(inner), n, m - 2}));
        }
        if (n >= 2) return AdjTerm::g(from_frieze({e.d, n - 1, m - 1}));
        if (m != 0) throw std::logic_error("uncapped point survived admits");
        return AdjTerm::id(AdjObject{AdjSide::b, 0});
    }
    std::pair<int, int> outer_cup{n - 1, n};
    if (n >= 3 && std::binary_search(e.d.cups.begin(), e.d.cups.end(), outer_cup)) {
        auto cups = e.d.cups;
        cups.erase(std::find(cups.begin(), cups.end(), outer_cup));
        Frieze inner = validate(std::move(cups), e.d.caps, {n - 2, m});
        return AdjTerm::phi_a(from_frieze({std::move(inner), n - 2, m}));
    }
    return AdjTerm::f(from_frieze({e.d, n - 1, m - 1}));
}

OrdMap functor_S(const IndexedFrieze& e) {
    if (e.n % 2 != 0 || e.m % 2 != 0)
        throw ValidationError("functor S needs an even index (" + std::to_string(e.n) +
                              ", " + std::to_string(e.m) + ")");
    if (!admits(e.d, e.n, e.m))
        throw ValidationError("frieze does not admit the index (" + std::to_string(e.n) +
                              ", " + std::to_string(e.m) + ")");
    return restrict_to(phi(e.d), e.n / 2, e.m / 2);
}

IndexedFrieze functor_D(const OrdMap& f) {
    return {from_endo(extend(f)), 2 * f.n, 2 * f.m};
}

AdjTerm b_generator(int n, Letter letter, int i) {
    if (n < 2 || i < 0 || i > n - 2)
        throw IndexError("generator index " + std::to_string(i) + " outside 0.." +
                         std::to_string(n - 2));
    AdjTerm t = AdjTerm::id(AdjObject{AdjSide::b, 0});
    for (int k = 0; k < i; ++k) t = AdjTerm::g(AdjTerm::f(t));
    if (letter == Letter::p) {
        t = AdjTerm::gamma_c(AdjTerm::g(AdjTerm::phi_a(AdjTerm::f(t))));
    } else {
        t = AdjTerm::g(AdjTerm::phi_a(AdjTerm::f(AdjTerm::gamma_c(t))));
    }
    for (int k = 0; k < n - i - 2; ++k) t = AdjTerm::g(AdjTerm::f(t));
    return t;
}

namespace {

void endo_words_rec(int n, AdjSide side, int dl, int cl, std::vector<AdjWord::Sym>& inner,
                    std::vector<AdjWord>& out) {
    if (static_cast<int>(inner.size()) == 2 * n) {
        if (side == AdjSide::b && dl == n && cl == n) {
            AdjWord w;
            w.syms.assign(inner.rbegin(), inner.rend());
            out.push_back(std::move(w));
        }
        return;
    }
    if (dl > n || cl > n) return;
    if (side == AdjSide::b) {
        inner.push_back(AdjWord::Sym::F);
        endo_words_rec(n, AdjSide::a, dl, cl, inner, out);
        inner.pop_back();
        inner.push_back(AdjWord::Sym::GammaC);
        endo_words_rec(n, AdjSide::b, dl, cl + 1, inner, out);
        inner.pop_back();
    } else {
        inner.push_back(AdjWord::Sym::G);
        endo_words_rec(n, AdjSide::b, dl + 1, cl + 1, inner, out);
        inner.pop_back();
        inner.push_back(AdjWord::Sym::PhiA);
        endo_words_rec(n, AdjSide::a, dl + 1, cl, inner, out);
        inner.pop_back();
    }
}

}  // namespace

std::vector<AdjWord> enumerate_endo_words(int n) {
    if (n < 0 || n > 8) throw IndexError("endomorphism word level outside 0..8");
    std::vector<AdjWord> out;
    std::vector<AdjWord::Sym> inner;
    endo_words_rec(n, AdjSide::b, 0, 0, inner, out);
    return out;
}

std::string to_string(const AdjWord& w) {
    std::string s;
    for (AdjWord::Sym sym : w.syms) {
        switch (sym) {
            case AdjWord::Sym::F: s += 'F'; break;
            case AdjWord::Sym::G: s += 'G'; break;
            case AdjWord::Sym::PhiA: s += 'A'; break;
            case AdjWord::Sym::GammaC: s += 'C'; break;
        }
    }
    s += "@O";
    return s;
}

AdjWord parse_adj_word(const std::string& s) {
    AdjWord w;
    std::size_t k = 0;
    while (k < s.size()) {
        if (s[k] == 'F') w.syms.push_back(AdjWord::Sym::F);
        else if (s[k] == 'G') w.syms.push_back(AdjWord::Sym::G);
        else if (s[k] == 'A') w.syms.push_back(AdjWord::Sym::PhiA);
        else if (s[k] == 'C') w.syms.push_back(AdjWord::Sym::GammaC);
        else break;
        ++k;
    }
    if (k + 2 != s.size() || s[k] != '@' || s[k + 1] != 'O')
        throw ParseError("expected '@O'", k);
    replay(w);  // validates the symbol typing
    return w;
}

}  // namespace simpend
