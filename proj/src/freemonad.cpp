#include "simpend/freemonad.hpp"

#include <algorithm>
#include <stdexcept>

#include "simpend/errors.hpp"

namespace simpend {

MonadTerm MonadTerm::id(int n) {
    if (n < 0) throw ValidationError("negative object");
    auto node = std::make_shared<Node>();
    node->kind = Kind::id;
    node->dom = n;
    node->cod = n;
    return MonadTerm(std::move(node));
}

MonadTerm MonadTerm::comp(const MonadTerm& g, const MonadTerm& f) {
    if (f.cod() != g.dom()) throw SizeMismatchError(g.dom(), f.cod());
    auto node = std::make_shared<Node>();
    node->kind = Kind::comp;
    node->dom = f.dom();
    node->cod = g.cod();
    node->g = std::make_shared<const MonadTerm>(g);
    node->f = std::make_shared<const MonadTerm>(f);
    return MonadTerm(std::move(node));
}

MonadTerm MonadTerm::h(const MonadTerm& f) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::h;
    node->dom = f.dom();
    node->cod = f.cod() + 1;
    node->f = std::make_shared<const MonadTerm>(f);
    return MonadTerm(std::move(node));
}

MonadTerm MonadTerm::m(const MonadTerm& f) {
    if (f.cod() < 1) throw ValidationError("M needs codomain at least 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::m;
    node->dom = f.dom() + 1;
    node->cod = f.cod();
    node->f = std::make_shared<const MonadTerm>(f);
    return MonadTerm(std::move(node));
}

int monad_dom(const MonadWord& w) {
    int d = w.base, c = w.base;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        if (*it == MonadWord::Sym::H) {
            ++c;
        } else {
            if (c < 1) throw ValidationError("M needs codomain at least 1");
            ++d;
        }
    }
    return d;
}

int monad_cod(const MonadWord& w) {
    int d = w.base, c = w.base;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        if (*it == MonadWord::Sym::H) {
            ++c;
        } else {
            if (c < 1) throw ValidationError("M needs codomain at least 1");
            ++d;
        }
    }
    (void)d;
    return c;
}

MonadTerm term_of(const MonadWord& w) {
    MonadTerm t = MonadTerm::id(w.base);
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it)
        t = *it == MonadWord::Sym::H ? MonadTerm::h(t) : MonadTerm::m(t);
    return t;
}

int term_length(const MonadTerm& t) {
    switch (t.kind()) {
        case MonadTerm::Kind::id: return 1;
        case MonadTerm::Kind::comp: return 1 + term_length(t.g()) + term_length(t.f());
        case MonadTerm::Kind::h:
        case MonadTerm::Kind::m: return 1 + term_length(t.arg());
    }
    throw std::logic_error("unreachable");
}

int composition_degree(const MonadTerm& t) {
    switch (t.kind()) {
        case MonadTerm::Kind::id: return 0;
        case MonadTerm::Kind::comp:
            return term_length(t) + composition_degree(t.g()) + composition_degree(t.f());
        case MonadTerm::Kind::h:
        case MonadTerm::Kind::m: return composition_degree(t.arg());
    }
    throw std::logic_error("unreachable");
}

namespace {

bool composition_free(const MonadTerm& t) {
    switch (t.kind()) {
        case MonadTerm::Kind::id: return true;
        case MonadTerm::Kind::comp: return false;
        case MonadTerm::Kind::h:
        case MonadTerm::Kind::m: return composition_free(t.arg());
    }
    throw std::logic_error("unreachable");
}

// The right-hand side for a topmost composition g o f, both sides
// composition-free.
MonadTerm rewrite_topmost(const MonadTerm& g, const MonadTerm& f) {
    if (f.kind() == MonadTerm::Kind::id) return g;                      // (cat 1)
    if (g.kind() == MonadTerm::Kind::id) return f;                      // (cat 1)
    if (g.kind() == MonadTerm::Kind::h)
        return MonadTerm::h(MonadTerm::comp(g.arg(), f));               // (H)
    // g = M g'
    if (f.kind() == MonadTerm::Kind::h)
        return MonadTerm::comp(g.arg(), f.arg());                       // (HM)
    return MonadTerm::m(MonadTerm::comp(g, f.arg()));                   // (M)
}

std::optional<MonadTerm> step_rec(const MonadTerm& t) {
    switch (t.kind()) {
        case MonadTerm::Kind::id: return std::nullopt;
        case MonadTerm::Kind::h:
            if (auto s = step_rec(t.arg())) return MonadTerm::h(*s);
            return std::nullopt;
        case MonadTerm::Kind::m:
            if (auto s = step_rec(t.arg())) return MonadTerm::m(*s);
            return std::nullopt;
        case MonadTerm::Kind::comp:
            if (composition_free(t.g()) && composition_free(t.f()))
                return rewrite_topmost(t.g(), t.f());
            if (auto s = step_rec(t.g())) return MonadTerm::comp(*s, t.f());
            if (auto s = step_rec(t.f())) return MonadTerm::comp(t.g(), *s);
            return std::nullopt;
    }
    throw std::logic_error("unreachable");
}

MonadWord word_of(const MonadTerm& t) {
    MonadWord w;
    const MonadTerm* cur = &t;
    while (cur->kind() != MonadTerm::Kind::id) {
        if (cur->kind() == MonadTerm::Kind::comp)
            throw std::logic_error("composition survived elimination");
        w.syms.push_back(cur->kind() == MonadTerm::Kind::h ? MonadWord::Sym::H
                                                           : MonadWord::Sym::M);
        cur = &cur->arg();
    }
    w.base = cur->dom();
    return w;
}

}  // namespace

std::optional<MonadTerm> eliminate_step(const MonadTerm& t) { return step_rec(t); }

MonadWord eliminate_composition(const MonadTerm& t) {
    MonadTerm cur = t;
    int degree = composition_degree(cur);
    while (auto next = eliminate_step(cur)) {
        int d = composition_degree(*next);
        if (d >= degree) throw std::logic_error("composition degree failed to decrease");
        if (next->dom() != cur.dom() || next->cod() != cur.cod())
            throw std::logic_error("rewrite changed the type");
        degree = d;
        cur = *next;
    }
    return word_of(cur);
}

MonadWord monad_normal_form(const MonadTerm& t) {
    MonadWord w = eliminate_composition(t);
    // Id(a) = (MH)^a Id(0) by (MH), applied at the inner end of the word.
    for (int k = w.base; k > 0; --k) {
        w.syms.push_back(MonadWord::Sym::M);
        w.syms.push_back(MonadWord::Sym::H);
    }
    w.base = 0;
    return w;
}

OrdMap functor_G(const MonadTerm& t) {
    switch (t.kind()) {
        case MonadTerm::Kind::id: return identity(t.dom());
        case MonadTerm::Kind::comp: return compose(functor_G(t.f()), functor_G(t.g()));
        case MonadTerm::Kind::h: {
            OrdMap g = functor_G(t.arg());
            return OrdMap(g.n, g.m + 1, g.values);
        }
        case MonadTerm::Kind::m: {
            OrdMap g = functor_G(t.arg());
            std::vector<int> values = g.values;
            values.push_back(g.m - 1);  // the new pair (n, m)
            return OrdMap(g.n + 1, g.m, std::move(values));
        }
    }
    throw std::logic_error("unreachable");
}

OrdMap functor_G(const MonadWord& w) { return functor_G(term_of(w)); }

MonadWord from_ordmap(const OrdMap& f) {
    MonadWord w;
    w.base = 0;
    std::vector<int> values = f.values;
    int n = f.n, m = f.m;
    std::vector<MonadWord::Sym> prefix;
    while (n > 0) {
        int mp = values[static_cast<std::size_t>(n) - 1];
        int k = m - mp;  // >= 1
        for (int x = 0; x < k - 1; ++x) prefix.push_back(MonadWord::Sym::H);
        prefix.push_back(MonadWord::Sym::M);
        values.pop_back();
        --n;
        m = mp + 1;
    }
    for (int x = 0; x < m; ++x) prefix.push_back(MonadWord::Sym::H);
    w.syms = std::move(prefix);
    return w;
}

MonadTerm embedded_generator(int n, Letter letter, int i) {
    if (n < 2 || i < 0 || i > n - 2)
        throw IndexError("generator index " + std::to_string(i) + " outside 0.." +
                         std::to_string(n - 2));
    MonadTerm t = MonadTerm::id(i);
    if (letter == Letter::p) {
        t = MonadTerm::h(MonadTerm::m(MonadTerm::m(MonadTerm::h(t))));
    } else {
        t = MonadTerm::m(MonadTerm::m(MonadTerm::h(MonadTerm::h(t))));
    }
    for (int k = 0; k < n - i - 2; ++k) t = MonadTerm::m(MonadTerm::h(t));
    return t;
}

std::string to_string(const MonadWord& w) {
    std::string s;
    for (MonadWord::Sym sym : w.syms) s += sym == MonadWord::Sym::H ? 'H' : 'M';
    s += '@';
    s += std::to_string(w.base);
    return s;
}

MonadWord parse_monad_word(const std::string& s) {
    MonadWord w;
    std::size_t k = 0;
    while (k < s.size() && (s[k] == 'H' || s[k] == 'M')) {
        w.syms.push_back(s[k] == 'H' ? MonadWord::Sym::H : MonadWord::Sym::M);
        ++k;
    }
    if (k >= s.size() || s[k] != '@') throw ParseError("expected '@'", k);
    ++k;
    if (k >= s.size()) throw ParseError("expected base object", k);
    std::size_t digits = 0;
    int base = 0;
    while (k < s.size() && s[k] >= '0' && s[k] <= '9') {
        base = base * 10 + (s[k] - '0');
        ++k;
        ++digits;
    }
    if (digits == 0 || k != s.size()) throw ParseError("malformed base object", k);
    w.base = base;
    monad_dom(w);  // validates the M positions
    return w;
}

}  // namespace simpend
