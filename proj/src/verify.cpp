#include "simpend/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "simpend/adjunction.hpp"
#include "simpend/errors.hpp"
#include "simpend/freemonad.hpp"
#include "simpend/frieze.hpp"
#include "simpend/ordmap.hpp"
#include "simpend/presentation.hpp"
#include "simpend/temperleylieb.hpp"
#include "simpend/termio.hpp"

namespace simpend {

namespace {

// A check body returns the empty string on success and a description of the
// first failure otherwise. Escaped exceptions fail the check too.
struct Reporter {
    std::vector<CheckResult> results;

    void check(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r{name, false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

std::string num(long long v) { return std::to_string(v); }

// ---- presentation ----

constexpr int kEndoCounts[6] = {1, 1, 3, 10, 35, 126};

std::string check_normal_form_counts() {
    for (int n = 0; n <= 5; ++n) {
        const auto nfs = enumerate_normal_forms(n);
        if (static_cast<int>(nfs.size()) != kEndoCounts[n])
            return "n=" + num(n) + ": expected " + num(kEndoCounts[n]) + " normal forms, got " +
                   num(nfs.size());
    }
    return {};
}

std::string check_sigma_bijection() {
    for (int n = 0; n <= 5; ++n) {
        std::set<std::vector<int>> images;
        for (const NormalForm& nf : enumerate_normal_forms(n)) images.insert(sigma(nf).values);
        std::set<std::vector<int>> endos;
        for (const OrdMap& f : enumerate_endos(n)) endos.insert(f.values);
        if (images.size() != enumerate_normal_forms(n).size())
            return "n=" + num(n) + ": sigma is not injective on normal forms";
        if (images != endos) return "n=" + num(n) + ": sigma image misses some endomorphism";
    }
    return {};
}

std::string check_worked_example() {
    const Term t = parse_term("p[1,0].p[2,1].p3.q[6,5].q[8,6].p[11,9]", 15);
    const OrdMap f = sigma(t);
    const std::vector<int> expected{0, 0, 0, 1, 1, 7, 9, 9, 9, 9, 9, 10, 11, 13, 14};
    if (f.values != expected) return "evaluation disagrees with the reference values";
    const PointClassification cls = classify_points(f);
    if (cls.bottom_p != std::set<int>{2, 3, 4, 12}) return "bottom_p misclassified";
    if (cls.bottom_q != std::set<int>{7, 9}) return "bottom_q misclassified";
    if (cls.top_p != std::set<int>{0, 1, 3, 9}) return "top_p misclassified";
    if (cls.top_q != std::set<int>{5, 6}) return "top_q misclassified";
    const NormalForm nf = normal_form_of_endo(f);
    if (normalize(t).nf != nf) return "normalize and normal_form_of_endo disagree";
    if (sigma(nf) != f) return "normal_form_of_endo does not invert evaluation";
    return {};
}

std::string check_redex_soundness() {
    std::set<EquationId> seen;
    for (int n = 2; n <= 6; ++n) {
        std::vector<Block> blocks;
        for (Letter letter : {Letter::p, Letter::q})
            for (int i = 0; i <= n - 2; ++i)
                for (int j = 0; j <= i; ++j) blocks.push_back(Block{letter, i, j});
        for (const Block& left : blocks)
            for (const Block& right : blocks) {
                const auto info = classify_redex(left, right);
                if (!info) continue;
                seen.insert(info->eq);
                const BlockWord lhs{n, {left, right}};
                std::vector<std::optional<Block>> items;
                for (const Block& b : redex_rhs(info->eq, left, right)) items.emplace_back(b);
                const BlockWord rhs{n, items};
                if (sigma(lhs) != sigma(rhs))
                    return "equation " + to_string(info->eq) + " fails at rank " + num(n);
            }
    }
    if (seen.size() != 21)
        return "only " + num(seen.size()) + " of 21 block-equation families instantiated";
    return {};
}

std::string check_normalize_random() {
    std::mt19937 rng(99400123);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        const int len = std::uniform_int_distribution<int>(0, 30)(rng);
        std::vector<GenSymbol> word;
        for (int k = 0; k < len; ++k)
            word.push_back({std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Letter::p
                                                                               : Letter::q,
                            std::uniform_int_distribution<int>(0, n - 2)(rng)});
        const Term t = Term::from_word(n, word);
        const NormalForm nf = normalize(t).nf;
        if (sigma(nf) != sigma(t)) return "trial " + num(trial) + ": sigma not preserved";
        if (nf != normal_form_of_endo(sigma(t)))
            return "trial " + num(trial) + ": result is not the canonical normal form";
    }
    return {};
}

// ---- monad ----

MonadTerm random_monad_term(std::mt19937& rng, int d, int budget) {
    if (budget <= 1) return MonadTerm::id(d);
    switch (std::uniform_int_distribution<int>(0, d >= 1 ? 3 : 2)(rng)) {
        case 0: return MonadTerm::id(d);
        case 1: return MonadTerm::h(random_monad_term(rng, d, budget - 1));
        case 2: {
            const MonadTerm f = random_monad_term(rng, d, budget / 2);
            const MonadTerm g = random_monad_term(rng, f.cod(), budget - budget / 2 - 1);
            return MonadTerm::comp(g, f);
        }
        default: {
            MonadTerm f = random_monad_term(rng, d - 1, budget - 1);
            if (f.cod() == 0) f = MonadTerm::h(f);
            return MonadTerm::m(f);
        }
    }
}

std::string check_eliminate_respects_G() {
    std::mt19937 rng(5120094);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = std::uniform_int_distribution<int>(0, 4)(rng);
        const MonadTerm t = random_monad_term(rng, d, 24);
        if (functor_G(t) != functor_G(eliminate_composition(t)))
            return "trial " + num(trial) + ": elimination changed the G image";
    }
    return {};
}

std::vector<OrdMap> all_maps(int n, int m) {
    std::vector<OrdMap> out;
    std::vector<int> values(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == n) {
            out.emplace_back(n, m, values);
            return;
        }
        for (int v = low; v < m; ++v) {
            values[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    if (n == 0)
        out.emplace_back(0, m, std::vector<int>{});
    else if (m > 0)
        rec(rec, 0, 0);
    return out;
}

// All normal words of type n -> m: H raises the codomain, M raises the
// domain and needs codomain >= 1. Symbols collected in application order,
// stored outermost first.
void all_words_rec(int d, int c, int n, int m, std::vector<MonadWord::Sym>& inner,
                   std::vector<MonadWord>& out) {
    if (d == n && c == m) {
        MonadWord w;
        w.syms.assign(inner.rbegin(), inner.rend());
        out.push_back(std::move(w));
    }
    if (c < m) {
        inner.push_back(MonadWord::Sym::H);
        all_words_rec(d, c + 1, n, m, inner, out);
        inner.pop_back();
    }
    if (d < n && c >= 1) {
        inner.push_back(MonadWord::Sym::M);
        all_words_rec(d + 1, c, n, m, inner, out);
        inner.pop_back();
    }
}

std::string check_word_map_inverse() {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            std::vector<MonadWord> words;
            std::vector<MonadWord::Sym> inner;
            all_words_rec(0, 0, n, m, inner, words);
            const auto maps = all_maps(n, m);
            if (words.size() != maps.size())
                return "(" + num(n) + "," + num(m) + "): " + num(words.size()) + " words vs " +
                       num(maps.size()) + " maps";
            for (const MonadWord& w : words)
                if (from_ordmap(functor_G(w)) != w)
                    return "(" + num(n) + "," + num(m) + "): from_ordmap(G(w)) != w";
            for (const OrdMap& f : maps)
                if (functor_G(from_ordmap(f)) != f)
                    return "(" + num(n) + "," + num(m) + "): G(from_ordmap(f)) != f";
        }
    return {};
}

std::string check_monad_laws() {
    const auto eta = [](int a) { return MonadTerm::h(MonadTerm::id(a)); };
    const auto mu = [](int a) { return MonadTerm::m(MonadTerm::id(a + 1)); };
    const auto T = [](const MonadTerm& f) { return MonadTerm::m(MonadTerm::h(f)); };
    for (int a = 0; a <= 5; ++a) {
        const MonadTerm unit_left = MonadTerm::comp(mu(a), eta(a + 1));
        const MonadTerm unit_right = MonadTerm::comp(mu(a), T(eta(a)));
        const MonadTerm assoc_left = MonadTerm::comp(mu(a), mu(a + 1));
        const MonadTerm assoc_right = MonadTerm::comp(mu(a), T(mu(a)));
        if (functor_G(unit_left) != identity(a + 1) || functor_G(unit_right) != identity(a + 1))
            return "a=" + num(a) + ": unit law broken under G";
        if (monad_normal_form(unit_left) != monad_normal_form(MonadTerm::id(a + 1)) ||
            monad_normal_form(unit_right) != monad_normal_form(MonadTerm::id(a + 1)))
            return "a=" + num(a) + ": unit law broken as normal forms";
        if (functor_G(assoc_left) != functor_G(assoc_right))
            return "a=" + num(a) + ": associativity broken under G";
        if (monad_normal_form(assoc_left) != monad_normal_form(assoc_right))
            return "a=" + num(a) + ": associativity broken as normal forms";
    }
    return {};
}

std::string check_embedded_generators() {
    for (int n = 2; n <= 8; ++n)
        for (Letter letter : {Letter::p, Letter::q})
            for (int i = 0; i <= n - 2; ++i)
                if (functor_G(embedded_generator(n, letter, i)) != generator(n, letter, i))
                    return "generator (" + num(n) + "," + num(i) + ") has the wrong G image";
    return {};
}

// ---- adjunction ----

AdjObject obj_a(int level) { return AdjObject{AdjSide::a, level}; }
AdjObject obj_b(int level) { return AdjObject{AdjSide::b, level}; }

AdjTerm random_adj_walk(std::mt19937& rng, int max_len) {
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    std::uniform_int_distribution<int> coin(0, 1);
    AdjTerm t = AdjTerm::id(obj_b(0));
    for (int k = 0; k < len; ++k) {
        const bool first = coin(rng) == 0;
        if (t.dom().side == AdjSide::b)
            t = first ? AdjTerm::f(t) : AdjTerm::gamma_c(t);
        else
            t = first ? AdjTerm::g(t) : AdjTerm::phi_a(t);
    }
    return t;
}

struct AdjPool {
    std::vector<AdjTerm> terms;
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_dom;
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_cod;

    static std::pair<int, int> key(const AdjObject& o) {
        return {o.side == AdjSide::a ? 1 : 0, o.level};
    }

    void add(const AdjTerm& t) {
        by_dom[key(t.dom())].push_back(terms.size());
        by_cod[key(t.cod())].push_back(terms.size());
        terms.push_back(t);
    }

    const AdjTerm* pick(std::mt19937& rng,
                        const std::map<std::pair<int, int>, std::vector<std::size_t>>& index,
                        const AdjObject& o) const {
        const auto it = index.find(key(o));
        if (it == index.end() || it->second.empty()) return nullptr;
        std::uniform_int_distribution<std::size_t> d(0, it->second.size() - 1);
        return &terms[it->second[d(rng)]];
    }

    const AdjTerm& any(std::mt19937& rng) const {
        std::uniform_int_distribution<std::size_t> d(0, terms.size() - 1);
        return terms[d(rng)];
    }
};

AdjPool make_adj_pool(std::mt19937& rng, int walks, int comps) {
    AdjPool pool;
    for (int k = 0; k < walks; ++k) pool.add(random_adj_walk(rng, 8));
    for (int k = 0; k < comps; ++k) {
        const AdjTerm& f = pool.any(rng);
        if (const AdjTerm* g = pool.pick(rng, pool.by_dom, f.cod()))
            pool.add(AdjTerm::comp(*g, f));
    }
    return pool;
}

std::string check_imposed_equations() {
    std::mt19937 rng(63118102);
    const AdjPool pool = make_adj_pool(rng, 400, 80);
    const auto same = [](const AdjTerm& lhs, const AdjTerm& rhs) {
        return functor_E(lhs) == functor_E(rhs);
    };

    for (int k = 0; k <= 5; ++k) {
        if (!same(AdjTerm::f(AdjTerm::id(obj_b(k))), AdjTerm::id(obj_a(k))))
            return "F drops the identity at level " + num(k);
        if (!same(AdjTerm::g(AdjTerm::id(obj_a(k))), AdjTerm::id(obj_b(k + 1))))
            return "G drops the identity at level " + num(k);
    }

    int sampled = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const AdjTerm& t = pool.any(rng);
        if (!same(AdjTerm::comp(t, AdjTerm::id(t.dom())), t) ||
            !same(AdjTerm::comp(AdjTerm::id(t.cod()), t), t))
            return "identity composition is not neutral";
        if (const AdjTerm* g = pool.pick(rng, pool.by_dom, t.cod())) {
            if (const AdjTerm* h = pool.pick(rng, pool.by_dom, g->cod()))
                if (!same(AdjTerm::comp(AdjTerm::comp(*h, *g), t),
                          AdjTerm::comp(*h, AdjTerm::comp(*g, t))))
                    return "composition is not associative under E";
            const AdjTerm& u = *g;
            if (t.dom().side == AdjSide::b) {
                if (!same(AdjTerm::comp(AdjTerm::f(u), AdjTerm::f(t)),
                          AdjTerm::f(AdjTerm::comp(u, t))))
                    return "F is not functorial under E";
                if (!same(AdjTerm::comp(AdjTerm::gamma_c(u), t),
                          AdjTerm::gamma_c(AdjTerm::comp(u, t))))
                    return "gamma_c naturality fails under E";
                if (!same(AdjTerm::comp(AdjTerm::g(AdjTerm::f(u)), AdjTerm::gamma_c(t)),
                          AdjTerm::gamma_c(AdjTerm::comp(u, t))))
                    return "gamma_c exchange fails under E";
            } else {
                if (!same(AdjTerm::comp(AdjTerm::g(u), AdjTerm::g(t)),
                          AdjTerm::g(AdjTerm::comp(u, t))))
                    return "G is not functorial under E";
                if (!same(AdjTerm::comp(u, AdjTerm::phi_a(t)),
                          AdjTerm::phi_a(AdjTerm::comp(u, t))))
                    return "phi_a naturality fails under E";
                if (!same(AdjTerm::comp(AdjTerm::phi_a(u), AdjTerm::f(AdjTerm::g(t))),
                          AdjTerm::phi_a(AdjTerm::comp(u, t))))
                    return "phi_a exchange fails under E";
            }
            ++sampled;
        }
        if (t.dom().side == AdjSide::a) {
            if (const AdjTerm* s = pool.pick(rng, pool.by_cod, obj_b(t.dom().level)))
                if (!same(AdjTerm::comp(AdjTerm::phi_a(t), AdjTerm::f(AdjTerm::gamma_c(*s))),
                          AdjTerm::comp(t, AdjTerm::f(*s))))
                    return "phi_a/gamma_c cancellation fails under E";
            if (const AdjTerm* s = pool.pick(rng, pool.by_cod, obj_b(t.dom().level + 1)))
                if (!same(AdjTerm::comp(AdjTerm::g(AdjTerm::phi_a(t)), AdjTerm::gamma_c(*s)),
                          AdjTerm::comp(AdjTerm::g(t), *s)))
                    return "phi_a/gamma_c exchange fails under E";
        }
    }
    if (sampled < 100) return "composable pairs under-sampled: " + num(sampled);
    return {};
}

std::string check_triangular_identities() {
    for (int k = 0; k <= 5; ++k) {
        const AdjTerm lhs1 = AdjTerm::comp(AdjTerm::phi_a(AdjTerm::id(obj_a(k))),
                                           AdjTerm::f(AdjTerm::gamma_c(AdjTerm::id(obj_b(k)))));
        if (!(functor_E(lhs1) == IndexedFrieze{unit_frieze(), 2 * k + 1, 2 * k + 1}))
            return "first triangular equation fails at level " + num(k);
        const AdjTerm lhs2 = AdjTerm::comp(AdjTerm::g(AdjTerm::phi_a(AdjTerm::id(obj_a(k)))),
                                           AdjTerm::gamma_c(AdjTerm::id(obj_b(k + 1))));
        if (!(functor_E(lhs2) == IndexedFrieze{unit_frieze(), 2 * k + 2, 2 * k + 2}))
            return "second triangular equation fails at level " + num(k);
    }
    return {};
}

using FriezeKey = std::tuple<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>,
                             int, int, int, int>;

FriezeKey indexed_key(const IndexedFrieze& e) {
    return {e.d.cups, e.d.caps, e.d.type_n, e.d.type_m, e.n, e.m};
}

std::string check_endo_word_bijection() {
    for (int n = 0; n <= 4; ++n) {
        const auto words = enumerate_endo_words(n);
        if (static_cast<int>(words.size()) != kEndoCounts[n])
            return "level " + num(n) + ": expected " + num(kEndoCounts[n]) + " words, got " +
                   num(words.size());
        std::set<FriezeKey> images;
        std::set<std::vector<int>> maps;
        for (const AdjWord& w : words) {
            const IndexedFrieze e = functor_E(term_of(w));
            images.insert(indexed_key(e));
            maps.insert(functor_S(e).values);
        }
        if (images.size() != words.size()) return "level " + num(n) + ": E is not injective";
        std::set<FriezeKey> friezes;
        std::set<std::vector<int>> endos;
        for (const OrdMap& f : enumerate_endos(n)) {
            friezes.insert(indexed_key(functor_D(f)));
            endos.insert(f.values);
        }
        if (images != friezes) return "level " + num(n) + ": E misses some frieze of type (2n,2n)";
        if (maps != endos) return "level " + num(n) + ": S o E misses some endomorphism";
    }
    return {};
}

std::string check_generator_words() {
    for (int n = 2; n <= 6; ++n)
        for (Letter letter : {Letter::p, Letter::q})
            for (int i = 0; i <= n - 2; ++i)
                if (functor_S(functor_E(b_generator(n, letter, i))) != generator(n, letter, i))
                    return "b_generator (" + num(n) + "," + num(i) + ") has the wrong S o E image";
    return {};
}

std::string check_last_element() {
    std::mt19937 rng(7755211);
    const AdjPool pool = make_adj_pool(rng, 400, 80);
    int seen = 0;
    for (const AdjTerm& t : pool.terms) {
        if (t.dom().side != AdjSide::a) continue;
        const IndexedFrieze e = functor_E(AdjTerm::g(t));
        bool tail_straight = e.n - e.d.type_n >= 1;
        if (!tail_straight) {
            const auto ts = transversals(e.d);
            tail_straight = std::find(ts.begin(), ts.end(), Segment{-e.m, e.n}) != ts.end();
        }
        if (!tail_straight) return "a G image misses the last-strand transversal";
        const OrdMap s = functor_S(e);
        if (s(e.n / 2 - 1) != e.m / 2 - 1) return "a G image moves the last element";
        ++seen;
    }
    if (seen < 100) return "G images under-sampled: " + num(seen);
    return {};
}

// ---- frieze ----

std::string check_frieze_roundtrip() {
    for (int n = 0; n <= 4; ++n)
        for (const OrdMap& f : enumerate_endos(n)) {
            const IndexedFrieze e = functor_D(f);
            if (functor_S(e) != f) return "n=" + num(n) + ": S o D is not the identity";
            if (from_endo(phi(e.d)) != e.d) return "n=" + num(n) + ": from_endo o phi slips";
        }
    return {};
}

std::string check_compose_homomorphism() {
    std::mt19937 rng(20240817);
    std::vector<std::vector<OrdMap>> endos;
    for (int n = 0; n <= 5; ++n) endos.push_back(enumerate_endos(n));
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 5)(rng);
        const auto& pool = endos[static_cast<std::size_t>(n)];
        std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
        const OrdMap& f = pool[d(rng)];
        const OrdMap& g = pool[d(rng)];
        if (compose(functor_D(f).d, functor_D(g).d) != functor_D(compose(f, g)).d)
            return "trial " + num(trial) + ": frieze composition disagrees with map composition";
    }
    return {};
}

std::string check_printed_composite() {
    const Frieze d1 = validate({{2, 3}, {4, 5}, {10, 11}}, {{-2, -1}, {-8, -7}}, {11, 9});
    const Frieze d2 = validate({{2, 3}, {4, 5}}, {{-4, -3}, {-6, -5}, {-8, -7}}, {8, 10});
    if (phi(d1) != OrdEndoN({1, 1, 1, 2, 4, 4}, 6, 5)) return "phi(D1) has the wrong prefix";
    const Frieze c = compose(d1, d2);
    const std::vector<std::pair<int, int>> cups{{2, 3}, {4, 5}, {6, 7}, {10, 11}};
    const std::vector<std::pair<int, int>> caps{{-10, -9}, {-8, -7}, {-6, -5}, {-4, -3}};
    if (c.cups != cups) return "composite cups disagree with the printed diagram";
    if (c.caps != caps) return "composite caps disagree with the printed diagram";
    return {};
}

// ---- tl-embedding ----

std::string check_relation_families() {
    std::map<std::string, int> totals;
    for (int n = 2; n <= 6; ++n)
        for (const RelationCheck& rc : verify_relations(n)) {
            totals[rc.family] += rc.instances;
            if (rc.failures != 0)
                return rc.family + " at n=" + num(n) + ": " + num(rc.failures) + " failures";
        }
    for (const auto& [family, instances] : totals)
        if (instances <= 0) return family + " never instantiated through rank 6";
    return {};
}

using TLKey = std::tuple<int, std::vector<std::pair<int, int>>, int>;

TLKey tl_key(const TLDiagram& d) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pr : d.pairs) {
        const auto code = [](const TLPoint& p) {
            return p.side == TLSide::top ? -p.index : p.index;
        };
        pairs.emplace_back(code(pr.first), code(pr.second));
    }
    return {d.n, pairs, d.circles};
}

std::string check_embedding_injective() {
    for (int n = 2; n <= 4; ++n) {
        std::set<TLKey> images;
        const auto nfs = enumerate_normal_forms(n);
        for (const NormalForm& nf : nfs) {
            const TLDiagram d = eval_word(embed_term(term_of(nf)), TLMode::K);
            if (d.circles != 0) return "n=" + num(n) + ": an embedded element closes a circle";
            images.insert(tl_key(d));
        }
        if (images.size() != nfs.size()) return "n=" + num(n) + ": embedding is not injective";
    }
    return {};
}

std::string check_embedding_matches_friezes() {
    for (int n = 2; n <= 4; ++n)
        for (const NormalForm& nf : enumerate_normal_forms(n)) {
            const TLDiagram img = eval_word(embed_term(term_of(nf)), TLMode::K);
            if (img != frieze_to_tl(functor_D(sigma(nf)).d, 2 * n))
                return "n=" + num(n) + ": embedding disagrees with the doubled frieze";
        }
    return {};
}

std::string check_cupcap_relations() {
    const auto ev = [](std::vector<CupCapGen> gens, TLMode mode) {
        return eval_cupcap(CupCapWord{std::move(gens), mode});
    };
    const auto cup = [](int k) { return CupCapGen{true, k}; };
    const auto cap = [](int k) { return CupCapGen{false, k}; };
    const GeneralDiagram unit{};
    for (int k = 1; k <= 8; ++k) {
        if (ev({cup(k), cap(k + 1)}, TLMode::K) != unit ||
            (k >= 2 && ev({cup(k), cap(k - 1)}, TLMode::K) != unit))
            return "cup-cap cancellation fails at k=" + num(k);
        if (ev({cup(k), cap(k)}, TLMode::K) != GeneralDiagram{{}, {}, 0, 0, 1})
            return "closing a circle fails at k=" + num(k);
        if (ev({cup(k), cap(k)}, TLMode::J) != unit)
            return "mode J keeps a circle at k=" + num(k);
        for (int l = 1; l <= k; ++l) {
            if (ev({cup(k), cup(l)}, TLMode::K) != ev({cup(l), cup(k + 2)}, TLMode::K))
                return "cup exchange fails at (" + num(k) + "," + num(l) + ")";
            if (ev({cap(l), cap(k)}, TLMode::K) != ev({cap(k + 2), cap(l)}, TLMode::K))
                return "cap exchange fails at (" + num(k) + "," + num(l) + ")";
            if (ev({cup(l), cap(k + 2)}, TLMode::K) != ev({cap(k), cup(l)}, TLMode::K))
                return "cup-cap exchange 1 fails at (" + num(k) + "," + num(l) + ")";
            if (ev({cup(k + 2), cap(l)}, TLMode::K) != ev({cap(l), cup(k)}, TLMode::K))
                return "cup-cap exchange 2 fails at (" + num(k) + "," + num(l) + ")";
        }
    }
    return {};
}

std::string check_omega_families() {
    const auto word = [](std::initializer_list<CupCapWord> parts) {
        CupCapWord out;
        for (const CupCapWord& part : parts)
            out.gens.insert(out.gens.end(), part.gens.begin(), part.gens.end());
        return out;
    };
    const auto sg = [](int i) { return omega_generator(StdGen::sigma, i); };
    const auto dl = [](int i) { return omega_generator(StdGen::delta, i); };
    const auto same = [&](const CupCapWord& lhs, const CupCapWord& rhs) {
        return eval_cupcap(lhs) == eval_cupcap(rhs);
    };
    for (int i = 0; i <= 6; ++i) {
        if (eval_cupcap(word({sg(i), dl(i)})) != GeneralDiagram{} ||
            eval_cupcap(word({sg(i), dl(i + 1)})) != GeneralDiagram{})
            return "sigma-delta cancellation fails at i=" + num(i);
        for (int j = i; j <= 6; ++j) {
            if (!same(word({sg(j), sg(i)}), word({sg(i), sg(j + 1)})))
                return "sigma exchange fails at (" + num(i) + "," + num(j) + ")";
            if (!same(word({dl(i), dl(j)}), word({dl(j + 1), dl(i)})))
                return "delta exchange fails at (" + num(i) + "," + num(j) + ")";
            if (!same(word({sg(i), dl(j + 2)}), word({dl(j + 1), sg(i)})))
                return "sigma-delta exchange 1 fails at (" + num(i) + "," + num(j) + ")";
            if (!same(word({sg(j + 1), dl(i)}), word({dl(i), sg(j)})))
                return "sigma-delta exchange 2 fails at (" + num(i) + "," + num(j) + ")";
        }
    }
    return {};
}

std::vector<CheckResult> run_presentation() {
    Reporter r;
    r.check("normal-form-counts", check_normal_form_counts);
    r.check("sigma-bijection", check_sigma_bijection);
    r.check("worked-example", check_worked_example);
    r.check("redex-soundness", check_redex_soundness);
    r.check("normalize-random", check_normalize_random);
    return r.results;
}

std::vector<CheckResult> run_monad() {
    Reporter r;
    r.check("eliminate-respects-G", check_eliminate_respects_G);
    r.check("word-map-inverse", check_word_map_inverse);
    r.check("monad-laws", check_monad_laws);
    r.check("embedded-generators", check_embedded_generators);
    return r.results;
}

std::vector<CheckResult> run_adjunction() {
    Reporter r;
    r.check("imposed-equations", check_imposed_equations);
    r.check("triangular-identities", check_triangular_identities);
    r.check("endo-word-bijection", check_endo_word_bijection);
    r.check("generator-words", check_generator_words);
    r.check("last-element", check_last_element);
    return r.results;
}

std::vector<CheckResult> run_frieze() {
    Reporter r;
    r.check("roundtrip", check_frieze_roundtrip);
    r.check("compose-homomorphism", check_compose_homomorphism);
    r.check("printed-composite", check_printed_composite);
    return r.results;
}

std::vector<CheckResult> run_tl_embedding() {
    Reporter r;
    r.check("relation-families", check_relation_families);
    r.check("embedding-injective", check_embedding_injective);
    r.check("embedding-matches-friezes", check_embedding_matches_friezes);
    r.check("cupcap-relations", check_cupcap_relations);
    r.check("omega-families", check_omega_families);
    return r.results;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"presentation", "monad", "adjunction", "frieze", "tl-embedding"};
}

std::vector<CheckResult> verify_suite(const std::string& name) {
    if (name == "presentation") return run_presentation();
    if (name == "monad") return run_monad();
    if (name == "adjunction") return run_adjunction();
    if (name == "frieze") return run_frieze();
    if (name == "tl-embedding") return run_tl_embedding();
    throw ValidationError("unknown verify suite: " + name);
}

}  // namespace simpend
