#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "simpend/adjunction.hpp"
#include "simpend/errors.hpp"
#include "simpend/frieze.hpp"
#include "simpend/ordmap.hpp"

using namespace simpend;

namespace {

AdjObject obj_a(int level) { return AdjObject{AdjSide::a, level}; }
AdjObject obj_b(int level) { return AdjObject{AdjSide::b, level}; }

AdjTerm word_term(const std::string& s) { return term_of(parse_adj_word(s)); }

std::string nf(const AdjTerm& t) { return to_string(adj_normal_form(t)); }

// Random composition-free term, built as a typed walk up from Id(O).
AdjTerm random_walk(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> coin(0, 1);
    int len = len_dist(rng);
    AdjTerm t = AdjTerm::id(obj_b(0));
    for (int k = 0; k < len; ++k) {
        bool first = coin(rng) == 0;
        if (t.dom().side == AdjSide::b) {
            t = first ? AdjTerm::f(t) : AdjTerm::gamma_c(t);
        } else {
            t = first ? AdjTerm::g(t) : AdjTerm::phi_a(t);
        }
    }
    return t;
}

// Pool of random terms bucketed by domain and codomain objects.
struct TermPool {
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
        auto it = index.find(key(o));
        if (it == index.end() || it->second.empty()) return nullptr;
        std::uniform_int_distribution<std::size_t> d(0, it->second.size() - 1);
        return &terms[it->second[d(rng)]];
    }

    const AdjTerm* from(std::mt19937& rng, const AdjObject& o) const {
        return pick(rng, by_dom, o);
    }
    const AdjTerm* into(std::mt19937& rng, const AdjObject& o) const {
        return pick(rng, by_cod, o);
    }
    const AdjTerm& any(std::mt19937& rng) const {
        std::uniform_int_distribution<std::size_t> d(0, terms.size() - 1);
        return terms[d(rng)];
    }
};

TermPool make_pool(std::mt19937& rng, int walks, int comps) {
    TermPool pool;
    for (int k = 0; k < walks; ++k) pool.add(random_walk(rng, 8));
    for (int k = 0; k < comps; ++k) {
        const AdjTerm& f = pool.any(rng);
        if (const AdjTerm* g = pool.from(rng, f.cod())) pool.add(AdjTerm::comp(*g, f));
    }
    return pool;
}

using FriezeKey = std::tuple<std::vector<std::pair<int, int>>,
                             std::vector<std::pair<int, int>>, int, int>;

FriezeKey frieze_key(const Frieze& d) { return {d.cups, d.caps, d.type_n, d.type_m}; }

// Both sides of an imposed equation: same frieze image and same normal form.
void check_equal_arrows(const AdjTerm& lhs, const AdjTerm& rhs) {
    REQUIRE(lhs.dom() == rhs.dom());
    REQUIRE(lhs.cod() == rhs.cod());
    CHECK(functor_E(lhs) == functor_E(rhs));
    CHECK(adj_normal_form(lhs) == adj_normal_form(rhs));
}

bool has_transversal(const IndexedFrieze& e, int a, int b) {
    if (e.n - e.d.type_n >= 1 && a == -e.m && b == e.n) return true;
    auto ts = transversals(e.d);
    return std::find(ts.begin(), ts.end(), Segment{a, b}) != ts.end();
}

}  // namespace

TEST_CASE("word typing replays the object indices") {
    CHECK(object_index(obj_b(0)) == 0);
    CHECK(object_index(obj_a(0)) == 1);
    CHECK(object_index(obj_b(3)) == 6);
    CHECK(object_index(obj_a(2)) == 5);

    CHECK(adj_dom(parse_adj_word("@O")) == obj_b(0));
    CHECK(adj_cod(parse_adj_word("@O")) == obj_b(0));
    CHECK(adj_dom(parse_adj_word("GF@O")) == obj_b(1));
    CHECK(adj_cod(parse_adj_word("GF@O")) == obj_b(1));
    CHECK(adj_dom(parse_adj_word("GAFC@O")) == obj_b(2));
    CHECK(adj_cod(parse_adj_word("GAFC@O")) == obj_b(2));
    CHECK(adj_dom(parse_adj_word("CGAF@O")) == obj_b(2));
    CHECK(adj_cod(parse_adj_word("CGAF@O")) == obj_b(2));
    CHECK(adj_dom(parse_adj_word("C@O")) == obj_b(0));
    CHECK(adj_cod(parse_adj_word("C@O")) == obj_b(1));
    CHECK(adj_dom(parse_adj_word("AF@O")) == obj_a(1));
    CHECK(adj_cod(parse_adj_word("AF@O")) == obj_a(0));
    CHECK(adj_dom(parse_adj_word("FC@O")) == obj_a(0));
    CHECK(adj_cod(parse_adj_word("FC@O")) == obj_a(1));
    CHECK(adj_dom(parse_adj_word("FGF@O")) == obj_a(1));

    for (const char* s : {"@O", "GF@O", "GAFC@O", "CGAF@O", "C@O", "AF@O", "FC@O"})
        CHECK(to_string(parse_adj_word(s)) == s);

    CHECK_THROWS_AS(parse_adj_word("FF@O"), ValidationError);
    CHECK_THROWS_AS(parse_adj_word("G@O"), ValidationError);
    CHECK_THROWS_AS(parse_adj_word("CF@O"), ValidationError);
    CHECK_THROWS_AS(parse_adj_word("A@O"), ValidationError);
    CHECK_THROWS_AS(parse_adj_word("GF"), ParseError);
    CHECK_THROWS_AS(parse_adj_word("GF@X"), ParseError);
    CHECK_THROWS_AS(parse_adj_word("gf@O"), ParseError);
    CHECK_THROWS_AS(parse_adj_word("GF@O "), ParseError);
}

TEST_CASE("typed constructors reject mismatches") {
    CHECK_THROWS_AS(AdjTerm::id(obj_b(-1)), ValidationError);
    CHECK_THROWS_AS(AdjTerm::f(AdjTerm::id(obj_a(0))), ValidationError);
    CHECK_THROWS_AS(AdjTerm::g(AdjTerm::id(obj_b(0))), ValidationError);
    CHECK_THROWS_AS(AdjTerm::phi_a(AdjTerm::id(obj_b(1))), ValidationError);
    CHECK_THROWS_AS(AdjTerm::gamma_c(AdjTerm::id(obj_a(1))), ValidationError);
    CHECK_THROWS_AS(AdjTerm::comp(AdjTerm::id(obj_b(0)), AdjTerm::id(obj_b(1))),
                    SizeMismatchError);
    CHECK_THROWS_AS(AdjTerm::comp(AdjTerm::id(obj_a(0)), AdjTerm::id(obj_b(0))),
                    SizeMismatchError);

    AdjTerm t = AdjTerm::comp(AdjTerm::gamma_c(AdjTerm::id(obj_b(0))), AdjTerm::id(obj_b(0)));
    CHECK(t.kind() == AdjTerm::Kind::comp);
    CHECK(t.g().kind() == AdjTerm::Kind::gamma_c);
    CHECK(t.f().kind() == AdjTerm::Kind::id);
    CHECK(t.dom() == obj_b(0));
    CHECK(t.cod() == obj_b(1));
    CHECK(term_length(t) == 4);
    CHECK(composition_degree(t) == 8);
    CHECK(composition_degree(t.g()) == term_length(t.g()));
}

TEST_CASE("generators and identity expansions pin their words") {
    CHECK(nf(b_generator(2, Letter::p, 0)) == "CGAF@O");
    CHECK(nf(b_generator(2, Letter::q, 0)) == "GAFC@O");
    CHECK(nf(b_generator(3, Letter::p, 0)) == "GFCGAF@O");
    CHECK(nf(b_generator(3, Letter::q, 1)) == "GAFCGF@O");
    CHECK(nf(b_generator(4, Letter::p, 1)) == "GFCGAFGF@O");

    CHECK(b_generator(3, Letter::q, 1).dom() == obj_b(3));
    CHECK(b_generator(3, Letter::q, 1).cod() == obj_b(3));

    CHECK(nf(AdjTerm::id(obj_b(0))) == "@O");
    CHECK(nf(AdjTerm::id(obj_b(1))) == "GF@O");
    CHECK(nf(AdjTerm::id(obj_a(0))) == "F@O");
    CHECK(nf(AdjTerm::id(obj_a(2))) == "FGFGF@O");
    CHECK(nf(AdjTerm::gamma_c(AdjTerm::id(obj_b(0)))) == "C@O");

    CHECK_THROWS_AS(b_generator(1, Letter::p, 0), IndexError);
    CHECK_THROWS_AS(b_generator(3, Letter::q, 2), IndexError);
    CHECK_THROWS_AS(b_generator(3, Letter::q, -1), IndexError);
}

TEST_CASE("composition elimination straightens the triangular equations") {
    for (int k = 0; k <= 5; ++k) {
        AdjTerm lhs1 = AdjTerm::comp(AdjTerm::phi_a(AdjTerm::id(obj_a(k))),
                                     AdjTerm::f(AdjTerm::gamma_c(AdjTerm::id(obj_b(k)))));
        CHECK(lhs1.dom() == obj_a(k));
        CHECK(lhs1.cod() == obj_a(k));
        check_equal_arrows(lhs1, AdjTerm::id(obj_a(k)));
        CHECK(functor_E(lhs1) == IndexedFrieze{unit_frieze(), 2 * k + 1, 2 * k + 1});

        AdjTerm lhs2 = AdjTerm::comp(AdjTerm::g(AdjTerm::phi_a(AdjTerm::id(obj_a(k)))),
                                     AdjTerm::gamma_c(AdjTerm::id(obj_b(k + 1))));
        CHECK(lhs2.dom() == obj_b(k + 1));
        check_equal_arrows(lhs2, AdjTerm::id(obj_b(k + 1)));
        CHECK(functor_E(lhs2) == IndexedFrieze{unit_frieze(), 2 * k + 2, 2 * k + 2});

        AdjTerm cf = eliminate_composition_adj(lhs1);
        CHECK(composition_degree(cf) == term_length(cf));
    }
}

TEST_CASE("elimination collapses the dispatch examples") {
    AdjTerm t = word_term("GAFC@O");
    CHECK(nf(AdjTerm::comp(t, AdjTerm::id(t.dom()))) == "GAFC@O");
    CHECK(nf(AdjTerm::comp(AdjTerm::id(t.cod()), t)) == "GAFC@O");

    // G(AF) o G(FC) contracts through (fun 2), (phi_a gamma_c), (cat 1).
    AdjTerm collapse = AdjTerm::comp(AdjTerm::g(word_term("AF@O")),
                                     AdjTerm::g(word_term("FC@O")));
    CHECK(collapse.dom() == obj_b(1));
    CHECK(collapse.cod() == obj_b(1));
    CHECK(nf(collapse) == "GF@O");

    // q0 o p0 at level 2 is the identity of (GF)^2 O.
    AdjTerm pq = AdjTerm::comp(b_generator(2, Letter::q, 0), b_generator(2, Letter::p, 0));
    CHECK(functor_S(functor_E(pq)) ==
          compose(generator(2, Letter::p, 0), generator(2, Letter::q, 0)));
}

TEST_CASE("functor E pins the reference images") {
    CHECK(functor_E(AdjTerm::id(obj_b(0))) == IndexedFrieze{unit_frieze(), 0, 0});
    CHECK(functor_E(AdjTerm::f(AdjTerm::id(obj_b(2)))) == IndexedFrieze{unit_frieze(), 5, 5});
    CHECK(functor_E(AdjTerm::g(AdjTerm::id(obj_a(1)))) == IndexedFrieze{unit_frieze(), 4, 4});

    IndexedFrieze cap = functor_E(AdjTerm::gamma_c(AdjTerm::id(obj_b(0))));
    CHECK(cap == IndexedFrieze{Frieze{{}, {{-2, -1}}, 0, 2}, 0, 2});
    CHECK(cap.d == from_endo(OrdEndoN({}, 0, 1)));

    IndexedFrieze cup = functor_E(AdjTerm::phi_a(AdjTerm::id(obj_a(0))));
    CHECK(cup == IndexedFrieze{Frieze{{{2, 3}}, {}, 3, 1}, 3, 1});

    IndexedFrieze p0 = functor_E(b_generator(2, Letter::p, 0));
    CHECK(p0 == IndexedFrieze{Frieze{{{2, 3}}, {{-4, -3}}, 4, 4}, 4, 4});
    CHECK(transversals(p0.d) == std::vector<Segment>{{-1, 1}, {-2, 4}});

    IndexedFrieze q0 = functor_E(b_generator(2, Letter::q, 0));
    CHECK(q0 == IndexedFrieze{Frieze{{{2, 3}}, {{-2, -1}}, 3, 3}, 4, 4});

    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i + 2 <= n; ++i)
            for (Letter letter : {Letter::p, Letter::q})
                CHECK(functor_S(functor_E(b_generator(n, letter, i))) ==
                      generator(n, letter, i));

    CHECK(functor_S(functor_E(b_generator(2, Letter::q, 0))).values == std::vector<int>{1, 1});
    CHECK(functor_S(functor_E(b_generator(2, Letter::p, 0))).values == std::vector<int>{0, 0});
    CHECK(functor_S(functor_E(b_generator(3, Letter::q, 1))).values ==
          std::vector<int>{0, 2, 2});
}

TEST_CASE("functors S and D invert on even indices") {
    for (int n = 0; n <= 5; ++n)
        CHECK(functor_S(IndexedFrieze{unit_frieze(), 2 * n, 2 * n}) == identity(n));

    CHECK(functor_D(OrdMap(2, 2, {0, 0})) ==
          IndexedFrieze{Frieze{{{2, 3}}, {{-4, -3}}, 4, 4}, 4, 4});

    std::mt19937 rng(550331);
    std::uniform_int_distribution<int> size_dist(0, 8);
    std::uniform_int_distribution<int> shift_dist(0, 3);
    for (int trial = 0; trial < 400; ++trial) {
        int n = size_dist(rng), m = size_dist(rng);
        if (n > 0 && m == 0) m = 1;
        std::vector<int> values(static_cast<std::size_t>(n));
        for (int& v : values) v = std::uniform_int_distribution<int>(0, m - 1)(rng);
        std::sort(values.begin(), values.end());
        OrdMap f(n, m, values);

        IndexedFrieze e = functor_D(f);
        CHECK(e.n == 2 * n);
        CHECK(e.m == 2 * m);
        CHECK(functor_S(e) == f);

        int k = shift_dist(rng);
        IndexedFrieze raised{e.d, e.n + 2 * k, e.m + 2 * k};
        CHECK(functor_D(functor_S(raised)) == raised);
    }

    CHECK_THROWS_AS(functor_S(IndexedFrieze{unit_frieze(), 1, 1}), ValidationError);
    CHECK_THROWS_AS(functor_S(IndexedFrieze{Frieze{{{2, 3}}, {}, 3, 1}, 2, 2}),
                    ValidationError);
    CHECK_THROWS_AS(functor_S(IndexedFrieze{unit_frieze(), 2, 4}), ValidationError);
}

TEST_CASE("functor E is sound for every imposed equation") {
    std::mt19937 rng(412126);
    TermPool pool = make_pool(rng, 1500, 300);

    for (int k = 0; k <= 5; ++k) {
        check_equal_arrows(AdjTerm::f(AdjTerm::id(obj_b(k))), AdjTerm::id(obj_a(k)));  // (fun 1)
        check_equal_arrows(AdjTerm::g(AdjTerm::id(obj_a(k))), AdjTerm::id(obj_b(k + 1)));
    }

    int cat1 = 0, cat2 = 0, fun2 = 0, nat1 = 0, nat2 = 0, phigamma = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const AdjTerm& t = pool.any(rng);

        // (cat 1)
        check_equal_arrows(AdjTerm::comp(t, AdjTerm::id(t.dom())), t);
        check_equal_arrows(AdjTerm::comp(AdjTerm::id(t.cod()), t), t);
        ++cat1;

        // (cat 2)
        if (const AdjTerm* g = pool.from(rng, t.cod())) {
            if (const AdjTerm* h = pool.from(rng, g->cod())) {
                check_equal_arrows(AdjTerm::comp(AdjTerm::comp(*h, *g), t),
                                   AdjTerm::comp(*h, AdjTerm::comp(*g, t)));
                ++cat2;
            }
        }

        if (const AdjTerm* s = pool.from(rng, t.cod())) {
            const AdjTerm& u = *s;
            if (t.dom().side == AdjSide::b) {
                // (fun 2) for F, (nat 1) and (nat 2) for gamma_c
                check_equal_arrows(AdjTerm::comp(AdjTerm::f(u), AdjTerm::f(t)),
                                   AdjTerm::f(AdjTerm::comp(u, t)));
                check_equal_arrows(AdjTerm::comp(AdjTerm::gamma_c(u), t),
                                   AdjTerm::gamma_c(AdjTerm::comp(u, t)));
                check_equal_arrows(
                    AdjTerm::comp(AdjTerm::g(AdjTerm::f(u)), AdjTerm::gamma_c(t)),
                    AdjTerm::gamma_c(AdjTerm::comp(u, t)));
                ++fun2;
            } else {
                // (fun 2) for G, (nat 1) and (nat 2) for phi_a
                check_equal_arrows(AdjTerm::comp(AdjTerm::g(u), AdjTerm::g(t)),
                                   AdjTerm::g(AdjTerm::comp(u, t)));
                check_equal_arrows(AdjTerm::comp(u, AdjTerm::phi_a(t)),
                                   AdjTerm::phi_a(AdjTerm::comp(u, t)));
                check_equal_arrows(AdjTerm::comp(AdjTerm::phi_a(u), AdjTerm::f(AdjTerm::g(t))),
                                   AdjTerm::phi_a(AdjTerm::comp(u, t)));
                ++nat1;
                ++nat2;
            }
        }

        // (phi_a gamma_c), both halves
        if (t.dom().side == AdjSide::a) {
            if (const AdjTerm* g = pool.into(rng, obj_b(t.dom().level))) {
                check_equal_arrows(
                    AdjTerm::comp(AdjTerm::phi_a(t), AdjTerm::f(AdjTerm::gamma_c(*g))),
                    AdjTerm::comp(t, AdjTerm::f(*g)));
                ++phigamma;
            }
            if (const AdjTerm* g = pool.into(rng, obj_b(t.dom().level + 1))) {
                check_equal_arrows(
                    AdjTerm::comp(AdjTerm::g(AdjTerm::phi_a(t)), AdjTerm::gamma_c(*g)),
                    AdjTerm::comp(AdjTerm::g(t), *g));
                ++phigamma;
            }
        }
    }
    CHECK(cat1 == 4000);
    CHECK(cat2 > 500);
    CHECK(fun2 > 500);
    CHECK(nat1 > 500);
    CHECK(nat2 > 500);
    CHECK(phigamma > 500);
}

TEST_CASE("from_frieze inverts functor E") {
    CHECK(nf(from_frieze(IndexedFrieze{unit_frieze(), 0, 0})) == "@O");
    CHECK(nf(from_frieze(IndexedFrieze{Frieze{{}, {{-2, -1}}, 0, 2}, 0, 2})) == "C@O");
    CHECK(nf(from_frieze(IndexedFrieze{unit_frieze(), 2, 2})) == "GF@O");
    CHECK(nf(from_frieze(IndexedFrieze{Frieze{{{2, 3}}, {}, 3, 1}, 3, 1})) == "AF@O");

    Frieze d2 = validate({{2, 3}, {4, 5}}, {{-4, -3}, {-6, -5}, {-8, -7}}, {8, 10});
    CHECK(nf(from_frieze(IndexedFrieze{d2, 6, 8})) == "CCCGAAF@O");
    CHECK(nf(from_frieze(IndexedFrieze{d2, 8, 10})) == "GFCCCGAAF@O");

    CHECK_THROWS_AS(from_frieze(IndexedFrieze{unit_frieze(), 1, 2}), ValidationError);
    CHECK_THROWS_AS(from_frieze(IndexedFrieze{Frieze{{{2, 3}}, {}, 3, 1}, 1, 1}),
                    ValidationError);

    std::mt19937 rng(9136604);
    TermPool pool = make_pool(rng, 1200, 400);
    for (int trial = 0; trial < 800; ++trial) {
        const AdjTerm& t = pool.any(rng);
        IndexedFrieze e = functor_E(t);
        AdjTerm back = from_frieze(e);
        CHECK(functor_E(back) == e);
        CHECK(adj_normal_form(back) == adj_normal_form(t));

        AdjWord w = adj_normal_form(t);
        CHECK(adj_dom(w) == t.dom());
        CHECK(adj_cod(w) == t.cod());
        CHECK(adj_normal_form(term_of(w)) == w);
    }
}

TEST_CASE("endomorphism words biject with the endomorphism monoid") {
    const std::vector<std::size_t> counts{1, 1, 3, 10, 35, 126};
    for (int n = 0; n <= 5; ++n)
        CHECK(enumerate_endo_words(n).size() == counts[static_cast<std::size_t>(n)]);

    std::vector<std::string> level2;
    for (const AdjWord& w : enumerate_endo_words(2)) level2.push_back(to_string(w));
    std::sort(level2.begin(), level2.end());
    CHECK(level2 == std::vector<std::string>{"CGAF@O", "GAFC@O", "GFGF@O"});

    for (int n = 0; n <= 4; ++n) {
        std::vector<AdjWord> words = enumerate_endo_words(n);
        std::vector<FriezeKey> images;
        std::map<std::vector<int>, AdjWord> word_by_sigma;
        std::vector<OrdMap> sigmas;
        for (const AdjWord& w : words) {
            CHECK(static_cast<int>(w.syms.size()) == 2 * n);
            AdjTerm t = term_of(w);
            CHECK(adj_normal_form(t) == w);
            IndexedFrieze e = functor_E(t);
            CHECK(e.n == 2 * n);
            CHECK(e.m == 2 * n);
            images.push_back(frieze_key(e.d));
            OrdMap s = functor_S(e);
            word_by_sigma[s.values] = w;
            sigmas.push_back(s);
        }

        std::sort(images.begin(), images.end());
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());

        std::vector<FriezeKey> expected;
        for (const OrdMap& f : enumerate_endos(n)) expected.push_back(frieze_key(functor_D(f).d));
        std::sort(expected.begin(), expected.end());
        CHECK(images == expected);
        CHECK(word_by_sigma.size() == words.size());

        // Composition in B matches composition in O_n, exhaustively.
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = 0; j < words.size(); ++j) {
                AdjTerm t = AdjTerm::comp(term_of(words[j]), term_of(words[i]));
                OrdMap expect = compose(sigmas[i], sigmas[j]);
                CHECK(functor_S(functor_E(t)) == expect);
                CHECK(adj_normal_form(t) == word_by_sigma.at(expect.values));
            }
    }
}

TEST_CASE("G images preserve the last element") {
    IndexedFrieze base = functor_E(AdjTerm::g(AdjTerm::id(obj_a(0))));
    CHECK(has_transversal(base, -2, 2));
    CHECK(functor_S(base) == identity(1));

    std::mt19937 rng(7755211);
    TermPool pool = make_pool(rng, 1500, 300);
    int seen = 0;
    for (const AdjTerm& t : pool.terms) {
        if (t.dom().side != AdjSide::a) continue;
        IndexedFrieze e = functor_E(AdjTerm::g(t));
        CHECK(has_transversal(e, -e.m, e.n));
        OrdMap s = functor_S(e);
        CHECK(s(e.n / 2 - 1) == e.m / 2 - 1);
        ++seen;
    }
    CHECK(seen > 300);
}
