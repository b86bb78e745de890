#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "simpend/freemonad.hpp"
#include "simpend/presentation.hpp"

using namespace simpend;

namespace {

using Sym = MonadWord::Sym;

MonadWord word(std::initializer_list<Sym> syms, int base) {
    return MonadWord{std::vector<Sym>(syms), base};
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

// All composition-free words over Id(0) of type n->m, built by walking the
// admissible (dom, cod) states outward.
void all_words_rec(int d, int c, int n, int m, std::vector<Sym>& stack,
                   std::vector<MonadWord>& out) {
    if (d == n && c == m) {
        MonadWord w;
        w.syms.assign(stack.rbegin(), stack.rend());
        out.push_back(w);
    }
    if (c < m) {
        stack.push_back(Sym::H);
        all_words_rec(d, c + 1, n, m, stack, out);
        stack.pop_back();
    }
    if (d < n && c >= 1 && c <= m) {
        stack.push_back(Sym::M);
        all_words_rec(d + 1, c, n, m, stack, out);
        stack.pop_back();
    }
}

std::vector<MonadWord> all_words(int n, int m) {
    std::vector<Sym> stack;
    std::vector<MonadWord> out;
    all_words_rec(0, 0, n, m, stack, out);
    return out;
}

// Random well-typed term with the given domain.
MonadTerm random_with_dom(std::mt19937_64& rng, int d, int budget) {
    if (budget <= 1) return MonadTerm::id(d);
    switch (std::uniform_int_distribution<int>(0, d >= 1 ? 3 : 2)(rng)) {
        case 0: return MonadTerm::id(d);
        case 1: return MonadTerm::h(random_with_dom(rng, d, budget - 1));
        case 2: {
            MonadTerm f = random_with_dom(rng, d, budget / 2);
            MonadTerm g = random_with_dom(rng, f.cod(), budget - budget / 2 - 1);
            return MonadTerm::comp(g, f);
        }
        default: {
            MonadTerm f = random_with_dom(rng, d - 1, budget - 1);
            if (f.cod() == 0) f = MonadTerm::h(f);
            return MonadTerm::m(f);
        }
    }
}

}  // namespace

TEST_CASE("typing rules are enforced at construction") {
    MonadTerm i0 = MonadTerm::id(0);
    CHECK_THROWS_AS(MonadTerm::m(i0), ValidationError);
    CHECK_THROWS_AS(MonadTerm::comp(MonadTerm::id(1), MonadTerm::id(2)), SizeMismatchError);

    MonadTerm h0 = MonadTerm::h(i0);  // 0 -> 1
    CHECK(h0.dom() == 0);
    CHECK(h0.cod() == 1);
    MonadTerm m0 = MonadTerm::m(h0);  // 1 -> 1
    CHECK(m0.dom() == 1);
    CHECK(m0.cod() == 1);
    MonadTerm c = MonadTerm::comp(m0, m0);
    CHECK(c.dom() == 1);
    CHECK(c.cod() == 1);
}

TEST_CASE("word typing and serialization") {
    MonadWord w = word({Sym::M, Sym::M, Sym::H}, 0);
    CHECK(monad_dom(w) == 2);
    CHECK(monad_cod(w) == 1);
    CHECK(to_string(w) == "MMH@0");
    CHECK(parse_monad_word("MMH@0") == w);
    CHECK(to_string(word({}, 3)) == "@3");
    CHECK(parse_monad_word("@0") == word({}, 0));

    CHECK_THROWS_AS(monad_dom(word({Sym::M}, 0)), ValidationError);
    CHECK_THROWS_AS(parse_monad_word("M@0"), ValidationError);
    CHECK_THROWS_AS(parse_monad_word("MH"), ParseError);
    CHECK_THROWS_AS(parse_monad_word("MH@"), ParseError);
    CHECK_THROWS_AS(parse_monad_word("MH@0x"), ParseError);
    CHECK_THROWS_AS(parse_monad_word("XMH@0"), ParseError);
}

TEST_CASE("eliminate_composition on the pinned terms") {
    MonadTerm mh0 = MonadTerm::m(MonadTerm::h(MonadTerm::id(0)));  // 1 -> 1

    CHECK(eliminate_composition(MonadTerm::comp(mh0, MonadTerm::id(1))) ==
          word({Sym::M, Sym::H}, 0));

    // H(Id 1) o f = H f by (H) then (cat 1).
    CHECK(eliminate_composition(MonadTerm::comp(MonadTerm::h(MonadTerm::id(1)), mh0)) ==
          word({Sym::H, Sym::M, Sym::H}, 0));

    // Identity o identity, resolved by (M), (HM), (cat 1) in three steps.
    MonadTerm t = MonadTerm::comp(mh0, mh0);
    int steps = 0;
    int degree = composition_degree(t);
    MonadTerm cur = t;
    while (auto next = eliminate_step(cur)) {
        int d = composition_degree(*next);
        REQUIRE(d < degree);
        degree = d;
        cur = *next;
        ++steps;
    }
    CHECK(steps == 3);
    CHECK(eliminate_composition(t) == word({Sym::M, Sym::H}, 0));
}

TEST_CASE("composition degree counts the comp subterm lengths") {
    MonadTerm mh0 = MonadTerm::m(MonadTerm::h(MonadTerm::id(0)));
    CHECK(term_length(mh0) == 3);
    CHECK(composition_degree(mh0) == 0);
    MonadTerm c = MonadTerm::comp(mh0, mh0);
    CHECK(term_length(c) == 7);
    CHECK(composition_degree(c) == 7);
    CHECK(composition_degree(MonadTerm::h(c)) == 7);
    CHECK(composition_degree(MonadTerm::comp(c, MonadTerm::id(1))) == 7 + 9);
}

TEST_CASE("a step happens under H and M as well") {
    MonadTerm inner = MonadTerm::comp(MonadTerm::id(1), MonadTerm::id(1));
    auto s = eliminate_step(MonadTerm::h(inner));
    REQUIRE(s.has_value());
    CHECK(s->kind() == MonadTerm::Kind::h);
    CHECK(s->arg().kind() == MonadTerm::Kind::id);
    CHECK(!eliminate_step(MonadTerm::h(MonadTerm::id(1))).has_value());
}

TEST_CASE("monad_normal_form rebases to Id(0)") {
    CHECK(monad_normal_form(MonadTerm::id(1)) == word({Sym::M, Sym::H}, 0));
    CHECK(monad_normal_form(MonadTerm::id(0)) == word({}, 0));
    CHECK(monad_normal_form(MonadTerm::id(2)) == word({Sym::M, Sym::H, Sym::M, Sym::H}, 0));
    // Types survive the rebasing.
    MonadWord nf = monad_normal_form(MonadTerm::id(3));
    CHECK(monad_dom(nf) == 3);
    CHECK(monad_cod(nf) == 3);
}

TEST_CASE("functor_G on the pinned terms") {
    MonadTerm h0 = MonadTerm::h(MonadTerm::id(0));
    CHECK(functor_G(h0) == OrdMap(0, 1, {}));
    CHECK(functor_G(MonadTerm::m(h0)) == identity(1));
    CHECK(functor_G(MonadTerm::m(MonadTerm::m(h0))) == OrdMap(2, 1, {0, 0}));
    // Functoriality on a sample composite.
    MonadTerm f = MonadTerm::m(MonadTerm::h(h0));      // 1 -> 2
    MonadTerm g = MonadTerm::m(MonadTerm::m(h0));      // 2 -> 1
    CHECK(functor_G(MonadTerm::comp(g, f)) == compose(functor_G(f), functor_G(g)));
}

TEST_CASE("from_ordmap on the pinned maps") {
    CHECK(to_string(from_ordmap(OrdMap(0, 2, {}))) == "HH@0");
    CHECK(to_string(from_ordmap(OrdMap(2, 1, {0, 0}))) == "MMH@0");
    CHECK(to_string(from_ordmap(identity(1))) == "MH@0");
}

TEST_CASE("from_ordmap and functor_G are inverse bijections for n,m <= 5") {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            auto words = all_words(n, m);
            auto maps = all_maps(n, m);
            CHECK(words.size() == maps.size());
            std::set<std::vector<int>> images;
            for (const MonadWord& w : words) {
                REQUIRE(monad_dom(w) == n);
                REQUIRE(monad_cod(w) == m);
                OrdMap g = functor_G(w);
                images.insert(g.values);
                CHECK(from_ordmap(g) == w);
            }
            CHECK(images.size() == words.size());
            for (const OrdMap& f : maps) {
                MonadWord w = from_ordmap(f);
                CHECK(monad_dom(w) == n);
                CHECK(monad_cod(w) == m);
                CHECK(functor_G(w) == f);
            }
        }
}

TEST_CASE("monad laws hold under G, and as normal forms") {
    auto eta = [](int a) { return MonadTerm::h(MonadTerm::id(a)); };
    auto mu = [](int a) { return MonadTerm::m(MonadTerm::id(a + 1)); };
    auto T = [](const MonadTerm& f) { return MonadTerm::m(MonadTerm::h(f)); };
    for (int a = 0; a <= 5; ++a) {
        MonadTerm unit_left = MonadTerm::comp(mu(a), eta(a + 1));
        MonadTerm unit_right = MonadTerm::comp(mu(a), T(eta(a)));
        CHECK(functor_G(unit_left) == identity(a + 1));
        CHECK(functor_G(unit_right) == identity(a + 1));
        CHECK(monad_normal_form(unit_left) == monad_normal_form(MonadTerm::id(a + 1)));
        CHECK(monad_normal_form(unit_right) == monad_normal_form(MonadTerm::id(a + 1)));

        MonadTerm assoc_left = MonadTerm::comp(mu(a), mu(a + 1));
        MonadTerm assoc_right = MonadTerm::comp(mu(a), T(mu(a)));
        CHECK(functor_G(assoc_left) == functor_G(assoc_right));
        CHECK(monad_normal_form(assoc_left) == monad_normal_form(assoc_right));
    }
}

TEST_CASE("embedded generators project to the presentation generators") {
    CHECK(to_string(monad_normal_form(embedded_generator(2, Letter::p, 0))) == "HMMH@0");
    CHECK(to_string(monad_normal_form(embedded_generator(2, Letter::q, 0))) == "MMHH@0");
    CHECK(to_string(monad_normal_form(embedded_generator(3, Letter::p, 0))) == "MHHMMH@0");
    CHECK(functor_G(embedded_generator(3, Letter::p, 0)) == OrdMap(3, 3, {0, 0, 2}));
    CHECK_THROWS_AS(embedded_generator(2, Letter::p, 1), IndexError);

    for (int n = 2; n <= 8; ++n)
        for (Letter letter : {Letter::p, Letter::q})
            for (int i = 0; i <= n - 2; ++i) {
                MonadTerm t = embedded_generator(n, letter, i);
                CHECK(t.dom() == n);
                CHECK(t.cod() == n);
                CHECK(functor_G(t) == generator(n, letter, i));
                CHECK(functor_G(t) == sigma(Term::gen(n, letter, i)));
            }
}

TEST_CASE("G is preserved by elimination on random terms") {
    std::mt19937_64 rng(40925511);
    for (int iter = 0; iter < 5000; ++iter) {
        int d = std::uniform_int_distribution<int>(0, 4)(rng);
        MonadTerm t = random_with_dom(rng, d, 30);
        OrdMap g = functor_G(t);
        MonadWord w = eliminate_composition(t);
        CHECK(monad_dom(w) == t.dom());
        CHECK(monad_cod(w) == t.cod());
        CHECK(functor_G(w) == g);
        MonadWord nf = monad_normal_form(t);
        CHECK(nf.base == 0);
        CHECK(functor_G(nf) == g);
        CHECK(from_ordmap(g) == nf);
    }
}
