#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "simpend/adjunction.hpp"
#include "simpend/errors.hpp"
#include "simpend/frieze.hpp"
#include "simpend/ordmap.hpp"
#include "simpend/presentation.hpp"
#include "simpend/render.hpp"
#include "simpend/serial.hpp"
#include "simpend/temperleylieb.hpp"
#include "simpend/termio.hpp"

using namespace simpend;

namespace {

std::size_t parse_pos(const std::string& text, int n) {
    try {
        parse_term(text, n);
    } catch (const ParseError& e) {
        return e.position;
    }
    return static_cast<std::size_t>(-1);
}

std::size_t count_sub(const std::string& s, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("parse_term reads atoms, blocks, and chains") {
    const Term t = parse_term("p0.q0", 2);
    CHECK(t.kind() == Term::Kind::comp);
    CHECK(t.rank() == 2);
    CHECK(t.left().kind() == Term::Kind::gen);
    CHECK(t.left().letter() == Letter::p);
    CHECK(t.left().index() == 0);
    CHECK(t.right().letter() == Letter::q);
    CHECK(t.right().index() == 0);

    const Term b = parse_term("p[1,0]", 3);
    CHECK(b.kind() == Term::Kind::comp);
    CHECK(b.left().letter() == Letter::p);
    CHECK(b.left().index() == 1);
    CHECK(b.right().index() == 0);

    const Term b3 = parse_term("p[2,0]", 4);
    CHECK(b3.right().index() == 0);
    CHECK(b3.left().kind() == Term::Kind::comp);
    CHECK(b3.left().left().index() == 2);
    CHECK(b3.left().right().index() == 1);

    CHECK(parse_term("1", 0).kind() == Term::Kind::unit);
    CHECK(parse_term("p[0,0]", 2).kind() == Term::Kind::gen);
    CHECK(parse_term("1.p0", 2).left().kind() == Term::Kind::unit);

    CHECK(sigma(parse_term("q[3,1]", 5)) ==
          sigma(Term::from_word(5, {{Letter::q, 3}, {Letter::q, 2}, {Letter::q, 1}})));

    CHECK(to_string(normalize(parse_term("p0.q0", 2)).nf) == "p[0,0]");
}

TEST_CASE("parse_term rejects junk with positions") {
    CHECK(parse_pos("", 2) == 0);
    CHECK(parse_pos(".p0", 2) == 0);
    CHECK(parse_pos("x0", 2) == 0);
    CHECK(parse_pos("p", 2) == 1);
    CHECK(parse_pos("p0 .q0", 2) == 2);
    CHECK(parse_pos("p1q0", 4) == 2);
    CHECK(parse_pos("p0.", 2) == 3);
    CHECK(parse_pos("p0..q0", 2) == 3);
    CHECK(parse_pos("p[1;0]", 3) == 3);
    CHECK(parse_pos("p[1,0", 3) == 5);
    CHECK(parse_pos("p[1,0]]", 3) == 6);
    CHECK_THROWS_AS(parse_term("p99999999999999999", 3), ParseError);

    CHECK_THROWS_AS(parse_term("p5", 3), IndexError);
    CHECK_THROWS_AS(parse_term("p0", 1), IndexError);
    CHECK_THROWS_AS(parse_term("q[0,1]", 3), IndexError);
    CHECK_THROWS_AS(parse_term("p[3,1]", 3), IndexError);
}

TEST_CASE("normal forms and generator words print in the term grammar") {
    CHECK(to_string(NormalForm{15, {Block{Letter::p, 1, 0}, Block{Letter::q, 8, 6}}}) ==
          "p[1,0].q[8,6]");
    CHECK(to_string(NormalForm{0, {}}) == "1");
    CHECK(to_string(std::vector<GenSymbol>{}) == "1");
    CHECK(to_string(std::vector<GenSymbol>{{Letter::p, 1}, {Letter::q, 0}}) == "p1.q0");
    CHECK(to_string(decompose(sigma(parse_term("p0.q0", 2)))) == "p0");
}

TEST_CASE("parse and format round trip on all normal forms through rank 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const NormalForm& nf : enumerate_normal_forms(n)) {
            const std::string text = to_string(nf);
            CHECK(normalize(parse_term(text, n)).nf == nf);
        }
    }
}

TEST_CASE("json round trips and pinned shapes") {
    const OrdMap f(3, 2, {0, 0, 1});
    CHECK(to_json(f).dump() == R"({"m":2,"n":3,"values":[0,0,1]})");
    CHECK(ordmap_from_json(to_json(f)) == f);
    for (const OrdMap& e : enumerate_endos(4)) CHECK(ordmap_from_json(to_json(e)) == e);

    const OrdEndoN germ({0, 0}, 2, 1);
    CHECK(to_json(germ).dump() == R"({"prefix":[0],"type":[1,0]})");
    CHECK(endo_from_json(to_json(germ)) == germ);

    const Frieze d2 = validate({{2, 3}}, {{-4, -3}}, {4, 4});
    CHECK(to_json(d2).dump() == R"({"caps":[[-4,-3]],"cups":[[2,3]],"type":[4,4]})");
    CHECK(frieze_from_json(to_json(d2)) == d2);
    for (const OrdMap& e : enumerate_endos(3)) {
        const Frieze d = functor_D(e).d;
        CHECK(frieze_from_json(to_json(d)) == d);
    }

    const TLDiagram h1 = tl_generator(2, TLGen::h(1));
    CHECK(to_json(h1).dump() == R"({"circles":0,"n":2,"pairs":[[["b",1],["b",2]],[["t",2],["t",1]]]})");
    CHECK(tl_from_json(to_json(h1)) == h1);
    const TLDiagram looped = eval_word(TLWord{2, {TLGen::h(1), TLGen::h(1)}}, TLMode::K);
    CHECK(looped.circles == 1);
    CHECK(tl_from_json(to_json(looped)) == looped);

    CHECK_THROWS_AS(ordmap_from_json(nlohmann::json::parse(R"({"n":2,"m":2})")),
                    nlohmann::json::exception);
    CHECK_THROWS_AS(ordmap_from_json(nlohmann::json::parse(R"({"n":2,"m":2,"values":"xy"})")),
                    nlohmann::json::exception);
    CHECK_THROWS_AS(ordmap_from_json(nlohmann::json::parse(R"({"n":2,"m":2,"values":[1,0]})")),
                    ValidationError);
    CHECK_THROWS_AS(frieze_from_json(nlohmann::json::parse(R"({"cups":[],"caps":[],"type":[1,2,3]})")),
                    ValidationError);
    CHECK_THROWS_AS(
        tl_from_json(nlohmann::json::parse(R"({"n":1,"pairs":[[["x",1],["b",1]]],"circles":0})")),
        ValidationError);
}

TEST_CASE("svg rendering pins geometry") {
    const Frieze d2 = validate({{2, 3}}, {{-4, -3}}, {4, 4});
    const std::string s = render_svg(d2, 4);
    CHECK(s.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                 "width=\"100\" height=\"140\"") != std::string::npos);
    CHECK(s.find("M 40 20 A 10 10 0 0 1 60 20") != std::string::npos);
    CHECK(s.find("M 60 120 A 10 10 0 0 0 80 120") != std::string::npos);
    CHECK(s.find("<line x1=\"80\" y1=\"20\" x2=\"40\" y2=\"120\"/>") != std::string::npos);
    CHECK(s.find("<line x1=\"20\" y1=\"20\" x2=\"20\" y2=\"120\"/>") != std::string::npos);
    CHECK(count_sub(s, "<line") == 2);
    CHECK(s.find("<text x=\"20\" y=\"12\">1</text>") != std::string::npos);
    CHECK(s.find(">-1</text>") != std::string::npos);

    const std::string plain = render_svg(unit_frieze(), 3);
    CHECK(count_sub(plain, "<line") == 3);
    CHECK(count_sub(plain, "<path") == 0);
    CHECK(count_sub(plain, "<circle") == 6);
}

TEST_CASE("ascii rendering draws the grid") {
    CHECK(render_ascii(unit_frieze(), 2) ==
          "  1   2\n"
          "  |   |\n"
          "  |   |\n"
          "  |   |\n"
          "  |   |\n"
          "  |   |\n"
          "  |   |\n"
          "  |   |\n"
          " -1  -2\n");

    const Frieze d2 = validate({{2, 3}}, {{-4, -3}}, {4, 4});
    CHECK(render_ascii(d2, 4) ==
          "  1   2   3   4\n"
          "  |   \\___/   /\n"
          "  |          /\n"
          "  |        /\n"
          "  |       /\n"
          "  |      /\n"
          "  |    /\n"
          "  |   /   /---\\\n"
          " -1  -2  -3  -4\n");
}
