#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "simpend/adjunction.hpp"
#include "simpend/errors.hpp"
#include "simpend/freemonad.hpp"
#include "simpend/frieze.hpp"
#include "simpend/ordmap.hpp"
#include "simpend/presentation.hpp"
#include "simpend/render.hpp"
#include "simpend/serial.hpp"
#include "simpend/temperleylieb.hpp"
#include "simpend/termio.hpp"
#include "simpend/verify.hpp"

using namespace simpend;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 2 parse, 3 validation, 4 verification failure.
constexpr int kOk = 0;
constexpr int kParseExit = 2;
constexpr int kValidationExit = 3;
constexpr int kVerifyExit = 4;

json parse_json(const std::string& text) { return json::parse(text); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    return !text.empty() && text.front() == '{';
}

// The conversion hub. Every representation goes through an OrdMap; rank is
// needed only where the text form does not carry it.
OrdMap to_map(const std::string& from, const std::string& input, int n, bool has_n) {
    if (from == "term") {
        if (!has_n) throw ValidationError("--n is required when reading a term");
        return sigma(parse_term(input, n));
    }
    if (from == "map") return ordmap_from_json(parse_json(input));
    if (from == "monad-word") return functor_G(parse_monad_word(input));
    if (from == "adj-word") return functor_S(functor_E(term_of(parse_adj_word(input))));
    if (from == "frieze") {
        if (!has_n) throw ValidationError("--n is required when reading a frieze");
        const Frieze d = frieze_from_json(parse_json(input));
        return functor_S(IndexedFrieze{d, 2 * n, 2 * n - (d.type_n - d.type_m)});
    }
    if (from == "tl-word")
        throw ValidationError("tl-word is write-only: the embedding has no exposed inverse");
    throw ValidationError("unknown representation: " + from);
}

std::string from_map(const std::string& to, const OrdMap& f) {
    const auto endo_term = [&f]() {
        if (!f.is_endo())
            throw ValidationError("terms denote endomorphisms, got type (" +
                                  std::to_string(f.n) + ", " + std::to_string(f.m) + ")");
        return term_of(normal_form_of_endo(f));
    };
    if (to == "term") return to_string(normal_form_of_endo(f));
    if (to == "map") return to_json(f).dump();
    if (to == "monad-word") return to_string(from_ordmap(f));
    if (to == "adj-word") return to_string(adj_normal_form(from_frieze(functor_D(f))));
    if (to == "frieze") return to_json(functor_D(f).d).dump();
    if (to == "tl-word") return to_string(embed_term(endo_term()));
    throw ValidationError("unknown representation: " + to);
}

struct Options {
    int n = 0;
    bool has_n = false;
    std::string term;
    std::string other;
    std::string input;
    std::string from;
    std::string to;
    std::string file1;
    std::string file2;
    std::string suite;
    std::string format;
    bool trace = false;
    bool count_only = false;
};

int run_normalize(const Options& opt) {
    const NormalizeResult res = normalize(parse_term(opt.term, opt.n));
    if (opt.format == "json") {
        json out{{"normal_form", to_string(res.nf)}};
        if (opt.trace) {
            json steps = json::array();
            for (const TraceStep& s : res.trace)
                steps.push_back(json{{"eq", to_string(s.eq)}, {"pos", s.pos}});
            out["trace"] = steps;
        }
        std::cout << out.dump() << "\n";
        return kOk;
    }
    if (opt.trace)
        for (const TraceStep& s : res.trace)
            std::cout << to_string(s.eq) << " @ " << s.pos << "\n";
    std::cout << to_string(res.nf) << "\n";
    return kOk;
}

int run_eq(const Options& opt) {
    const bool same = equal(parse_term(opt.term, opt.n), parse_term(opt.other, opt.n));
    if (opt.format == "json")
        std::cout << json{{"equal", same}}.dump() << "\n";
    else
        std::cout << (same ? "true" : "false") << "\n";
    return kOk;
}

int run_eval(const Options& opt) {
    std::cout << to_json(sigma(parse_term(opt.term, opt.n))).dump() << "\n";
    return kOk;
}

int run_decompose(const Options& opt) {
    OrdMap f;
    if (looks_like_json(opt.input)) {
        f = ordmap_from_json(parse_json(opt.input));
    } else {
        if (!opt.has_n) throw ValidationError("--n is required when decomposing a term");
        f = sigma(parse_term(opt.input, opt.n));
    }
    const std::vector<GenSymbol> word = decompose(f);
    if (opt.format == "json") {
        json out = json::array();
        for (const GenSymbol& g : word)
            out.push_back((g.letter == Letter::p ? "p" : "q") + std::to_string(g.index));
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(word) << "\n";
    }
    return kOk;
}

int run_convert(const Options& opt) {
    std::cout << from_map(opt.to, to_map(opt.from, opt.input, opt.n, opt.has_n)) << "\n";
    return kOk;
}

int run_frieze_compose(const Options& opt) {
    const Frieze d1 = frieze_from_json(parse_json(read_file(opt.file1)));
    const Frieze d2 = frieze_from_json(parse_json(read_file(opt.file2)));
    std::cout << to_json(compose(d1, d2)).dump() << "\n";
    return kOk;
}

int run_render(const Options& opt) {
    Frieze d;
    int w = 0;
    if (looks_like_json(opt.input)) {
        d = frieze_from_json(parse_json(opt.input));
        w = std::max({d.type_n, d.type_m, 2});
    } else {
        if (!opt.has_n) throw ValidationError("--n is required when rendering a term");
        d = functor_D(sigma(parse_term(opt.input, opt.n))).d;
        w = 2 * opt.n;
    }
    std::cout << (opt.format == "ascii" ? render_ascii(d, w) : render_svg(d, w));
    return kOk;
}

int run_enumerate(const Options& opt) {
    const std::vector<NormalForm> nfs = enumerate_normal_forms(opt.n);
    if (opt.count_only) {
        if (opt.format == "json")
            std::cout << json{{"count", nfs.size()}}.dump() << "\n";
        else
            std::cout << nfs.size() << "\n";
        return kOk;
    }
    if (opt.format == "json") {
        json out = json::array();
        for (const NormalForm& nf : nfs) out.push_back(to_string(nf));
        std::cout << out.dump() << "\n";
        return kOk;
    }
    for (const NormalForm& nf : nfs) std::cout << to_string(nf) << "\n";
    return kOk;
}

int run_verify(const Options& opt) {
    std::vector<std::string> suites;
    if (opt.suite == "all")
        suites = verify_suite_names();
    else
        suites.push_back(opt.suite);
    int failures = 0;
    for (const std::string& suite : suites)
        for (const CheckResult& r : verify_suite(suite)) {
            if (r.passed) {
                std::cout << "ok   " << suite << "/" << r.name << "\n";
            } else {
                std::cout << "FAIL " << suite << "/" << r.name << ": " << r.detail << "\n";
                ++failures;
            }
        }
    if (failures > 0) {
        std::cout << failures << " check(s) failed\n";
        return kVerifyExit;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations in the monoids of simplicial endomorphisms"};
    app.require_subcommand(1);
    Options opt;

    const auto add_n = [&](CLI::App* cmd, bool required) {
        CLI::Option* o = cmd->add_option("--n", opt.n, "ambient rank");
        if (required)
            o->required();
        else
            o->each([&](const std::string&) { opt.has_n = true; });
        return o;
    };
    std::map<const CLI::App*, std::string> format_fallback;
    const auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& allowed,
                                const std::string& fallback) {
        format_fallback[cmd] = fallback;
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(allowed));
    };

    CLI::App* normalize_cmd = app.add_subcommand("normalize", "rewrite a term to normal form");
    add_n(normalize_cmd, true);
    normalize_cmd->add_option("term", opt.term)->required();
    normalize_cmd->add_flag("--trace", opt.trace, "print the applied equations");
    add_format(normalize_cmd, {"text", "json"}, "text");

    CLI::App* eq_cmd = app.add_subcommand("eq", "decide equality of two terms");
    add_n(eq_cmd, true);
    eq_cmd->add_option("lhs", opt.term)->required();
    eq_cmd->add_option("rhs", opt.other)->required();
    add_format(eq_cmd, {"text", "json"}, "text");

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a term to its map");
    add_n(eval_cmd, true);
    eval_cmd->add_option("term", opt.term)->required();
    add_format(eval_cmd, {"text", "json"}, "json");

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "factor a term or map JSON into generators");
    add_n(decompose_cmd, false);
    decompose_cmd->add_option("input", opt.input)->required();
    add_format(decompose_cmd, {"text", "json"}, "text");

    CLI::App* convert_cmd = app.add_subcommand("convert", "translate between representations");
    const std::vector<std::string> reps{"term", "map", "monad-word", "adj-word", "frieze",
                                        "tl-word"};
    add_n(convert_cmd, false);
    convert_cmd->add_option("--from", opt.from, "input representation")
        ->required()
        ->check(CLI::IsMember(reps));
    convert_cmd->add_option("--to", opt.to, "output representation")
        ->required()
        ->check(CLI::IsMember(reps));
    convert_cmd->add_option("input", opt.input)->required();

    CLI::App* compose_cmd =
        app.add_subcommand("frieze-compose", "compose two frieze JSON files");
    compose_cmd->add_option("first", opt.file1)->required();
    compose_cmd->add_option("second", opt.file2)->required();
    add_format(compose_cmd, {"json"}, "json");

    CLI::App* render_cmd = app.add_subcommand("render", "draw a term or frieze JSON");
    add_n(render_cmd, false);
    render_cmd->add_option("input", opt.input)->required();
    add_format(render_cmd, {"svg", "ascii"}, "svg");

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list the monoid in normal form");
    add_n(enumerate_cmd, true);
    enumerate_cmd->add_flag("--count-only", opt.count_only, "print only the count");
    add_format(enumerate_cmd, {"text", "json"}, "text");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", opt.suite, "presentation | monad | adjunction | frieze | tl-embedding | all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseExit;
    }

    for (const CLI::App* sub : app.get_subcommands())
        if (const auto it = format_fallback.find(sub);
            it != format_fallback.end() && sub->count("--format") == 0)
            opt.format = it->second;

    try {
        if (normalize_cmd->parsed()) return run_normalize(opt);
        if (eq_cmd->parsed()) return run_eq(opt);
        if (eval_cmd->parsed()) return run_eval(opt);
        if (decompose_cmd->parsed()) return run_decompose(opt);
        if (convert_cmd->parsed()) return run_convert(opt);
        if (compose_cmd->parsed()) return run_frieze_compose(opt);
        if (render_cmd->parsed()) return run_render(opt);
        if (enumerate_cmd->parsed()) return run_enumerate(opt);
        if (verify_cmd->parsed()) return run_verify(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseExit;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseExit;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationExit;
    }
    return kOk;
}
