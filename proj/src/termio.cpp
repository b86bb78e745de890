#include "simpend/termio.hpp"

#include <cctype>
#include <string>

#include "simpend/errors.hpp"

namespace simpend {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
};

int read_index(Cursor& c) {
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError("expected an index", c.pos);
    long value = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        value = value * 10 + (c.peek() - '0');
        if (value > 1000000) throw ParseError("index out of range", c.pos);
        ++c.pos;
    }
    return static_cast<int>(value);
}

Term read_atom(Cursor& c, int n) {
    if (c.done()) throw ParseError("expected an atom", c.pos);
    const char head = c.peek();
    if (head == '1') {
        ++c.pos;
        return Term::unit(n);
    }
    if (head != 'p' && head != 'q') throw ParseError("expected 'p', 'q', or '1'", c.pos);
    const Letter letter = head == 'p' ? Letter::p : Letter::q;
    ++c.pos;
    if (!c.done() && c.peek() == '[') {
        ++c.pos;
        const int i = read_index(c);
        if (c.done() || c.peek() != ',') throw ParseError("expected ','", c.pos);
        ++c.pos;
        const int j = read_index(c);
        if (c.done() || c.peek() != ']') throw ParseError("expected ']'", c.pos);
        ++c.pos;
        if (j > i)
            throw IndexError("block indices must descend, got [" + std::to_string(i) + "," +
                             std::to_string(j) + "]");
        Term t = Term::gen(n, letter, i);
        for (int x = i - 1; x >= j; --x) t = Term::comp(t, Term::gen(n, letter, x));
        return t;
    }
    return Term::gen(n, letter, read_index(c));
}

char letter_char(Letter letter) { return letter == Letter::p ? 'p' : 'q'; }

}  // namespace

Term parse_term(const std::string& text, int n) {
    Cursor c{text};
    Term t = read_atom(c, n);
    while (!c.done()) {
        if (c.peek() != '.') throw ParseError("expected '.' or end of input", c.pos);
        ++c.pos;
        t = Term::comp(t, read_atom(c, n));
    }
    return t;
}

std::string to_string(const NormalForm& nf) {
    if (nf.blocks.empty()) return "1";
    std::string out;
    for (const Block& b : nf.blocks) {
        if (!out.empty()) out += '.';
        out += letter_char(b.letter);
        out += '[';
        out += std::to_string(b.i);
        out += ',';
        out += std::to_string(b.j);
        out += ']';
    }
    return out;
}

std::string to_string(const std::vector<GenSymbol>& word) {
    if (word.empty()) return "1";
    std::string out;
    for (const GenSymbol& g : word) {
        if (!out.empty()) out += '.';
        out += letter_char(g.letter);
        out += std::to_string(g.index);
    }
    return out;
}

}  // namespace simpend
