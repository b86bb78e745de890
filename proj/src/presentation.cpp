#include "simpend/presentation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace simpend {

Term Term::unit(int n) {
    if (n < 0) throw ValidationError("negative rank");
    auto node = std::make_shared<Node>();
    node->kind = Kind::unit;
    node->rank = n;
    return Term(std::move(node));
}

Term Term::gen(int n, Letter letter, int index) {
    if (n < 2) throw IndexError("rank " + std::to_string(n) + " has no generators");
    if (index < 0 || index > n - 2)
        throw IndexError("generator index " + std::to_string(index) + " outside 0.." +
                         std::to_string(n - 2));
    auto node = std::make_shared<Node>();
    node->kind = Kind::gen;
    node->rank = n;
    node->letter = letter;
    node->index = index;
    return Term(std::move(node));
}

Term Term::comp(const Term& x, const Term& y) {
    if (x.rank() != y.rank()) throw SizeMismatchError(x.rank(), y.rank());
    auto node = std::make_shared<Node>();
    node->kind = Kind::comp;
    node->rank = x.rank();
    node->left = std::make_shared<const Term>(x);
    node->right = std::make_shared<const Term>(y);
    return Term(std::move(node));
}

Term Term::from_word(int n, const std::vector<GenSymbol>& word) {
    if (word.empty()) return unit(n);
    Term t = gen(n, word[0].letter, word[0].index);
    for (std::size_t k = 1; k < word.size(); ++k)
        t = comp(t, gen(n, word[k].letter, word[k].index));
    return t;
}

std::string to_string(EquationId eq) {
    switch (eq) {
        case EquationId::Ipp: return "Ipp";
        case EquationId::IIpp: return "IIpp";
        case EquationId::III1pp: return "III.1pp";
        case EquationId::III2pp: return "III.2pp";
        case EquationId::III3pp: return "III.3pp";
        case EquationId::Iqq: return "Iqq";
        case EquationId::IIqq: return "IIqq";
        case EquationId::Ipq: return "Ipq";
        case EquationId::II1pq: return "II.1pq";
        case EquationId::II11pq: return "II.1.1pq";
        case EquationId::II2pq: return "II.2pq";
        case EquationId::II21pq: return "II.2.1pq";
        case EquationId::II3pq: return "II.3pq";
        case EquationId::II4pq: return "II.4pq";
        case EquationId::Iqp: return "Iqp";
        case EquationId::II1qp: return "II.1qp";
        case EquationId::II11qp: return "II.1.1qp";
        case EquationId::II2qp: return "II.2qp";
        case EquationId::II3qp: return "II.3qp";
        case EquationId::II31qp: return "II.3.1qp";
        case EquationId::II4qp: return "II.4qp";
        case EquationId::unit: return "1";
    }
    return "?";
}

namespace {

void check_block(const Block& b) {
    if (b.j < 0 || b.j > b.i) throw ValidationError("malformed block");
}

void flatten(const Term& t, std::vector<std::optional<Block>>& out) {
    switch (t.kind()) {
        case Term::Kind::unit:
            out.push_back(std::nullopt);
            return;
        case Term::Kind::gen:
            out.push_back(Block{t.letter(), t.index(), t.index()});
            return;
        case Term::Kind::comp:
            flatten(t.left(), out);
            flatten(t.right(), out);
            return;
    }
}

bool is_redex_pair(const Block& a, const Block& b) {
    if (a.letter == b.letter) return b.i <= a.i || b.j <= a.j;  // (rr)
    if (a.letter == Letter::p) return b.j <= a.i + 1;           // (pq)
    return b.j <= a.i;                                          // (qp)
}

std::optional<RedexInfo> classify_impl(const Block& a, const Block& b) {
    if (!is_redex_pair(a, b)) return std::nullopt;
    if (a.letter == b.letter) {
        const int i = a.i, j = a.j, k = b.i, l = b.j;
        if (a.letter == Letter::p) {
            if (k + 1 < j) return RedexInfo{RedexSort::rr, EquationId::Ipp};
            if (k <= j) return RedexInfo{RedexSort::rr, EquationId::IIpp};
            // j < k from here on
            if (l <= j) {
                if (k <= i) return RedexInfo{RedexSort::rr, EquationId::III1pp};
                return RedexInfo{RedexSort::rr, EquationId::III2pp};
            }
            return RedexInfo{RedexSort::rr, EquationId::III3pp};  // j < l, k <= i
        }
        (void)i;
        (void)l;
        if (k + 1 < j) return RedexInfo{RedexSort::rr, EquationId::Iqq};
        return RedexInfo{RedexSort::rr, EquationId::IIqq};
    }
    if (a.letter == Letter::p) {
        // a = p^[k,l], b = q^[i,j]; j <= k+1 is the redex condition.
        const int k = a.i, l = a.j, i = b.i, j = b.j;
        if (i < l) return RedexInfo{RedexSort::pq, EquationId::Ipq};
        if (l + 1 < j) {
            if (i <= k)
                return RedexInfo{RedexSort::pq, j < i ? EquationId::II1pq : EquationId::II11pq};
            return RedexInfo{RedexSort::pq, EquationId::II3pq};
        }
        if (i <= k) return RedexInfo{RedexSort::pq, j < i ? EquationId::II2pq : EquationId::II21pq};
        return RedexInfo{RedexSort::pq, EquationId::II4pq};
    }
    // a = q^[i,j], b = p^[k,l]; l <= i is the redex condition.
    const int i = a.i, j = a.j, k = b.i, l = b.j;
    if (k + 1 < j) return RedexInfo{RedexSort::qp, EquationId::Iqp};
    if (l < j) {
        if (i < k)
            return RedexInfo{RedexSort::qp, j < i ? EquationId::II1qp : EquationId::II11qp};
        return RedexInfo{RedexSort::qp, j < i ? EquationId::II3qp : EquationId::II31qp};
    }
    if (i < k) return RedexInfo{RedexSort::qp, EquationId::II2qp};
    return RedexInfo{RedexSort::qp, EquationId::II4qp};
}

std::once_flag startup_check;

}  // namespace

std::vector<Block> redex_rhs(EquationId eq, const Block& a, const Block& b) {
    auto P = [](int i, int j) { return Block{Letter::p, i, j}; };
    auto Q = [](int i, int j) { return Block{Letter::q, i, j}; };
    switch (eq) {
        case EquationId::Ipp:
        case EquationId::Iqq:
        case EquationId::Ipq:
        case EquationId::Iqp:
            return {b, a};
        // a = p^[i,j], b = p^[k,l]
        case EquationId::IIpp: return {P(a.i, b.j)};
        case EquationId::III1pp: return {P(b.i - 1, b.j), P(a.i, a.j + 1)};
        case EquationId::III2pp: return {P(a.i, b.j), P(b.i, a.j + 1)};
        case EquationId::III3pp: return {P(b.i - 1, a.j), P(a.i, b.j)};
        // a = q^[i,j], b = q^[k,l]
        case EquationId::IIqq: return {Q(std::max(a.i, b.i), std::min(a.j, b.j))};
        // a = p^[k,l], b = q^[i,j]
        case EquationId::II1pq: return {P(b.j - 2, a.j), Q(b.i - 1, b.j), P(a.i, b.i)};
        case EquationId::II11pq: return {P(b.j - 2, a.j), P(a.i, b.i)};
        case EquationId::II2pq: return {Q(b.i - 1, b.j), P(a.i, b.i)};
        case EquationId::II21pq: return {P(a.i, b.i)};
        case EquationId::II3pq: return {P(b.j - 2, a.j), Q(b.i, b.j)};
        case EquationId::II4pq: return {Q(b.i, b.j)};
        // a = q^[i,j], b = p^[k,l]
        case EquationId::II1qp: return {P(a.j - 1, b.j), Q(a.i, a.j + 1), P(b.i, a.i + 1)};
        case EquationId::II11qp: return {P(a.j - 1, b.j), P(b.i, a.i + 1)};
        case EquationId::II2qp: return {Q(a.i, a.j), P(b.i, a.i + 1)};
        case EquationId::II3qp: return {P(a.j - 1, b.j), Q(a.i, a.j + 1)};
        case EquationId::II31qp: return {P(a.j - 1, b.j)};
        case EquationId::II4qp: return {Q(a.i, a.j)};
        case EquationId::unit: break;
    }
    throw std::logic_error("no block right-hand side for this equation");
}

void verify_redex_classification(int max_rank) {
    // Literal transcription of every side condition, kept separate from
    // classify_impl's branch structure so the two can disagree.
    using Pred = std::function<bool(const Block&, const Block&)>;
    struct Row {
        EquationId eq;
        Pred holds;
    };
    auto pp = [](const Block& a, const Block& b) {
        return a.letter == Letter::p && b.letter == Letter::p;
    };
    auto qq = [](const Block& a, const Block& b) {
        return a.letter == Letter::q && b.letter == Letter::q;
    };
    auto pq = [](const Block& a, const Block& b) {
        return a.letter == Letter::p && b.letter == Letter::q;
    };
    auto qp = [](const Block& a, const Block& b) {
        return a.letter == Letter::q && b.letter == Letter::p;
    };
    const std::vector<Row> rows = {
        {EquationId::Ipp, [&](const Block& a, const Block& b) { return pp(a, b) && b.i + 1 < a.j; }},
        {EquationId::IIpp,
         [&](const Block& a, const Block& b) { return pp(a, b) && b.i <= a.j && a.j <= b.i + 1; }},
        {EquationId::III1pp,
         [&](const Block& a, const Block& b) {
             return pp(a, b) && b.j <= a.j && a.j < b.i && b.i <= a.i;
         }},
        {EquationId::III2pp,
         [&](const Block& a, const Block& b) {
             return pp(a, b) && b.j <= a.j && a.j <= a.i && a.i < b.i;
         }},
        {EquationId::III3pp,
         [&](const Block& a, const Block& b) {
             return pp(a, b) && a.j < b.j && b.j <= b.i && b.i <= a.i;
         }},
        {EquationId::Iqq, [&](const Block& a, const Block& b) { return qq(a, b) && b.i + 1 < a.j; }},
        {EquationId::IIqq,
         [&](const Block& a, const Block& b) {
             return qq(a, b) && a.j <= b.i + 1 && (b.j <= a.j || b.i <= a.i);
         }},
        // a = p^[k,l], b = q^[i,j]: k=a.i, l=a.j, i=b.i, j=b.j
        {EquationId::Ipq,
         [&](const Block& a, const Block& b) { return pq(a, b) && b.j <= a.i + 1 && b.i < a.j; }},
        {EquationId::II1pq,
         [&](const Block& a, const Block& b) {
             return pq(a, b) && b.j <= a.i + 1 && a.j <= b.i && a.j + 1 < b.j && b.j < b.i &&
                    b.i <= a.i;
         }},
        {EquationId::II11pq,
         [&](const Block& a, const Block& b) {
             return pq(a, b) && b.j <= a.i + 1 && a.j <= b.i && a.j + 1 < b.j && b.j == b.i &&
                    b.i <= a.i;
         }},
        {EquationId::II2pq,
         [&](const Block& a, const Block& b) {
             return pq(a, b) && b.j <= a.i + 1 && a.j <= b.i && b.j <= a.j + 1 && b.j < b.i &&
                    b.i <= a.i;
         }},
        {EquationId::II21pq,
         [&](const Block& a, const Block& b) {
             return pq(a, b) && b.j <= a.i + 1 && a.j <= b.i && b.j <= a.j + 1 && b.j == b.i &&
                    b.i <= a.i;
         }},
        {EquationId::II3pq,
         [&](const Block& a, const Block& b) {
             return pq(a, b) && a.j <= b.i && a.j + 1 < b.j && b.j <= a.i + 1 && a.i + 1 <= b.i;
         }},
        {EquationId::II4pq,
         [&](const Block& a, const Block& b) {
             return pq(a, b) && a.j <= b.i && b.j <= a.j + 1 && a.j + 1 <= a.i + 1 &&
                    a.i + 1 <= b.i;
         }},
        // a = q^[i,j], b = p^[k,l]: i=a.i, j=a.j, k=b.i, l=b.j
        {EquationId::Iqp,
         [&](const Block& a, const Block& b) { return qp(a, b) && b.j <= a.i && b.i + 1 < a.j; }},
        {EquationId::II1qp,
         [&](const Block& a, const Block& b) {
             return qp(a, b) && a.j <= b.i + 1 && b.j < a.j && a.j < a.i && a.i < b.i;
         }},
        {EquationId::II11qp,
         [&](const Block& a, const Block& b) {
             return qp(a, b) && a.j <= b.i + 1 && b.j < a.j && a.j == a.i && a.i < b.i;
         }},
        {EquationId::II2qp,
         [&](const Block& a, const Block& b) {
             return qp(a, b) && a.j <= b.i + 1 && a.j <= b.j && b.j <= a.i && a.i < b.i;
         }},
        {EquationId::II3qp,
         [&](const Block& a, const Block& b) {
             return qp(a, b) && a.j <= b.i + 1 && b.j < a.j && a.j < a.i && b.i <= a.i;
         }},
        {EquationId::II31qp,
         [&](const Block& a, const Block& b) {
             return qp(a, b) && a.j <= b.i + 1 && b.j < a.j && a.j == a.i && b.i <= a.i;
         }},
        {EquationId::II4qp,
         [&](const Block& a, const Block& b) {
             return qp(a, b) && a.j <= b.j && b.j <= b.i && b.i <= a.i;
         }},
    };

    std::vector<Block> blocks;
    for (Letter r : {Letter::p, Letter::q})
        for (int i = 0; i <= max_rank - 2; ++i)
            for (int j = 0; j <= i; ++j) blocks.push_back(Block{r, i, j});

    for (const Block& a : blocks) {
        for (const Block& b : blocks) {
            std::vector<EquationId> hits;
            for (const Row& row : rows)
                if (row.holds(a, b)) hits.push_back(row.eq);
            const bool redex = is_redex_pair(a, b);
            if (!redex) {
                if (!hits.empty())
                    throw std::logic_error("equation " + to_string(hits.front()) +
                                           " matches a non-redex pair");
                if (classify_impl(a, b))
                    throw std::logic_error("classifier fires on a non-redex pair");
                continue;
            }
            if (hits.size() != 1)
                throw std::logic_error("redex pair matched by " + std::to_string(hits.size()) +
                                       " equations");
            auto got = classify_impl(a, b);
            if (!got || got->eq != hits.front())
                throw std::logic_error("classifier disagrees with the side-condition table");
            for (const Block& r : redex_rhs(got->eq, a, b)) {
                if (r.j < 0 || r.j > r.i || r.i > std::max(a.i, b.i))
                    throw std::logic_error("right-hand side leaves the rank bounds");
            }
        }
    }
}

std::optional<RedexInfo> classify_redex(const Block& left, const Block& right) {
    std::call_once(startup_check, [] { verify_redex_classification(8); });
    check_block(left);
    check_block(right);
    return classify_impl(left, right);
}

BlockWord to_blocks(const Term& t) {
    BlockWord w;
    w.n = t.rank();
    if (t.kind() == Term::Kind::unit) return w;  // a lone 1 is already normal
    flatten(t, w.items);
    return w;
}

std::optional<ReduceStep> reduce_step(const BlockWord& w) {
    for (std::size_t k = 0; k < w.items.size(); ++k) {
        if (!w.items[k]) {
            ReduceStep s{w, EquationId::unit, static_cast<int>(k)};
            s.word.items.erase(s.word.items.begin() + static_cast<std::ptrdiff_t>(k));
            return s;
        }
        if (k + 1 == w.items.size()) break;
        if (!w.items[k + 1]) {
            ReduceStep s{w, EquationId::unit, static_cast<int>(k + 1)};
            s.word.items.erase(s.word.items.begin() + static_cast<std::ptrdiff_t>(k + 1));
            return s;
        }
        if (auto r = classify_redex(*w.items[k], *w.items[k + 1])) {
            ReduceStep s{w, r->eq, static_cast<int>(k)};
            std::vector<Block> rhs = redex_rhs(r->eq, *w.items[k], *w.items[k + 1]);
            s.word.items.erase(s.word.items.begin() + static_cast<std::ptrdiff_t>(k),
                               s.word.items.begin() + static_cast<std::ptrdiff_t>(k) + 2);
            s.word.items.insert(s.word.items.begin() + static_cast<std::ptrdiff_t>(k),
                                rhs.begin(), rhs.end());
            return s;
        }
    }
    return std::nullopt;
}

MuComplexity complexity_mu(const BlockWord& w) {
    MuComplexity mu;
    for (const auto& item : w.items) {
        if (!item) {
            ++mu.m2;
            continue;
        }
        mu.m1 += item->weight();
    }
    // A block is confronted with every earlier block it forms a redex with,
    // regardless of what sits in between.
    for (std::size_t x = 0; x < w.items.size(); ++x) {
        if (!w.items[x]) continue;
        for (std::size_t y = x + 1; y < w.items.size(); ++y) {
            if (!w.items[y]) continue;
            if (is_redex_pair(*w.items[x], *w.items[y])) ++mu.m2;
        }
    }
    return mu;
}

bool validate_normal_form(int n, const std::vector<Block>& blocks) {
    for (const Block& b : blocks)
        if (b.j < 0 || b.j > b.i || b.i > n - 2) return false;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
        const Block& x = blocks[k];
        const Block& y = blocks[k + 1];
        if (x.letter == y.letter) {
            if (!(x.i < y.i && x.j < y.j)) return false;
        } else if (x.letter == Letter::p) {
            if (!(x.i + 1 < y.j)) return false;
        } else {
            if (!(x.i < y.j)) return false;
        }
    }
    return true;
}

NormalizeResult normalize(const BlockWord& w) {
    NormalizeResult res;
    BlockWord cur = w;
    MuComplexity mu = complexity_mu(cur);
    while (auto step = reduce_step(cur)) {
        MuComplexity next = complexity_mu(step->word);
        if (next >= mu) throw std::logic_error("mu failed to decrease");
        mu = next;
        res.trace.push_back({step->eq, step->pos});
        cur = std::move(step->word);
    }
    res.nf.n = cur.n;
    for (const auto& item : cur.items) {
        if (!item) throw std::logic_error("unit symbol survived normalization");
        res.nf.blocks.push_back(*item);
    }
    if (!validate_normal_form(res.nf.n, res.nf.blocks))
        throw std::logic_error("redex-free word is not in normal form");
    return res;
}

NormalizeResult normalize(const Term& t) { return normalize(to_blocks(t)); }

OrdMap sigma_block(int n, const Block& b) {
    OrdMap acc = generator(n, b.letter, b.j);
    for (int t = b.j + 1; t <= b.i; ++t) acc = compose(acc, generator(n, b.letter, t));
    return acc;
}

OrdMap sigma(const BlockWord& w) {
    // The word x1 o x2 o ... applies its rightmost factor first.
    OrdMap acc = identity(w.n);
    for (auto it = w.items.rbegin(); it != w.items.rend(); ++it)
        if (*it) acc = compose(acc, sigma_block(w.n, **it));
    return acc;
}

OrdMap sigma(const NormalForm& nf) {
    OrdMap acc = identity(nf.n);
    for (auto it = nf.blocks.rbegin(); it != nf.blocks.rend(); ++it)
        acc = compose(acc, sigma_block(nf.n, *it));
    return acc;
}

OrdMap sigma(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::unit: return identity(t.rank());
        case Term::Kind::gen: return generator(t.rank(), t.letter(), t.index());
        case Term::Kind::comp: return compose(sigma(t.right()), sigma(t.left()));
    }
    throw std::logic_error("unreachable");
}

NormalForm normal_form_of_endo(const OrdMap& f) {
    PointClassification c = classify_points(f);
    struct Pt {
        int x;
        Letter letter;
    };
    std::vector<Pt> bottoms, tops;
    for (int b : c.bottom_p) bottoms.push_back({b, Letter::p});
    for (int b : c.bottom_q) bottoms.push_back({b, Letter::q});
    for (int t : c.top_p) tops.push_back({t, Letter::p});
    for (int t : c.top_q) tops.push_back({t, Letter::q});
    auto by_x = [](const Pt& u, const Pt& v) { return u.x < v.x; };
    std::sort(bottoms.begin(), bottoms.end(), by_x);
    std::sort(tops.begin(), tops.end(), by_x);
    if (bottoms.size() != tops.size())
        throw std::logic_error("bottom and top point counts differ");
    NormalForm nf;
    nf.n = f.n;
    for (std::size_t k = 0; k < bottoms.size(); ++k) {
        if (bottoms[k].letter != tops[k].letter)
            throw std::logic_error("paired bottom and top points disagree on the letter");
        nf.blocks.push_back(Block{bottoms[k].letter, bottoms[k].x - 1, tops[k].x});
    }
    if (!validate_normal_form(nf.n, nf.blocks))
        throw std::logic_error("point pairing produced an invalid normal form");
    if (!(sigma(nf) == f)) throw std::logic_error("recovered normal form has the wrong image");
    return nf;
}

bool equal(const Term& x, const Term& y) {
    if (x.rank() != y.rank()) throw SizeMismatchError(x.rank(), y.rank());
    const bool by_sigma = sigma(x) == sigma(y);
    const bool by_nf = normalize(x).nf == normalize(y).nf;
    if (by_sigma != by_nf) throw std::logic_error("sigma and normal forms disagree");
    return by_sigma;
}

std::vector<NormalForm> enumerate_normal_forms(int n) {
    std::vector<Block> blocks;
    for (Letter r : {Letter::p, Letter::q})
        for (int i = 0; i <= n - 2; ++i)
            for (int j = 0; j <= i; ++j) blocks.push_back(Block{r, i, j});
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.letter != b.letter) return a.letter == Letter::p;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    auto can_follow = [](const Block& x, const Block& y) {
        if (x.letter == y.letter) return x.i < y.i && x.j < y.j;
        if (x.letter == Letter::p) return x.i + 1 < y.j;
        return x.i < y.j;
    };
    std::vector<NormalForm> out;
    NormalForm cur;
    cur.n = n;
    auto rec = [&](auto&& self) -> void {
        out.push_back(cur);
        for (const Block& b : blocks) {
            if (!cur.blocks.empty() && !can_follow(cur.blocks.back(), b)) continue;
            cur.blocks.push_back(b);
            self(self);
            cur.blocks.pop_back();
        }
    };
    rec(rec);
    return out;
}

Term term_of(const NormalForm& nf) {
    if (nf.blocks.empty()) return Term::unit(nf.n);
    std::optional<Term> t;
    for (const Block& b : nf.blocks) {
        std::optional<Term> bt;
        for (int x = b.i; x >= b.j; --x) {
            Term g = Term::gen(nf.n, b.letter, x);
            bt = bt ? Term::comp(*bt, g) : g;
        }
        t = t ? Term::comp(*t, *bt) : *bt;
    }
    return *t;
}

}  // namespace simpend
