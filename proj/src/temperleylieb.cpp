#include "simpend/temperleylieb.hpp"

#include <algorithm>
#include <stdexcept>

namespace simpend {

namespace {

std::string describe(TLPoint p) {
    return (p.side == TLSide::top ? "top " : "bottom ") + std::to_string(p.index);
}

int point_code(TLPoint p) {
    return p.side == TLSide::top ? p.index : -p.index;
}

// Boundary order: bottom 1..n sits at 0..n-1, top n..1 at n..2n-1, so chords
// of a planar diagram nest like parentheses.
int linear_pos(int n, TLPoint p) {
    return p.side == TLSide::bottom ? p.index - 1 : 2 * n - p.index;
}

TLPoint point_at(int n, int pos) {
    if (pos < n) return TLPoint{TLSide::bottom, pos + 1};
    return TLPoint{TLSide::top, 2 * n - pos};
}

}  // namespace

TLDiagram make_tl_diagram(int n, std::vector<std::pair<TLPoint, TLPoint>> pairs, int circles) {
    if (n < 0) throw ValidationError("negative strand count");
    if (circles < 0) throw ValidationError("negative circle count");
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    for (const auto& pr : pairs) {
        for (TLPoint p : {pr.first, pr.second})
            if (p.index < 1 || p.index > n)
                throw IndexError("boundary point " + describe(p) + " outside 1.." + std::to_string(n));
        const int a = linear_pos(n, pr.first);
        const int b = linear_pos(n, pr.second);
        if (a == b) throw OverlapError("boundary point matched to itself", point_code(pr.first));
        if (partner[a] != -1) throw OverlapError("boundary point matched twice", point_code(pr.first));
        if (partner[b] != -1) throw OverlapError("boundary point matched twice", point_code(pr.second));
        partner[a] = b;
        partner[b] = a;
    }
    for (int pos = 0; pos < 2 * n; ++pos)
        if (partner[pos] == -1)
            throw ExhaustionError("boundary point left unmatched", point_code(point_at(n, pos)));
    std::vector<int> stack;
    for (int pos = 0; pos < 2 * n; ++pos) {
        if (partner[pos] > pos) {
            stack.push_back(pos);
            continue;
        }
        if (stack.empty() || stack.back() != partner[pos])
            throw ValidationError("chords cross at " + describe(point_at(n, pos)));
        stack.pop_back();
    }
    std::vector<std::pair<TLPoint, TLPoint>> out;
    for (int pos = 0; pos < 2 * n; ++pos)
        if (partner[pos] > pos) out.push_back({point_at(n, pos), point_at(n, partner[pos])});
    return TLDiagram{n, std::move(out), circles};
}

TLDiagram tl_generator(int n, TLGen g) {
    if (n < 0) throw ValidationError("negative strand count");
    std::vector<std::pair<TLPoint, TLPoint>> pairs;
    switch (g.kind) {
        case TLGenKind::unit:
        case TLGenKind::c:
            for (int i = 1; i <= n; ++i)
                pairs.push_back({TLPoint{TLSide::top, i}, TLPoint{TLSide::bottom, i}});
            return make_tl_diagram(n, std::move(pairs), g.kind == TLGenKind::c ? 1 : 0);
        case TLGenKind::h: {
            const int i = g.index;
            if (i < 1 || i + 1 > n)
                throw IndexError("h index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
            pairs.push_back({TLPoint{TLSide::top, i}, TLPoint{TLSide::top, i + 1}});
            pairs.push_back({TLPoint{TLSide::bottom, i}, TLPoint{TLSide::bottom, i + 1}});
            for (int j = 1; j <= n; ++j)
                if (j != i && j != i + 1)
                    pairs.push_back({TLPoint{TLSide::top, j}, TLPoint{TLSide::bottom, j}});
            return make_tl_diagram(n, std::move(pairs), 0);
        }
    }
    throw std::logic_error("unhandled generator kind");
}

namespace {

struct Link {
    int layer = -1;  // 0 composite top, 1 seam, 2 composite bottom
    int x = 0;
};

}  // namespace

TLDiagram tl_compose(const TLDiagram& d1, const TLDiagram& d2) {
    if (d1.n != d2.n) throw SizeMismatchError(d1.n, d2.n);
    const int n = d1.n;
    std::vector<Link> top_link(n + 1), bot_link(n + 1), up(n + 1), down(n + 1);
    for (const auto& pr : d1.pairs) {
        auto tgt = [](TLPoint p) {
            return p.side == TLSide::top ? Link{0, p.index} : Link{1, p.index};
        };
        (pr.first.side == TLSide::top ? top_link : up)[pr.first.index] = tgt(pr.second);
        (pr.second.side == TLSide::top ? top_link : up)[pr.second.index] = tgt(pr.first);
    }
    for (const auto& pr : d2.pairs) {
        auto tgt = [](TLPoint p) {
            return p.side == TLSide::top ? Link{1, p.index} : Link{2, p.index};
        };
        (pr.first.side == TLSide::top ? down : bot_link)[pr.first.index] = tgt(pr.second);
        (pr.second.side == TLSide::top ? down : bot_link)[pr.second.index] = tgt(pr.first);
    }

    std::vector<bool> top_seen(n + 1, false), bot_seen(n + 1, false), seam_seen(n + 1, false);
    auto run_seam = [&](int j, bool entered_via_d1) {
        for (;;) {
            seam_seen[j] = true;
            const Link nxt = entered_via_d1 ? down[j] : up[j];
            if (nxt.layer != 1) return nxt;
            j = nxt.x;
            entered_via_d1 = !entered_via_d1;
        }
    };

    std::vector<std::pair<TLPoint, TLPoint>> pairs;
    for (int x = 1; x <= n; ++x) {
        if (top_seen[x]) continue;
        top_seen[x] = true;
        const Link first = top_link[x];
        const Link far = first.layer == 1 ? run_seam(first.x, true) : first;
        if (far.layer == 0) {
            top_seen[far.x] = true;
            pairs.push_back({TLPoint{TLSide::top, x}, TLPoint{TLSide::top, far.x}});
        } else {
            bot_seen[far.x] = true;
            pairs.push_back({TLPoint{TLSide::top, x}, TLPoint{TLSide::bottom, far.x}});
        }
    }
    for (int y = 1; y <= n; ++y) {
        if (bot_seen[y]) continue;
        bot_seen[y] = true;
        const Link first = bot_link[y];
        const Link far = first.layer == 1 ? run_seam(first.x, false) : first;
        if (far.layer != 2) throw std::logic_error("trace from the bottom escaped to the top");
        bot_seen[far.x] = true;
        pairs.push_back({TLPoint{TLSide::bottom, y}, TLPoint{TLSide::bottom, far.x}});
    }

    // Whatever the boundary traces missed sits on closed seam loops, with one
    // d1 cap edge and one d2 cup edge through every loop point.
    int loops = 0;
    for (int j = 1; j <= n; ++j) {
        if (seam_seen[j]) continue;
        ++loops;
        int cur = j;
        bool via_d1 = true;
        while (!seam_seen[cur]) {
            seam_seen[cur] = true;
            const Link nxt = via_d1 ? up[cur] : down[cur];
            if (nxt.layer != 1) throw std::logic_error("seam loop escaped to the boundary");
            cur = nxt.x;
            via_d1 = !via_d1;
        }
    }

    return make_tl_diagram(n, std::move(pairs), d1.circles + d2.circles + loops);
}

TLDiagram eval_word(const TLWord& w, TLMode mode) {
    TLDiagram acc = tl_generator(w.n, TLGen::unit());
    for (const TLGen& g : w.gens) {
        acc = tl_compose(tl_generator(w.n, g), acc);
        if (mode == TLMode::J) acc.circles = 0;
    }
    return acc;
}

namespace {

void append_embedded(const Term& t, std::vector<TLGen>& out) {
    switch (t.kind()) {
        case Term::Kind::unit:
            return;
        case Term::Kind::gen:
            if (t.letter() == Letter::p) {
                out.push_back(TLGen::h(2 * t.index() + 3));
                out.push_back(TLGen::h(2 * t.index() + 2));
            } else {
                out.push_back(TLGen::h(2 * t.index() + 1));
                out.push_back(TLGen::h(2 * t.index() + 2));
            }
            return;
        case Term::Kind::comp:
            append_embedded(t.left(), out);
            append_embedded(t.right(), out);
            return;
    }
    throw std::logic_error("unhandled term kind");
}

}  // namespace

TLWord embed_term(const Term& t) {
    if (t.rank() < 2)
        throw ValidationError("embedding needs rank at least 2, got " + std::to_string(t.rank()));
    TLWord w{2 * t.rank(), {}};
    append_embedded(t, w.gens);
    return w;
}

std::string to_string(const TLWord& w) {
    std::string s;
    for (const TLGen& g : w.gens) {
        if (!s.empty()) s += '.';
        if (g.kind == TLGenKind::h)
            s += 'h' + std::to_string(g.index);
        else
            s += g.kind == TLGenKind::c ? 'c' : '1';
    }
    s += '@';
    s += std::to_string(w.n);
    return s;
}

TLDiagram frieze_to_tl(const Frieze& d, int strands) {
    if (strands < 0 || strands % 2 != 0)
        throw ValidationError("strand count " + std::to_string(strands) + " is not even");
    if (d.type_n != d.type_m || d.type_n > strands)
        throw ValidationError("frieze of type (" + std::to_string(d.type_n) + ", " +
                              std::to_string(d.type_m) + ") does not fit on " +
                              std::to_string(strands) + " strands");
    std::vector<std::pair<TLPoint, TLPoint>> pairs;
    for (const auto& c : d.cups)
        pairs.push_back({TLPoint{TLSide::top, c.first}, TLPoint{TLSide::top, c.second}});
    for (const auto& c : d.caps)
        pairs.push_back({TLPoint{TLSide::bottom, -c.second}, TLPoint{TLSide::bottom, -c.first}});
    for (const Segment& t : transversals(d))
        pairs.push_back({TLPoint{TLSide::top, t.b}, TLPoint{TLSide::bottom, -t.a}});
    for (int k = d.type_n + 1; k <= strands; ++k)
        pairs.push_back({TLPoint{TLSide::top, k}, TLPoint{TLSide::bottom, k}});
    return make_tl_diagram(strands, std::move(pairs), 0);
}

namespace {

// In-order pairing of the unclaimed points on both sides of the window; for
// a planar diagram this is the only possible set of transversals.
std::vector<Segment> gd_transversals(const std::vector<std::pair<int, int>>& cups,
                                     const std::vector<std::pair<int, int>>& caps, int n, int m) {
    std::vector<bool> pos_claimed(n + 1, false), neg_claimed(m + 1, false);
    for (const auto& c : cups) pos_claimed[c.first] = pos_claimed[c.second] = true;
    for (const auto& c : caps) neg_claimed[-c.first] = neg_claimed[-c.second] = true;
    std::vector<int> pos, neg;
    for (int x = 1; x <= n; ++x)
        if (!pos_claimed[x]) pos.push_back(x);
    for (int y = 1; y <= m; ++y)
        if (!neg_claimed[y]) neg.push_back(y);
    if (pos.size() != neg.size())
        throw ExhaustionError("unclaimed points do not pair up",
                              pos.size() > neg.size() ? pos[neg.size()] : -neg[pos.size()]);
    std::vector<Segment> out;
    for (std::size_t k = 0; k < pos.size(); ++k) out.push_back(Segment{-neg[k], pos[k]});
    return out;
}

// Arcs over one line, walked outward from zero; sign only flavors messages.
// Endpoints must nest like parentheses and no loose point may sit under an
// open arc, or it could not reach the other side of the window.
void check_line_planarity(const std::vector<std::pair<int, int>>& arcs, int bound, int sign) {
    std::vector<int> open_partner(bound + 1, 0), close_partner(bound + 1, 0);
    for (const auto& [a, b] : arcs) {
        open_partner[a] = b;
        close_partner[b] = a;
    }
    std::vector<int> stack;
    for (int x = 1; x <= bound; ++x) {
        if (open_partner[x] != 0) {
            stack.push_back(open_partner[x]);
            continue;
        }
        if (close_partner[x] != 0) {
            if (stack.empty() || stack.back() != x)
                throw ValidationError("arcs cross at point " + std::to_string(sign * x));
            stack.pop_back();
            continue;
        }
        if (!stack.empty())
            throw ValidationError("transversal point " + std::to_string(sign * x) +
                                  " is trapped under an arc");
    }
}

}  // namespace

GeneralDiagram make_general_diagram(std::vector<std::pair<int, int>> cups,
                                    std::vector<std::pair<int, int>> caps,
                                    std::pair<int, int> tail_type, int circles) {
    auto [n, m] = tail_type;
    if (n < 0 || m < 0) throw ValidationError("negative type bound");
    if (circles < 0) throw ValidationError("negative circle count");
    std::sort(cups.begin(), cups.end());
    std::sort(caps.begin(), caps.end());
    std::vector<bool> pos_claimed(n + 1, false), neg_claimed(m + 1, false);
    for (const auto& c : cups) {
        if (c.first < 1)
            throw ValidationError("cup endpoint " + std::to_string(c.first) + " below 1");
        if (c.second <= c.first)
            throw ValidationError("cup ends out of order at " + std::to_string(c.second));
        if (c.second > n) throw OverlapError("cup reaches into the tail", c.second);
        for (int x : {c.first, c.second}) {
            if (pos_claimed[x]) throw OverlapError("point claimed twice", x);
            pos_claimed[x] = true;
        }
    }
    for (const auto& c : caps) {
        if (c.second > -1)
            throw ValidationError("cap endpoint " + std::to_string(c.second) + " above -1");
        if (c.second <= c.first)
            throw ValidationError("cap ends out of order at " + std::to_string(c.first));
        if (c.first < -m) throw OverlapError("cap reaches into the tail", c.first);
        for (int y : {-c.first, -c.second}) {
            if (neg_claimed[y]) throw OverlapError("point claimed twice", -y);
            neg_claimed[y] = true;
        }
    }
    check_line_planarity(cups, n, +1);
    std::vector<std::pair<int, int>> flipped;
    flipped.reserve(caps.size());
    for (const auto& c : caps) flipped.push_back({-c.second, -c.first});
    check_line_planarity(flipped, m, -1);
    auto matched = gd_transversals(cups, caps, n, m);
    while (!matched.empty() && matched.back() == Segment{-m, n}) {
        matched.pop_back();
        --n;
        --m;
    }
    return GeneralDiagram{std::move(cups), std::move(caps), n, m, circles};
}

GeneralDiagram general_of_frieze(const Frieze& d) {
    return make_general_diagram(d.cups, d.caps, {d.type_n, d.type_m}, 0);
}

CupCapWord omega_generator(StdGen kind, int i) {
    if (i < 0) throw IndexError("generator index " + std::to_string(i) + " below 0");
    CupCapWord w;
    if (kind == StdGen::sigma)
        w.gens.push_back(CupCapGen{true, 2 * i + 2});
    else
        w.gens.push_back(CupCapGen{false, 2 * i + 1});
    return w;
}

namespace {

GeneralDiagram cupcap_diagram(const CupCapGen& g) {
    if (g.k < 1) throw IndexError("cup or cap index " + std::to_string(g.k) + " below 1");
    if (g.cup) return make_general_diagram({{g.k, g.k + 1}}, {}, {g.k + 1, g.k - 1}, 0);
    return make_general_diagram({}, {{-(g.k + 1), -g.k}}, {g.k - 1, g.k + 1}, 0);
}

// Same seam trace as frieze composition, but closed seam loops are counted
// as circles instead of being impossible.
GeneralDiagram gd_compose(const GeneralDiagram& d1, const GeneralDiagram& d2) {
    const int G = std::max(d1.type_m, d2.type_n);
    const int S = G + 2;
    const int N = d1.type_n + (G - d1.type_m);
    const int M = d2.type_m + (G - d2.type_n);
    const int TOP = N + 2;
    const int BOT = M + 2;

    std::vector<Link> top_link(TOP + 1), bot_link(BOT + 1), up(S + 1), down(S + 1);
    for (const auto& c : d1.cups) {
        top_link[c.first] = Link{0, c.second};
        top_link[c.second] = Link{0, c.first};
    }
    for (const auto& c : d1.caps) {
        up[-c.first] = Link{1, -c.second};
        up[-c.second] = Link{1, -c.first};
    }
    auto d1_trans = gd_transversals(d1.cups, d1.caps, d1.type_n, d1.type_m);
    for (int k = 1; k <= S - d1.type_m; ++k)
        d1_trans.push_back(Segment{-(d1.type_m + k), d1.type_n + k});
    for (const Segment& t : d1_trans) {
        top_link[t.b] = Link{1, -t.a};
        up[-t.a] = Link{0, t.b};
    }
    for (const auto& c : d2.cups) {
        down[c.first] = Link{1, c.second};
        down[c.second] = Link{1, c.first};
    }
    for (const auto& c : d2.caps) {
        bot_link[-c.first] = Link{2, -c.second};
        bot_link[-c.second] = Link{2, -c.first};
    }
    auto d2_trans = gd_transversals(d2.cups, d2.caps, d2.type_n, d2.type_m);
    for (int k = 1; k <= S - d2.type_n; ++k)
        d2_trans.push_back(Segment{-(d2.type_m + k), d2.type_n + k});
    for (const Segment& t : d2_trans) {
        down[t.b] = Link{2, -t.a};
        bot_link[-t.a] = Link{1, t.b};
    }
    for (int x = 1; x <= TOP; ++x)
        if (top_link[x].layer == -1) throw std::logic_error("top point left unlinked");
    for (int y = 1; y <= BOT; ++y)
        if (bot_link[y].layer == -1) throw std::logic_error("bottom point left unlinked");
    for (int j = 1; j <= S; ++j)
        if (up[j].layer == -1 || down[j].layer == -1)
            throw std::logic_error("seam point left unlinked");

    std::vector<bool> top_seen(TOP + 1, false), bot_seen(BOT + 1, false), seam_seen(S + 1, false);
    auto run_seam = [&](int j, bool entered_via_d1) {
        for (;;) {
            seam_seen[j] = true;
            const Link nxt = entered_via_d1 ? down[j] : up[j];
            if (nxt.layer != 1) return nxt;
            j = nxt.x;
            entered_via_d1 = !entered_via_d1;
        }
    };

    std::vector<std::pair<int, int>> cups_out, caps_out;
    std::vector<Segment> trans_out;
    for (int x = 1; x <= TOP; ++x) {
        if (top_seen[x]) continue;
        top_seen[x] = true;
        const Link first = top_link[x];
        const Link far = first.layer == 1 ? run_seam(first.x, true) : first;
        if (far.layer == 0) {
            top_seen[far.x] = true;
            cups_out.push_back({x, far.x});
        } else {
            bot_seen[far.x] = true;
            trans_out.push_back(Segment{-far.x, x});
        }
    }
    for (int y = 1; y <= BOT; ++y) {
        if (bot_seen[y]) continue;
        bot_seen[y] = true;
        const Link first = bot_link[y];
        const Link far = first.layer == 1 ? run_seam(first.x, false) : first;
        if (far.layer != 2) throw std::logic_error("trace from the bottom escaped to the top");
        bot_seen[far.x] = true;
        caps_out.push_back({-far.x, -y});
    }
    int loops = 0;
    for (int j = 1; j <= S; ++j) {
        if (seam_seen[j]) continue;
        ++loops;
        int cur = j;
        bool via_d1 = true;
        while (!seam_seen[cur]) {
            seam_seen[cur] = true;
            const Link nxt = via_d1 ? up[cur] : down[cur];
            if (nxt.layer != 1) throw std::logic_error("seam loop escaped to the boundary");
            cur = nxt.x;
            via_d1 = !via_d1;
        }
    }

    // The two outermost strands run straight through the tail on both sides.
    for (int k = 2; k >= 1; --k) {
        if (trans_out.empty() || !(trans_out.back() == Segment{-(M + k), N + k}))
            throw std::logic_error("tail strand failed to glue straight");
        trans_out.pop_back();
    }

    GeneralDiagram out = make_general_diagram(std::move(cups_out), std::move(caps_out), {N, M},
                                              d1.circles + d2.circles + loops);
    auto expect = gd_transversals(out.cups, out.caps, out.type_n, out.type_m);
    for (int k = 1; k <= N - out.type_n; ++k)
        expect.push_back(Segment{-(out.type_m + k), out.type_n + k});
    if (trans_out != expect) throw std::logic_error("traced transversals disagree with the matching");
    return out;
}

}  // namespace

GeneralDiagram eval_cupcap(const CupCapWord& w) {
    GeneralDiagram acc;
    for (const CupCapGen& g : w.gens) {
        acc = gd_compose(cupcap_diagram(g), acc);
        if (w.mode == TLMode::J) acc.circles = 0;
    }
    return acc;
}

namespace {

RelationCheck family(std::string name) {
    RelationCheck fam;
    fam.family = std::move(name);
    return fam;
}

void check_instance(RelationCheck& fam, const std::string& label,
                    const std::vector<TLDiagram>& sides, bool expect_no_circles) {
    ++fam.instances;
    bool ok = true;
    for (std::size_t i = 1; i < sides.size(); ++i) ok = ok && sides[i] == sides[0];
    if (expect_no_circles)
        for (const TLDiagram& d : sides) ok = ok && d.circles == 0;
    if (!ok) {
        ++fam.failures;
        fam.notes.push_back(fam.family + " " + label);
    }
}

std::string idx(int i) {
    return "i=" + std::to_string(i);
}

std::string idx(int i, int j) {
    return "i=" + std::to_string(i) + " j=" + std::to_string(j);
}

}  // namespace

std::vector<RelationCheck> verify_relations(int n) {
    if (n < 2 || n > 8) throw IndexError("rank " + std::to_string(n) + " outside 2..8");
    const int strands = 2 * n;
    std::vector<RelationCheck> out;
    auto ev = [&](std::vector<TLGen> gens) {
        return eval_word(TLWord{strands, std::move(gens)}, TLMode::K);
    };
    auto H = [](int i) { return TLGen::h(i); };
    const TLGen C = TLGen::c();

    {
        RelationCheck fam = family("(h1)");
        for (int i = 1; i <= strands - 1; ++i)
            for (int j = 1; j + 1 < i; ++j)
                check_instance(fam, idx(i, j), {ev({H(i), H(j)}), ev({H(j), H(i)})}, false);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(h2)");
        for (int i = 1; i <= strands - 1; ++i) {
            if (i + 1 <= strands - 1)
                check_instance(fam, idx(i) + " up", {ev({H(i), H(i + 1), H(i)}), ev({H(i)})}, false);
            if (i - 1 >= 1)
                check_instance(fam, idx(i) + " down", {ev({H(i), H(i - 1), H(i)}), ev({H(i)})}, false);
        }
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(hc1)");
        for (int i = 1; i <= strands - 1; ++i)
            check_instance(fam, idx(i), {ev({H(i), C}), ev({C, H(i)})}, false);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(hc2)");
        for (int i = 1; i <= strands - 1; ++i)
            check_instance(fam, idx(i), {ev({H(i), H(i)}), ev({C, H(i)})}, false);
        out.push_back(std::move(fam));
    }

    auto img = [&](const Term& t) { return eval_word(embed_term(t), TLMode::K); };
    auto P = [&](int i) { return Term::gen(n, Letter::p, i); };
    auto Q = [&](int i) { return Term::gen(n, Letter::q, i); };
    auto o = [](const Term& x, const Term& y) { return Term::comp(x, y); };
    const int top = n - 2;  // generator indices run 0..top

    {
        RelationCheck fam = family("(p1)");
        for (int i = 0; i <= top; ++i)
            for (int j = 0; j + 1 < i; ++j)
                check_instance(fam, idx(i, j), {img(o(P(i), P(j))), img(o(P(j), P(i)))}, true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(p2)");
        for (int i = 0; i <= top; ++i)
            check_instance(fam, idx(i), {img(o(P(i), P(i))), img(P(i))}, true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(p3)");
        for (int i = 0; i + 1 <= top; ++i)
            check_instance(fam, idx(i),
                           {img(o(P(i), o(P(i + 1), P(i)))), img(o(P(i + 1), o(P(i), P(i + 1)))),
                            img(o(P(i), P(i + 1)))},
                           true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(q1)");
        for (int i = 0; i <= top; ++i)
            for (int j = 0; j + 1 < i; ++j)
                check_instance(fam, idx(i, j), {img(o(Q(i), Q(j))), img(o(Q(j), Q(i)))}, true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(q2)");
        for (int i = 0; i <= top; ++i)
            check_instance(fam, idx(i), {img(o(Q(i), Q(i))), img(Q(i))}, true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(q3)");
        for (int i = 0; i + 1 <= top; ++i)
            check_instance(fam, idx(i),
                           {img(o(Q(i), o(Q(i + 1), Q(i)))), img(o(Q(i + 1), o(Q(i), Q(i + 1)))),
                            img(o(Q(i + 1), Q(i)))},
                           true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(pq)");
        for (int i = 0; i <= top; ++i)
            for (int j = 0; j <= top; ++j) {
                if (!(j < i || i + 1 < j)) continue;
                check_instance(fam, idx(i, j), {img(o(P(i), Q(j))), img(o(Q(j), P(i)))}, true);
            }
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(pq1)");
        for (int i = 0; i <= top; ++i)
            check_instance(fam, idx(i), {img(o(P(i), Q(i))), img(P(i))}, true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(pq2)");
        for (int i = 0; i + 1 <= top; ++i)
            check_instance(fam, idx(i), {img(o(P(i), Q(i + 1))), img(Q(i + 1))}, true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(qp1)");
        for (int i = 0; i <= top; ++i)
            check_instance(fam, idx(i), {img(o(Q(i), P(i))), img(Q(i))}, true);
        out.push_back(std::move(fam));
    }
    {
        RelationCheck fam = family("(qp2)");
        for (int i = 0; i + 1 <= top; ++i)
            check_instance(fam, idx(i), {img(o(Q(i + 1), P(i))), img(P(i))}, true);
        out.push_back(std::move(fam));
    }
    return out;
}

}  // namespace simpend
