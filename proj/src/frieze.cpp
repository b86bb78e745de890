#include "simpend/frieze.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simpend {

namespace {

// Pairs the unclaimed negative points of [-m, -1] with the unclaimed
// positive points of [1, n], both walked outward from zero. Assumes the
// cup/cap forms were already checked.
std::vector<Segment> match_transversals(const std::vector<std::pair<int, int>>& cups,
                                        const std::vector<std::pair<int, int>>& caps, int n,
                                        int m) {
    std::vector<bool> pos_claimed(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> neg_claimed(static_cast<std::size_t>(m) + 1, false);
    for (const auto& c : cups) {
        pos_claimed[static_cast<std::size_t>(c.first)] = true;
        pos_claimed[static_cast<std::size_t>(c.second)] = true;
    }
    for (const auto& c : caps) {
        neg_claimed[static_cast<std::size_t>(-c.first)] = true;
        neg_claimed[static_cast<std::size_t>(-c.second)] = true;
    }
    std::vector<int> pos, neg;
    for (int x = 1; x <= n; ++x)
        if (!pos_claimed[static_cast<std::size_t>(x)]) pos.push_back(x);
    for (int y = 1; y <= m; ++y)
        if (!neg_claimed[static_cast<std::size_t>(y)]) neg.push_back(y);
    if (pos.size() != neg.size()) {
        if (pos.size() > neg.size())
            throw ExhaustionError("no negative point left to pair with the positive point",
                                  pos[neg.size()]);
        throw ExhaustionError("no positive point left to pair with the negative point",
                              -neg[pos.size()]);
    }
    std::vector<Segment> out;
    out.reserve(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) out.push_back(Segment{-neg[i], pos[i]});
    return out;
}

}  // namespace

Frieze unit_frieze() { return Frieze{}; }

Frieze validate(std::vector<std::pair<int, int>> cups, std::vector<std::pair<int, int>> caps,
                std::pair<int, int> tail_type) {
    auto [n, m] = tail_type;
    if (n < 0 || m < 0) throw ValidationError("negative type bound");
    if ((n - m) % 2 != 0)
        throw ParityError("tail transversal with ends of different parity", n + 1);
    std::sort(cups.begin(), cups.end());
    std::sort(caps.begin(), caps.end());
    for (const auto& c : cups) {
        if (c.second != c.first + 1) throw ParityError("cup is not an adjacent pair", c.second);
        if (c.first < 2 || c.first % 2 != 0)
            throw ParityError("cup must start at an even positive point", c.first);
        if (c.second > n) throw OverlapError("cup collides with the tail", c.first > n ? c.first : c.second);
    }
    for (const auto& c : caps) {
        if (c.second > -1) throw ParityError("cap must lie below zero", c.second);
        if (c.second != c.first + 1) throw ParityError("cap is not an adjacent pair", c.first);
        if (c.first % 2 != 0) throw ParityError("cap must start at an even negative point", c.first);
        if (c.first < -m) throw OverlapError("cap collides with the tail", c.second < -m ? c.second : c.first);
    }
    for (std::size_t i = 0; i + 1 < cups.size(); ++i)
        if (cups[i] == cups[i + 1]) throw OverlapError("duplicate cup", cups[i].first);
    for (std::size_t i = 0; i + 1 < caps.size(); ++i)
        if (caps[i] == caps[i + 1]) throw OverlapError("duplicate cap", caps[i].first);

    auto matched = match_transversals(cups, caps, n, m);

    // Given the forms above, the matched transversals alternate odd and even
    // from the inside out, continuing into the tail. Kept as a tripwire.
    std::vector<Segment> row = matched;
    row.push_back(Segment{-(m + 1), n + 1});
    row.push_back(Segment{-(m + 2), n + 2});
    for (std::size_t i = 0; i < row.size(); ++i) {
        bool odd = (-row[i].a) % 2 == 1;
        if ((row[i].b % 2 == 1) != odd)
            throw ParityError("transversal with ends of different parity", row[i].b);
        if (odd != (i % 2 == 0))
            throw ParityError("transversals do not alternate odd and even", row[i].b);
    }

    // Minimal witness: a trailing transversal of the tail shape folds away.
    while (!matched.empty() && matched.back() == Segment{-m, n}) {
        matched.pop_back();
        --n;
        --m;
    }
    return Frieze{std::move(cups), std::move(caps), n, m};
}

std::vector<Segment> transversals(const Frieze& d) {
    return match_transversals(d.cups, d.caps, d.type_n, d.type_m);
}

std::vector<Segment> segments_in_window(const Frieze& d, int w) {
    std::vector<Segment> out;
    for (const auto& c : d.cups)
        if (c.second <= w) out.push_back(Segment{c.first, c.second});
    for (const auto& c : d.caps)
        if (c.first >= -w) out.push_back(Segment{c.first, c.second});
    for (const Segment& t : transversals(d))
        if (t.a >= -w && t.b <= w) out.push_back(t);
    for (int k = 1; d.type_m + k <= w && d.type_n + k <= w; ++k)
        out.push_back(Segment{-(d.type_m + k), d.type_n + k});
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> infer_type(const Frieze& d) { return {d.type_n, d.type_m}; }

std::vector<TransversalPair> transversal_pairs(const Frieze& d, int slots) {
    if (slots <= 0) return {};
    auto row = transversals(d);
    for (int k = 1; k <= 2 * slots + 2; ++k) row.push_back(Segment{-(d.type_m + k), d.type_n + k});
    std::vector<TransversalPair> out;
    int cursor = 0;
    for (std::size_t i = 0; cursor < slots; i += 2) {
        Segment odd = row[i];
        Segment even = row[i + 1];
        int k1 = (-odd.a - 1) / 2;
        int k2 = (odd.b - 1) / 2;
        int k3 = (even.b - 2) / 2 - k2;
        if ((-odd.a) % 2 != 1 || odd.b % 2 != 1 || -even.a != -odd.a + 1 || even.b % 2 != 0 ||
            k3 < 0 || k2 != cursor)
            throw std::logic_error("transversal row is not paired into odd/even successors");
        out.push_back(TransversalPair{odd, even, k1, k2, k3});
        cursor += k3 + 1;
    }
    return out;
}

OrdEndoN phi(const Frieze& d) {
    // By slot S every pair comes from the tail, so the values shift rigidly.
    int S = d.type_n + d.type_m + 2;
    std::vector<int> values;
    for (const TransversalPair& pr : transversal_pairs(d, S + 1))
        for (int s = pr.k2; s <= pr.k2 + pr.k3; ++s) values.push_back(pr.k1);
    int tail = values[static_cast<std::size_t>(S)];
    values.resize(static_cast<std::size_t>(S));
    return OrdEndoN(std::move(values), S, tail);
}

Frieze from_endo(const OrdEndoN& f) {
    int n = f.type_n;
    int m = f.type_m;
    // When m is hit by the prefix its fiber continues into the tail, so the
    // even half of that pair is itself a tail transversal and the witness
    // shifts by one.
    bool tail_merged = n > 0 && f.prefix.back() == m;
    int N = 2 * n + (tail_merged ? 1 : 0);
    int M = 2 * m + (tail_merged ? 1 : 0);

    std::vector<Segment> segs;
    for (std::size_t i = 0; i < f.prefix.size();) {
        std::size_t j = i;
        while (j + 1 < f.prefix.size() && f.prefix[j + 1] == f.prefix[i]) ++j;
        int k = f.prefix[i];
        segs.push_back(Segment{-(2 * k + 1), 2 * static_cast<int>(i) + 1});
        if (k < m) segs.push_back(Segment{-(2 * k + 2), 2 * static_cast<int>(j) + 2});
        i = j + 1;
    }

    std::vector<bool> pos_claimed(static_cast<std::size_t>(N) + 1, false);
    std::vector<bool> neg_claimed(static_cast<std::size_t>(M) + 1, false);
    for (const Segment& s : segs) {
        neg_claimed[static_cast<std::size_t>(-s.a)] = true;
        pos_claimed[static_cast<std::size_t>(s.b)] = true;
    }
    std::vector<std::pair<int, int>> cups, caps;
    std::vector<int> loose;
    for (int x = 1; x <= N; ++x)
        if (!pos_claimed[static_cast<std::size_t>(x)]) loose.push_back(x);
    for (std::size_t i = 0; i < loose.size(); i += 2) {
        if (i + 1 == loose.size() || loose[i + 1] != loose[i] + 1 || loose[i] % 2 != 0)
            throw std::logic_error("fiber formula left a gap that is not a cup");
        cups.push_back({loose[i], loose[i] + 1});
    }
    loose.clear();
    for (int y = 1; y <= M; ++y)
        if (!neg_claimed[static_cast<std::size_t>(y)]) loose.push_back(y);
    for (std::size_t i = 0; i < loose.size(); i += 2) {
        if (i + 1 == loose.size() || loose[i + 1] != loose[i] + 1 || loose[i] % 2 != 1)
            throw std::logic_error("fiber formula left a gap that is not a cap");
        caps.push_back({-(loose[i] + 1), -loose[i]});
    }

    Frieze out = validate(std::move(cups), std::move(caps), {N, M});
    if (out.type_n != N || out.type_m != M || transversals(out) != segs)
        throw std::logic_error("fiber formula disagrees with reconstruction");
    return out;
}

Frieze compose(const Frieze& d1, const Frieze& d2) {
    int G = std::max(d1.type_m, d2.type_n);
    int S = G + 2;  // seam points 1..S, two tail transversals included
    int N = d1.type_n + (G - d1.type_m);
    int M = d2.type_m + (G - d2.type_n);
    int TOP = N + 2;
    int BOT = M + 2;

    // layer 0 = top boundary point x, 1 = seam point j, 2 = bottom point |y|
    struct Link {
        int layer = -1;
        int x = 0;
    };
    std::vector<Link> top_link(static_cast<std::size_t>(TOP) + 1);
    std::vector<Link> bot_link(static_cast<std::size_t>(BOT) + 1);
    std::vector<Link> up(static_cast<std::size_t>(S) + 1);    // seam j into d1
    std::vector<Link> down(static_cast<std::size_t>(S) + 1);  // seam j into d2

    for (const auto& c : d1.cups) {
        top_link[static_cast<std::size_t>(c.first)] = {0, c.second};
        top_link[static_cast<std::size_t>(c.second)] = {0, c.first};
    }
    for (const auto& c : d1.caps) {
        up[static_cast<std::size_t>(-c.first)] = {1, -c.second};
        up[static_cast<std::size_t>(-c.second)] = {1, -c.first};
    }
    auto d1_trans = transversals(d1);
    for (int k = 1; k <= S - d1.type_m; ++k)
        d1_trans.push_back(Segment{-(d1.type_m + k), d1.type_n + k});
    for (const Segment& t : d1_trans) {
        up[static_cast<std::size_t>(-t.a)] = {0, t.b};
        top_link[static_cast<std::size_t>(t.b)] = {1, -t.a};
    }
    for (const auto& c : d2.cups) {
        down[static_cast<std::size_t>(c.first)] = {1, c.second};
        down[static_cast<std::size_t>(c.second)] = {1, c.first};
    }
    for (const auto& c : d2.caps) {
        bot_link[static_cast<std::size_t>(-c.first)] = {2, -c.second};
        bot_link[static_cast<std::size_t>(-c.second)] = {2, -c.first};
    }
    auto d2_trans = transversals(d2);
    for (int k = 1; k <= S - d2.type_n; ++k)
        d2_trans.push_back(Segment{-(d2.type_m + k), d2.type_n + k});
    for (const Segment& t : d2_trans) {
        down[static_cast<std::size_t>(t.b)] = {2, -t.a};
        bot_link[static_cast<std::size_t>(-t.a)] = {1, t.b};
    }
    for (int x = 1; x <= TOP; ++x)
        if (top_link[static_cast<std::size_t>(x)].layer < 0)
            throw std::logic_error("top window left a point unlinked");
    for (int y = 1; y <= BOT; ++y)
        if (bot_link[static_cast<std::size_t>(y)].layer < 0)
            throw std::logic_error("bottom window left a point unlinked");
    for (int j = 1; j <= S; ++j)
        if (up[static_cast<std::size_t>(j)].layer < 0 || down[static_cast<std::size_t>(j)].layer < 0)
            throw std::logic_error("seam window left a point unlinked");

    std::vector<bool> seam_seen(static_cast<std::size_t>(S) + 1, false);
    std::vector<bool> top_seen(static_cast<std::size_t>(TOP) + 1, false);
    std::vector<bool> bot_seen(static_cast<std::size_t>(BOT) + 1, false);
    auto run_seam = [&](int j, bool entered_via_d1) -> Link {
        for (;;) {
            seam_seen[static_cast<std::size_t>(j)] = true;
            Link nxt = entered_via_d1 ? down[static_cast<std::size_t>(j)]
                                      : up[static_cast<std::size_t>(j)];
            if (nxt.layer != 1) return nxt;
            j = nxt.x;
            entered_via_d1 = !entered_via_d1;
        }
    };

    std::vector<Segment> cups_out_raw, caps_out_raw, trans_out;
    for (int x = 1; x <= TOP; ++x) {
        if (top_seen[static_cast<std::size_t>(x)]) continue;
        top_seen[static_cast<std::size_t>(x)] = true;
        Link first = top_link[static_cast<std::size_t>(x)];
        Link far = first.layer == 1 ? run_seam(first.x, true) : first;
        if (far.layer == 0) {
            top_seen[static_cast<std::size_t>(far.x)] = true;
            cups_out_raw.push_back(Segment{std::min(x, far.x), std::max(x, far.x)});
        } else {
            bot_seen[static_cast<std::size_t>(far.x)] = true;
            trans_out.push_back(Segment{-far.x, x});
        }
    }
    for (int y = 1; y <= BOT; ++y) {
        if (bot_seen[static_cast<std::size_t>(y)]) continue;
        bot_seen[static_cast<std::size_t>(y)] = true;
        Link first = bot_link[static_cast<std::size_t>(y)];
        Link far = first.layer == 1 ? run_seam(first.x, false) : first;
        if (far.layer != 2) throw std::logic_error("trace from the bottom re-entered the top");
        bot_seen[static_cast<std::size_t>(far.x)] = true;
        caps_out_raw.push_back(Segment{-std::max(y, far.x), -std::min(y, far.x)});
    }
    for (int j = 1; j <= S; ++j)
        if (!seam_seen[static_cast<std::size_t>(j)])
            throw std::logic_error("path tracing closed a loop");

    // The outermost two transversals are the seam's own tail; everything
    // else lands inside the witness window.
    std::sort(trans_out.begin(), trans_out.end(),
              [](const Segment& s, const Segment& t) { return s.b < t.b; });
    for (int k = 2; k >= 1; --k) {
        if (trans_out.empty() || trans_out.back() != Segment{-(M + k), N + k})
            throw std::logic_error("seam tail did not glue to the composite tail");
        trans_out.pop_back();
    }

    std::vector<std::pair<int, int>> cups_out, caps_out;
    for (const Segment& s : cups_out_raw) cups_out.push_back({s.a, s.b});
    for (const Segment& s : caps_out_raw) caps_out.push_back({s.a, s.b});
    Frieze out = validate(std::move(cups_out), std::move(caps_out), {N, M});

    // The traced transversals must coincide with the matching-derived ones,
    // up to the trailing tail-shaped segments folded into the witness.
    std::vector<Segment> expect_trans = transversals(out);
    for (int k = 1; k <= M - out.type_m; ++k)
        expect_trans.push_back(Segment{-(out.type_m + k), out.type_n + k});
    if (trans_out != expect_trans)
        throw std::logic_error("traced transversals disagree with the matching");

    Frieze functorial = from_endo(compose(phi(d1), phi(d2)));
    if (!(functorial == out))
        throw std::logic_error("stacked composite disagrees with the endomorphism composite");
    return out;
}

std::vector<RenderItem> render_model(const Frieze& d, int w) {
    int need = std::max({1, d.type_n, d.type_m});
    if (w < need)
        throw ValidationError("window " + std::to_string(w) + " is too small, need at least " +
                              std::to_string(need));
    std::vector<RenderItem> out;
    for (const Segment& s : segments_in_window(d, w)) out.push_back(RenderItem{s.kind(), s.a, s.b});
    return out;
}

}  // namespace simpend
