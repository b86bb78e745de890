#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "simpend/errors.hpp"
#include "simpend/ordmap.hpp"

namespace simpend {

enum class SegmentKind { cup, cap, transversal };

// A two-point segment [a, b] with a < b, both in Z \ {0}. The kind is read
// off the signs: cups sit above zero, caps below, transversals straddle it.
struct Segment {
    int a = 0;
    int b = 0;

    SegmentKind kind() const {
        if (a > 0) return SegmentKind::cup;
        if (b < 0) return SegmentKind::cap;
        return SegmentKind::transversal;
    }

    auto operator<=>(const Segment&) const = default;
};

// A frieze: nonoverlapping segments exhausting Z \ {0}. Cups have the form
// [2k+2, 2k+3] and caps the form [-(2k+2), -(2k+1)]; beyond the finite part
// the transversals are the tail [-(type_m + k), type_n + k] for all k >= 1.
// The transversals inside the window pair the unclaimed negative points with
// the unclaimed positive points in order, so they are derived, not stored.
// (type_n, type_m) is kept minimal; equality is plain field equality.
struct Frieze {
    std::vector<std::pair<int, int>> cups;  // sorted
    std::vector<std::pair<int, int>> caps;  // sorted, entries negative with a < b
    int type_n = 0;
    int type_m = 0;

    bool operator==(const Frieze&) const = default;
};

Frieze unit_frieze();

// Checks parity forms and coverage, reconstructs the transversals, and
// shrinks the type witness to the minimal one. Throws ParityError,
// OverlapError, or ExhaustionError naming the offending point.
Frieze validate(std::vector<std::pair<int, int>> cups, std::vector<std::pair<int, int>> caps,
                std::pair<int, int> tail_type);

// The specific transversal segments, those not of the tail form, sorted.
std::vector<Segment> transversals(const Frieze& d);

// Every segment with both endpoints in [-w, w], sorted.
std::vector<Segment> segments_in_window(const Frieze& d, int w);

// The stored minimal (n, m) with [-(m+k), n+k] a segment for all k >= 1.
std::pair<int, int> infer_type(const Frieze& d);

// An odd transversal [-(2k1+1), 2k2+1] and the even transversal
// [-(2k1+2), 2k2+2k3+2] next to the right of it: the pair covers slots
// k2..k2+k3 and assigns k1 to each.
struct TransversalPair {
    Segment odd;
    Segment even;
    int k1 = 0;
    int k2 = 0;
    int k3 = 0;

    bool operator==(const TransversalPair&) const = default;
};

// The transversal pairs covering slots 0..slots-1, left to right.
std::vector<TransversalPair> transversal_pairs(const Frieze& d, int slots);

// phi(d) sends n to the value assigned by the transversal pair covering n.
// Lands in canonical finite-type form; a monoid homomorphism.
OrdEndoN phi(const Frieze& d);

// Inverse of phi. Each value k in the image contributes the transversals
// [-(2k+1), 2 min fiber + 1] and [-(2k+2), 2 max fiber + 2]; the points left
// over pair up as cups and caps.
Frieze from_endo(const OrdEndoN& f);

// Stacks d2 below d1, gluing bottom point -j of d1 to top point j of d2, and
// traces the composite segments across the seam. As with maps, d1 acts
// first: phi(compose(d1, d2)) = compose(phi(d1), phi(d2)). Every call is
// cross-checked against from_endo of that composite; path tracing can never
// close a loop on valid input, so a loop throws std::logic_error.
Frieze compose(const Frieze& d1, const Frieze& d2);

struct RenderItem {
    SegmentKind kind;
    int a = 0;
    int b = 0;

    bool operator==(const RenderItem&) const = default;
};

// One item per segment with both endpoints in [-w, w]: cups and caps as half
// ovals, transversals as straight lines. Positive points are the top row,
// negative points the bottom row. Requires w >= max(type_n, type_m).
std::vector<RenderItem> render_model(const Frieze& d, int w);

}  // namespace simpend
