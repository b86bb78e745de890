#pragma once

#include <string>
#include <utility>
#include <vector>

#include "simpend/errors.hpp"
#include "simpend/frieze.hpp"
#include "simpend/ordmap.hpp"
#include "simpend/presentation.hpp"

namespace simpend {

enum class TLSide { top, bottom };

struct TLPoint {
    TLSide side = TLSide::top;
    int index = 0;  // 1-based

    auto operator<=>(const TLPoint&) const = default;
};

// A diagram on n strands: a planar perfect matching on the 2n boundary points
// of a rectangle, n on the top edge and n on the bottom, plus a count of
// closed circles. Pairs are kept in boundary order (bottom 1..n, then top
// n..1), so equality is plain field equality.
struct TLDiagram {
    int n = 0;
    std::vector<std::pair<TLPoint, TLPoint>> pairs;
    int circles = 0;

    bool operator==(const TLDiagram&) const = default;
};

// Checks that every boundary point is matched exactly once and that no two
// chords cross, and puts the pairs into boundary order.
TLDiagram make_tl_diagram(int n, std::vector<std::pair<TLPoint, TLPoint>> pairs, int circles);

enum class TLGenKind { h, c, unit };

struct TLGen {
    TLGenKind kind = TLGenKind::unit;
    int index = 0;  // h only

    static TLGen h(int i) { return {TLGenKind::h, i}; }
    static TLGen c() { return {TLGenKind::c, 0}; }
    static TLGen unit() { return {TLGenKind::unit, 0}; }

    bool operator==(const TLGen&) const = default;
};

// h(i): cup (i, i+1) on top, cap (i, i+1) on the bottom, every other strand
// vertical. c: the identity matching with one circle.
TLDiagram tl_generator(int n, TLGen g);

// Stacks d2 below d1 and traces the strands across the seam; d1 acts first.
// Closed loops formed at the seam are added to the circle count.
TLDiagram tl_compose(const TLDiagram& d1, const TLDiagram& d2);

struct TLWord {
    int n = 0;
    std::vector<TLGen> gens;  // the leftmost generator is applied last

    bool operator==(const TLWord&) const = default;
};

enum class TLMode { K, J };

// Folds tl_compose over the word. Mode J erases circles after every step,
// which realizes c = 1 and h^i o h^i = h^i.
TLDiagram eval_word(const TLWord& w, TLMode mode);

// The image of a rank-n term in the diagram word monoid on 2n strands:
// p^i maps to h^{2i+3} o h^{2i+2} and q^i to h^{2i+1} o h^{2i+2}. The map is
// a homomorphism, with the unit going to the empty word.
TLWord embed_term(const Term& t);

// "h3.h2@4": generators dotted, leftmost applied last, then "@" and the
// strand count.
std::string to_string(const TLWord& w);

// Reads an endomorphism frieze as a diagram on the given strand count:
// positive point j becomes top j, negative point -j becomes bottom j.
TLDiagram frieze_to_tl(const Frieze& d, int strands);

// One generator of the infinite diagram monoid: a single cup or cap at k,
// every other strand shifted straight past it.
struct CupCapGen {
    bool cup = true;
    int k = 1;

    bool operator==(const CupCapGen&) const = default;
};

struct CupCapWord {
    std::vector<CupCapGen> gens;  // the leftmost generator is applied last
    TLMode mode = TLMode::K;

    bool operator==(const CupCapWord&) const = default;
};

// A planar matching on Z \ {0} with an identity tail: like a frieze, but the
// parity forms are dropped, cups and caps may nest, and circles are carried
// along. (type_n, type_m) is kept minimal; the transversals are derived by
// pairing the unclaimed points in order, which planarity forces.
struct GeneralDiagram {
    std::vector<std::pair<int, int>> cups;  // sorted; nesting allowed
    std::vector<std::pair<int, int>> caps;
    int type_n = 0;
    int type_m = 0;
    int circles = 0;

    bool operator==(const GeneralDiagram&) const = default;
};

GeneralDiagram make_general_diagram(std::vector<std::pair<int, int>> cups,
                                    std::vector<std::pair<int, int>> caps,
                                    std::pair<int, int> tail_type, int circles);

GeneralDiagram general_of_frieze(const Frieze& d);

// sigma_i maps to the single cup at 2i+2, delta_i to the single cap at 2i+1.
CupCapWord omega_generator(StdGen kind, int i);

// Folds stacking over the word; mode J erases circles after every step.
GeneralDiagram eval_cupcap(const CupCapWord& w);

struct RelationCheck {
    std::string family;
    int instances = 0;
    int failures = 0;
    std::vector<std::string> notes;  // one line per failing instance

    bool operator==(const RelationCheck&) const = default;
};

// Instantiates the diagram monoid equations over all legal indices at rank n:
// the h/c families on 2n strands, then the rank-n generator equations
// evaluated through embed_term, where both sides must also stay circle-free.
// Failures land in the report, not in exceptions.
std::vector<RelationCheck> verify_relations(int n);

}  // namespace simpend
