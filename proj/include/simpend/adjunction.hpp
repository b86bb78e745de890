#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpend/frieze.hpp"
#include "simpend/ordmap.hpp"

namespace simpend {

// Objects of the free adjunction generated by (0, 1). Side b carries the
// words (GF)^level O, side a the same words with one F prefixed. The E-index
// counts the functor symbols: 2*level for side b, 2*level + 1 for side a.
enum class AdjSide { a, b };

struct AdjObject {
    AdjSide side = AdjSide::b;
    int level = 0;

    bool operator==(const AdjObject&) const = default;
};

int object_index(const AdjObject& obj);

// Arrow terms of the free adjunction. Types live on every node and are
// checked at construction.
class AdjTerm {
  public:
    enum class Kind { id, comp, f, g, phi_a, gamma_c };

    static AdjTerm id(AdjObject obj);
    // g o f with f applied first; requires cod(f) = dom(g).
    static AdjTerm comp(const AdjTerm& g, const AdjTerm& f);
    // F(g : b1 -> b2) : Fb1 -> Fb2, side a with the levels kept.
    static AdjTerm f(const AdjTerm& g);
    // G(f : a1 -> a2) : Ga1 -> Ga2, side b with both levels up one.
    static AdjTerm g(const AdjTerm& f);
    // phi_a(f : a1 -> a2) : FGa1 -> a2, so side a, domain level up one.
    static AdjTerm phi_a(const AdjTerm& f);
    // gamma_c(g : b1 -> b2) : b1 -> GFb2, so side b, codomain level up one.
    static AdjTerm gamma_c(const AdjTerm& g);

    Kind kind() const { return node_->kind; }
    AdjObject dom() const { return node_->dom; }
    AdjObject cod() const { return node_->cod; }
    const AdjTerm& g() const { return *node_->g; }    // comp only
    const AdjTerm& f() const { return *node_->f; }    // comp only
    const AdjTerm& arg() const { return *node_->f; }  // f, g, phi_a, gamma_c

  private:
    struct Node {
        Kind kind;
        AdjObject dom;
        AdjObject cod;
        std::shared_ptr<const AdjTerm> g;
        std::shared_ptr<const AdjTerm> f;
    };
    explicit AdjTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// A composition-free term X_n ... X_1 Id(O), symbols stored outermost first.
// The typing forces F to precede only G or GammaC, G only F or PhiA, PhiA
// only F or PhiA, and GammaC only G or GammaC.
struct AdjWord {
    enum class Sym { F, G, PhiA, GammaC };
    std::vector<Sym> syms;

    bool operator==(const AdjWord&) const = default;
};

// Domain and codomain of the word, replaying the applications from Id(O)
// inward out. Throws ValidationError when a symbol lands on the wrong side.
AdjObject adj_dom(const AdjWord& w);
AdjObject adj_cod(const AdjWord& w);

AdjTerm term_of(const AdjWord& w);

// Symbol count over {1, o, F, G, phi_a, gamma_c}; parentheses don't count.
int term_length(const AdjTerm& t);
// Sum of the lengths of all composition subterms plus the length of the
// whole term. Equals term_length iff t is composition-free.
int composition_degree(const AdjTerm& t);

// Rewrites the first comp node (preorder, g before f) whose arguments are
// composition-free, by the matching of (cat 1), (fun 1), (fun 2), (nat 1),
// (nat 2), (phi_a gamma_c). nullopt iff t is composition-free.
std::optional<AdjTerm> eliminate_step(const AdjTerm& t);

// Iterates eliminate_step; the composition degree strictly decreases.
AdjTerm eliminate_composition_adj(const AdjTerm& t);

// eliminate_composition_adj followed by expanding the Id leaf down to Id(O):
// Id at b level k becomes (GF)^k, at a level k becomes F(GF)^k.
AdjWord adj_normal_form(const AdjTerm& t);

// A frieze together with the index (n, m) it is considered at; the stored
// minimal type always admits the index, shifting both components equally.
struct IndexedFrieze {
    Frieze d;
    int n = 0;
    int m = 0;

    bool operator==(const IndexedFrieze&) const = default;
};

// Id maps to the unit frieze at the object index, F and G shift the index by
// one on both components, phi_a adds the cup [n+1, n+2] and reanchors the
// index to (n+2, m), gamma_c adds the cap [-(m+2), -(m+1)] towards (n, m+2),
// and compositions stack.
IndexedFrieze functor_E(const AdjTerm& t);

// The term whose functor_E image is e, by peeling the top cap as gamma_c on
// side b and the outermost cup as phi_a on side a, else G or F. Throws
// ValidationError when the frieze does not admit the index.
AdjTerm from_frieze(const IndexedFrieze& e);

// Restriction of phi(e.d) to the window named by the index halves. Throws
// ValidationError on an odd or inadmissible index.
OrdMap functor_S(const IndexedFrieze& e);

// The frieze of the extension of f, indexed (2n, 2m); inverse to functor_S.
IndexedFrieze functor_D(const OrdMap& f);

// The generators of O_n as endomorphisms of (GF)^n O:
// p^i = (GF)^(n-i-2) gamma_c G phi_a F (GF)^i and
// q^i = (GF)^(n-i-2) G phi_a F gamma_c (GF)^i over Id(O).
AdjTerm b_generator(int n, Letter letter, int i);

// All normal-form words of endomorphism type at b level n, in DFS order;
// each has exactly 2n symbols. Guarded at n <= 8.
std::vector<AdjWord> enumerate_endo_words(int n);

// "GAFC@O": symbols outermost first (A = phi_a, C = gamma_c), then the base
// object marker.
std::string to_string(const AdjWord& w);
AdjWord parse_adj_word(const std::string& s);

}  // namespace simpend
