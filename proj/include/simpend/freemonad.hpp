#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpend/ordmap.hpp"

namespace simpend {

// Arrow terms of the free monad on one object. Objects are naturals with
// T(n) = n+1. Types live on every node and are checked at construction.
class MonadTerm {
  public:
    enum class Kind { id, comp, h, m };

    static MonadTerm id(int n);
    // g o f with f applied first; requires cod(f) = dom(g).
    static MonadTerm comp(const MonadTerm& g, const MonadTerm& f);
    // H(f : n->m) : n -> m+1.
    static MonadTerm h(const MonadTerm& f);
    // M(f : n->m+1) : n+1 -> m+1; requires cod(f) >= 1.
    static MonadTerm m(const MonadTerm& f);

    Kind kind() const { return node_->kind; }
    int dom() const { return node_->dom; }
    int cod() const { return node_->cod; }
    const MonadTerm& g() const { return *node_->g; }    // comp only
    const MonadTerm& f() const { return *node_->f; }    // comp only
    const MonadTerm& arg() const { return *node_->f; }  // h and m

  private:
    struct Node {
        Kind kind;
        int dom;
        int cod;
        std::shared_ptr<const MonadTerm> g;
        std::shared_ptr<const MonadTerm> f;
    };
    explicit MonadTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// A composition-free term X_n ... X_1 Id(base), symbols stored outermost
// first. Normal iff base = 0.
struct MonadWord {
    enum class Sym { H, M };
    std::vector<Sym> syms;
    int base = 0;

    bool operator==(const MonadWord&) const = default;
};

// Domain and codomain of the word, replaying the applications from Id(base)
// inward out. Throws ValidationError when some M lands on codomain 0.
int monad_dom(const MonadWord& w);
int monad_cod(const MonadWord& w);

MonadTerm term_of(const MonadWord& w);

// Symbol count over {1, o, H, M}; parentheses don't count.
int term_length(const MonadTerm& t);
// Sum of the lengths of all composition subterms. Zero iff composition-free.
int composition_degree(const MonadTerm& t);

// Rewrites the first comp node (preorder, g before f) whose arguments are
// composition-free, by the matching of (cat 1), (H), (M), (HM). nullopt iff
// t is composition-free.
std::optional<MonadTerm> eliminate_step(const MonadTerm& t);

// Iterates eliminate_step; the composition degree strictly decreases.
MonadWord eliminate_composition(const MonadTerm& t);

// eliminate_composition followed by rebasing Id(a) to (MH)^a Id(0).
MonadWord monad_normal_form(const MonadTerm& t);

OrdMap functor_G(const MonadTerm& t);
OrdMap functor_G(const MonadWord& w);

// The normal form whose G image is the given map.
MonadWord from_ordmap(const OrdMap& f);

// The generators of O_n inside the free monad: p^i and q^i as T^(n-i-2)
// wrappings of HMMH and MMHH over Id(i), with T(f) = M(H(f)).
MonadTerm embedded_generator(int n, Letter letter, int i);

// "MMH@0": symbols outermost first, then "@" and the base object.
std::string to_string(const MonadWord& w);
MonadWord parse_monad_word(const std::string& s);

}  // namespace simpend
