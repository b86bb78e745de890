#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpend/ordmap.hpp"

namespace simpend {

// A composite r^i o r^(i-1) o ... o r^j of one generator letter, 0 <= j <= i.
struct Block {
    Letter letter;
    int i;  // upper index
    int j;  // lower index

    int weight() const { return i - j + 2; }
    bool singular() const { return i == j; }
    bool operator==(const Block&) const = default;
};

// Terms of O_n: trees over Unit, Gen and Comp with the ambient rank carried
// along. Comp(x, y) denotes x o y with y applied first. Immutable.
class Term {
  public:
    enum class Kind { unit, gen, comp };

    static Term unit(int n);
    static Term gen(int n, Letter letter, int index);
    static Term comp(const Term& x, const Term& y);
    // word[0] o word[1] o ...; the leftmost symbol is applied last.
    static Term from_word(int n, const std::vector<GenSymbol>& word);

    Kind kind() const { return node_->kind; }
    int rank() const { return node_->rank; }
    Letter letter() const { return node_->letter; }
    int index() const { return node_->index; }
    const Term& left() const { return *node_->left; }
    const Term& right() const { return *node_->right; }

  private:
    struct Node {
        Kind kind;
        int rank;
        Letter letter = Letter::p;
        int index = 0;
        std::shared_ptr<const Term> left;
        std::shared_ptr<const Term> right;
    };
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// The flattened block formulation of a term. A nullopt item is an explicit
// unit symbol; it stays in the word until a unit reduction erases it, so that
// m2 counts occurrences of 1.
struct BlockWord {
    int n = 0;
    std::vector<std::optional<Block>> items;

    bool operator==(const BlockWord&) const = default;
};

struct NormalForm {
    int n = 0;
    std::vector<Block> blocks;  // empty denotes 1

    bool operator==(const NormalForm&) const = default;
};

struct MuComplexity {
    long long m1 = 0;  // sum of block weights
    long long m2 = 0;  // confrontation count plus unit occurrences

    auto operator<=>(const MuComplexity&) const = default;
};

enum class RedexSort { rr, pq, qp, unit };

enum class EquationId {
    Ipp, IIpp, III1pp, III2pp, III3pp,
    Iqq, IIqq,
    Ipq, II1pq, II11pq, II2pq, II21pq, II3pq, II4pq,
    Iqp, II1qp, II11qp, II2qp, II3qp, II31qp, II4qp,
    unit,
};

// Roman-numeral label, e.g. "II.1.1pq"; the unit equation prints as "1".
std::string to_string(EquationId eq);

struct RedexInfo {
    RedexSort sort;
    EquationId eq;

    bool operator==(const RedexInfo&) const = default;
};

BlockWord to_blocks(const Term& t);

// The unique applicable block equation for the adjacent pair, or nullopt when
// the pair is not a redex. The first call checks, once, that the 21 side
// conditions are pairwise exclusive and jointly exhaustive over all redexes
// up to rank 8.
std::optional<RedexInfo> classify_redex(const Block& left, const Block& right);

// Right-hand side of the given block equation for the redex (left, right).
std::vector<Block> redex_rhs(EquationId eq, const Block& left, const Block& right);

struct ReduceStep {
    BlockWord word;
    EquationId eq;
    int pos;  // item position where the rewrite or erasure happened
};

// Rewrites the leftmost redex (block pair or explicit unit); nullopt iff the
// word has none. mu strictly decreases.
std::optional<ReduceStep> reduce_step(const BlockWord& w);

MuComplexity complexity_mu(const BlockWord& w);

struct TraceStep {
    EquationId eq;
    int pos;

    bool operator==(const TraceStep&) const = default;
};

struct NormalizeResult {
    NormalForm nf;
    std::vector<TraceStep> trace;
};

NormalizeResult normalize(const Term& t);
NormalizeResult normalize(const BlockWord& w);

bool validate_normal_form(int n, const std::vector<Block>& blocks);

OrdMap sigma(const Term& t);
OrdMap sigma_block(int n, const Block& b);
OrdMap sigma(const BlockWord& w);
OrdMap sigma(const NormalForm& nf);

// Reads the normal form off the bottom/top points of an endomorphism: the
// k-th bottom point b gives the block upper index b-1, the k-th top point the
// lower index, the letter comes from the point kind.
NormalForm normal_form_of_endo(const OrdMap& f);

// Word problem: sigma(x) = sigma(y), cross-checked against syntactic identity
// of the two normal forms.
bool equal(const Term& x, const Term& y);

// All normal forms of rank n, lexicographically by block sequence. Test and
// acceptance plumbing; the count is |O_n|.
std::vector<NormalForm> enumerate_normal_forms(int n);

// Enumerates every block pair up to the given rank and checks that exactly
// one equation matches each redex and none matches a non-redex. Throws on
// violation.
void verify_redex_classification(int max_rank);

Term term_of(const NormalForm& nf);

}  // namespace simpend
