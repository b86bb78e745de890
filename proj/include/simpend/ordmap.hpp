#pragma once

#include <compare>
#include <set>
#include <utility>
#include <vector>

#include "simpend/errors.hpp"

namespace simpend {

// An order-preserving function {0..n-1} -> {0..m-1}, stored as a dense value
// vector. These are the arrows of the simplicial category Delta.
struct OrdMap {
    int n = 0;
    int m = 0;
    std::vector<int> values;

    OrdMap() = default;
    OrdMap(int n_, int m_, std::vector<int> values_);

    int operator()(int i) const { return values.at(static_cast<std::size_t>(i)); }
    bool is_endo() const { return n == m; }
    bool is_identity() const;

    bool operator==(const OrdMap&) const = default;
};

OrdMap identity(int n);

// compose(f, g) applies f first: the result is g o f.
OrdMap compose(const OrdMap& f, const OrdMap& g);

// (f + g)(i) = f(i) for i < n, and n' + g(i - n) above.
OrdMap monoidal_sum(const OrdMap& f, const OrdMap& g);

enum class Letter { p, q };

// sigma(p^i): identity except i+1 -> i. sigma(q^i): identity except i -> i+1.
OrdMap generator(int n, Letter letter, int i);

enum class PairKind { em, me };

struct CriticalPair {
    PairKind kind;
    int i;
    int j;
    int weight;  // j - i

    bool operator==(const CriticalPair&) const = default;
};

struct PointClassification {
    std::set<int> empty_points;
    std::set<int> single_points;
    std::set<int> multiple_points;
    std::set<int> bottom_p;
    std::set<int> top_p;
    std::set<int> bottom_q;
    std::set<int> top_q;
    std::vector<CriticalPair> critical_pairs;
};

PointClassification classify_points(const OrdMap& f);

struct NuComplexity {
    int n1 = 0;  // number of empty points
    int n2 = 0;  // minimal critical-pair weight, 0 when there is none

    auto operator<=>(const NuComplexity&) const = default;
};

NuComplexity complexity_nu(const OrdMap& f);

struct GenSymbol {
    Letter letter;
    int index;

    bool operator==(const GenSymbol&) const = default;
};

// Writes f as a composite of generators; the leftmost symbol is applied last,
// so f = generator(first) o ... o generator(last). Empty iff f is the identity.
std::vector<GenSymbol> decompose(const OrdMap& f);

// All order-preserving endomorphisms of n, lexicographically by value vector.
// Guarded at n <= 10; this is the brute-force oracle the tests lean on.
std::vector<OrdMap> enumerate_endos(int n);

// An order-preserving endomorphism of N of finite type (n, m): it acts as
// prefix[k] below n and as k - n + m from n on. Canonical form keeps (n, m)
// minimal, so equality is plain field equality.
struct OrdEndoN {
    std::vector<int> prefix;
    int type_n = 0;
    int type_m = 0;

    OrdEndoN() = default;
    OrdEndoN(std::vector<int> prefix_, int type_n_, int type_m_);

    int operator()(int k) const;
    bool is_type(int n, int m) const;
    bool is_identity() const { return prefix.empty() && type_n == 0 && type_m == 0; }

    bool operator==(const OrdEndoN&) const = default;
};

// compose(f, g) applies f first, as for OrdMap.
OrdEndoN compose(const OrdEndoN& f, const OrdEndoN& g);

enum class StdGen { sigma, delta };

// sigma_i collapses i+1 onto i; delta_i skips over i.
OrdEndoN std_generator(StdGen kind, int i);

// Restriction of f to {0..n-1} -> {0..m-1}; every prefix value must fit.
OrdMap restrict_to(const OrdEndoN& f, int n, int m);

// Extension of f by the identity tail: type (f.n, f.m).
OrdEndoN extend(const OrdMap& f);

}  // namespace simpend
