#include "simpend/ordmap.hpp"

#include <algorithm>
#include <string>

namespace simpend {

OrdMap::OrdMap(int n_, int m_, std::vector<int> values_) : n(n_), m(m_), values(std::move(values_)) {
    if (n < 0 || m < 0) throw ValidationError("negative size");
    if (static_cast<int>(values.size()) != n)
        throw ValidationError("value vector has length " + std::to_string(values.size()) +
                              ", domain size is " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (values[i] < 0 || values[i] >= m)
            throw ValidationError("value " + std::to_string(values[i]) + " at position " +
                                  std::to_string(i) + " outside codomain " + std::to_string(m));
        if (i > 0 && values[i - 1] > values[i])
            throw ValidationError("values decrease at position " + std::to_string(i));
    }
}

bool OrdMap::is_identity() const {
    if (n != m) return false;
    for (int i = 0; i < n; ++i)
        if (values[i] != i) return false;
    return true;
}

OrdMap identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i;
    return OrdMap(n, n, std::move(v));
}

OrdMap compose(const OrdMap& f, const OrdMap& g) {
    if (f.m != g.n) throw SizeMismatchError(f.m, g.n);
    std::vector<int> v(static_cast<std::size_t>(f.n));
    for (int i = 0; i < f.n; ++i) v[i] = g(f(i));
    return OrdMap(f.n, g.m, std::move(v));
}

OrdMap monoidal_sum(const OrdMap& f, const OrdMap& g) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(f.n + g.n));
    v.insert(v.end(), f.values.begin(), f.values.end());
    for (int i = 0; i < g.n; ++i) v.push_back(f.m + g(i));
    return OrdMap(f.n + g.n, f.m + g.m, std::move(v));
}

OrdMap generator(int n, Letter letter, int i) {
    if (n < 2) throw IndexError("rank " + std::to_string(n) + " has no generators");
    if (i < 0 || i > n - 2)
        throw IndexError("generator index " + std::to_string(i) + " outside 0.." +
                         std::to_string(n - 2));
    OrdMap f = identity(n);
    if (letter == Letter::p)
        f.values[i + 1] = i;
    else
        f.values[i] = i + 1;
    return f;
}

PointClassification classify_points(const OrdMap& f) {
    if (!f.is_endo())
        throw ValidationError("point classification needs an endomorphism, got " +
                              std::to_string(f.n) + " -> " + std::to_string(f.m));
    PointClassification c;
    const int n = f.n;
    std::vector<std::vector<int>> fiber(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) fiber[f(i)].push_back(i);

    for (int j = 0; j < n; ++j) {
        if (fiber[j].empty())
            c.empty_points.insert(j);
        else if (fiber[j].size() == 1)
            c.single_points.insert(j);
        else
            c.multiple_points.insert(j);
    }

    for (int i : c.empty_points)
        if (f(i) < i) c.bottom_p.insert(i);
    for (int i : c.multiple_points)
        for (int j : fiber[i])
            if (i <= j && j < fiber[i].back()) c.top_p.insert(j);
    for (int i = 0; i < n; ++i) {
        if (fiber[i].empty()) continue;
        if (fiber[i].front() < i) {
            c.bottom_q.insert(i);
            c.top_q.insert(fiber[i].front());
        }
    }

    // A critical pair is an empty/multiple point pair with only single points
    // strictly between.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool single_between = true;
            for (int k = i + 1; k < j && single_between; ++k)
                single_between = c.single_points.count(k) > 0;
            if (!single_between) continue;
            if (c.empty_points.count(i) && c.multiple_points.count(j))
                c.critical_pairs.push_back({PairKind::em, i, j, j - i});
            else if (c.multiple_points.count(i) && c.empty_points.count(j))
                c.critical_pairs.push_back({PairKind::me, i, j, j - i});
        }
    }
    return c;
}

NuComplexity complexity_nu(const OrdMap& f) {
    PointClassification c = classify_points(f);
    NuComplexity nu;
    nu.n1 = static_cast<int>(c.empty_points.size());
    nu.n2 = 0;
    for (const CriticalPair& cp : c.critical_pairs)
        if (nu.n2 == 0 || cp.weight < nu.n2) nu.n2 = cp.weight;
    return nu;
}

std::vector<GenSymbol> decompose(const OrdMap& f) {
    if (!f.is_endo())
        throw ValidationError("decompose needs an endomorphism, got " + std::to_string(f.n) +
                              " -> " + std::to_string(f.m));
    std::vector<GenSymbol> out;
    OrdMap cur = f;
    NuComplexity nu = complexity_nu(cur);
    while (nu != NuComplexity{0, 0}) {
        PointClassification c = classify_points(cur);
        // Minimal weight, then smallest left endpoint, so the output is
        // deterministic.
        const CriticalPair* best = nullptr;
        for (const CriticalPair& cp : c.critical_pairs)
            if (!best || cp.weight < best->weight || (cp.weight == best->weight && cp.i < best->i))
                best = &cp;
        if (!best) throw ValidationError("no critical pair despite nonzero complexity");
        if (best->kind == PairKind::em) {
            // cur = sigma(q^i) o cur' where cur' redirects the least preimage
            // of i+1 down to i.
            int i = best->i;
            int k = -1;
            for (int x = 0; x < cur.n; ++x)
                if (cur(x) == i + 1) { k = x; break; }
            cur.values[k] = i;
            out.push_back({Letter::q, i});
        } else {
            int j = best->j;
            int k = -1;
            for (int x = cur.n - 1; x >= 0; --x)
                if (cur(x) == j - 1) { k = x; break; }
            cur.values[k] = j;
            out.push_back({Letter::p, j - 1});
        }
        NuComplexity next = complexity_nu(cur);
        if (next >= nu) throw ValidationError("complexity failed to decrease");
        nu = next;
    }
    return out;
}

std::vector<OrdMap> enumerate_endos(int n) {
    if (n < 0 || n > 10)
        throw ValidationError("enumeration guarded at n <= 10, got " + std::to_string(n));
    std::vector<OrdMap> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == n) {
            out.push_back(OrdMap(n, n, v));
            return;
        }
        for (int val = low; val < n; ++val) {
            v[pos] = val;
            self(self, pos + 1, val);
        }
    };
    if (n == 0)
        out.push_back(OrdMap(0, 0, {}));
    else
        rec(rec, 0, 0);
    return out;
}

OrdEndoN::OrdEndoN(std::vector<int> prefix_, int type_n_, int type_m_)
    : prefix(std::move(prefix_)), type_n(type_n_), type_m(type_m_) {
    if (type_n < 0 || type_m < 0) throw ValidationError("negative type bound");
    if (static_cast<int>(prefix.size()) != type_n)
        throw ValidationError("prefix length " + std::to_string(prefix.size()) +
                              " does not match type (" + std::to_string(type_n) + "," +
                              std::to_string(type_m) + ")");
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i] < 0) throw ValidationError("negative value in prefix");
        if (i > 0 && prefix[i - 1] > prefix[i]) throw ValidationError("prefix values decrease");
    }
    if (!prefix.empty() && prefix.back() > type_m)
        throw ValidationError("prefix value " + std::to_string(prefix.back()) +
                              " exceeds tail start " + std::to_string(type_m));
    while (type_n > 0 && prefix.back() == type_m - 1) {
        prefix.pop_back();
        --type_n;
        --type_m;
    }
}

int OrdEndoN::operator()(int k) const {
    if (k < type_n) return prefix[static_cast<std::size_t>(k)];
    return k - type_n + type_m;
}

bool OrdEndoN::is_type(int n, int m) const {
    if (n < 0 || m < 0) return false;
    if (m - n != type_m - type_n) return false;
    return n >= type_n;
}

OrdEndoN compose(const OrdEndoN& f, const OrdEndoN& g) {
    // Beyond K both maps are in their tails, so g(f(k)) = k - K + g(f(K)).
    int K = f.type_n + std::max(0, g.type_n - f.type_m);
    std::vector<int> prefix(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) prefix[k] = g(f(k));
    int M = g(f(K));
    return OrdEndoN(std::move(prefix), K, M);
}

OrdEndoN std_generator(StdGen kind, int i) {
    if (i < 0) throw IndexError("generator index must be nonnegative");
    if (kind == StdGen::sigma) {
        std::vector<int> prefix(static_cast<std::size_t>(i + 1));
        for (int k = 0; k <= i; ++k) prefix[k] = k;
        return OrdEndoN(std::move(prefix), i + 1, i);
    }
    std::vector<int> prefix(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) prefix[k] = k;
    return OrdEndoN(std::move(prefix), i, i + 1);
}

OrdMap restrict_to(const OrdEndoN& f, int n, int m) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        v[k] = f(k);
        if (v[k] >= m)
            throw ValidationError("value " + std::to_string(v[k]) + " does not fit codomain " +
                                  std::to_string(m));
    }
    return OrdMap(n, m, std::move(v));
}

OrdEndoN extend(const OrdMap& f) { return OrdEndoN(f.values, f.n, f.m); }

}  // namespace simpend
