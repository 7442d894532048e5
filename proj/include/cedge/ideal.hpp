/**
 * Squarefree monomial ideals in K[x_1, ..., x_n].
 *
 * A squarefree monomial is identified with its support, stored as a bit mask
 * (bit k-1 set iff x_k divides it), so divisibility is subset containment.
 * Ideals are kept as minimal generating sets (inclusion antichains).
 */

#ifndef CEDGE_IDEAL_HPP
#define CEDGE_IDEAL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

namespace cedge {

using Support = std::uint32_t;

/// Largest number of variables an ideal may live in.
inline constexpr int kMaxVariables = 24;

inline Support full_support(int n) { return static_cast<Support>((std::uint64_t{1} << n) - 1); }
inline Support variable(int k) { return Support{1} << (k - 1); }
inline int degree(Support s) { return std::popcount(s); }
inline bool divides(Support a, Support b) { return (a & ~b) == 0; }

/// Sorted 1-based indices of the variables in a support.
inline std::vector<int> indices(Support s)
{
    std::vector<int> out;
    while (s)
    {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

inline Support support_of(const std::vector<int>& idx)
{
    Support s = 0;
    for (int k : idx)
        s |= variable(k);
    return s;
}

/// Lexicographic order on the sorted index lists of two supports.
inline bool lex_less(Support a, Support b)
{
    auto ia = indices(a);
    auto ib = indices(b);
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

struct SquarefreeMonomial
{
    int n = 0;
    Support support = 0;

    int degree() const { return cedge::degree(support); }
    friend bool operator==(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;
};

class SquarefreeIdeal
{
  public:
    SquarefreeIdeal() = default;

    /**
     * Minimalizes `gens` (drops every support that strictly contains another
     * and removes repeats) and sorts the survivors lexicographically.
     *
     * An empty support would make the ideal the unit ideal; that is rejected
     * with DomainError("unit ideal"). An empty list gives the zero ideal.
     */
    SquarefreeIdeal(int n, std::vector<Support> gens) : n_(n)
    {
        if (n < 1 || n > kMaxVariables)
            throw LimitError("squarefree ideals support 1 <= n <= " + std::to_string(kMaxVariables) +
                             " variables, got n=" + std::to_string(n));
        const Support ambient = full_support(n);
        for (auto s : gens)
        {
            if (s == 0)
                throw DomainError("unit ideal");
            if (s & ~ambient)
                throw DomainError("generator uses a variable outside x_1..x_" + std::to_string(n));
        }

        // Processing by increasing degree means a support only has to be
        // checked against supports already kept.
        std::sort(gens.begin(), gens.end(), [](Support a, Support b) {
            return degree(a) != degree(b) ? degree(a) < degree(b) : a < b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (auto s : gens)
            if (std::none_of(gens_.begin(), gens_.end(), [s](Support g) { return divides(g, s); }))
                gens_.push_back(s);
        std::sort(gens_.begin(), gens_.end(), lex_less);
    }

    int ambient() const { return n_; }
    const std::vector<Support>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool contains(Support monomial) const
    {
        return std::any_of(gens_.begin(), gens_.end(), [monomial](Support g) { return divides(g, monomial); });
    }

    /// Smallest generator degree (0 for the zero ideal).
    int initial_degree() const
    {
        int d = 0;
        for (auto g : gens_)
            d = (d == 0) ? degree(g) : std::min(d, degree(g));
        return d;
    }

    /// Generator degree when every generator has the same degree.
    std::optional<int> common_degree() const
    {
        if (gens_.empty())
            return std::nullopt;
        int d = degree(gens_.front());
        for (auto g : gens_)
            if (degree(g) != d)
                return std::nullopt;
        return d;
    }

    friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

  private:
    int n_ = 0;
    std::vector<Support> gens_;
};

inline SquarefreeIdeal minimalize(int n, std::vector<Support> gens) { return {n, std::move(gens)}; }

/**
 * I_c(G): one generator per edge {i, j}, the product of all variables except
 * x_i and x_j. Needs n >= 3; an edgeless graph gives the zero ideal.
 */
inline SquarefreeIdeal complementary_edge_ideal(const SimpleGraph& g)
{
    if (g.order() < 3)
        throw DomainError("degenerate ambient: complementary edge ideals need n >= 3, got n=" +
                          std::to_string(g.order()));
    const Support all = full_support(g.order());
    std::vector<Support> gens;
    gens.reserve(g.size());
    for (const auto& e : g.edges())
        gens.push_back(all & ~variable(e.u) & ~variable(e.v));
    return {g.order(), std::move(gens)};
}

/// Minimal transversals of the generator supports, in lexicographic order.
/// These are the supports of the minimal primes of I.
inline std::vector<Support> minimal_vertex_covers(const SquarefreeIdeal& ideal)
{
    if (ideal.is_zero())
        throw DomainError("no associated primes computed for zero ideal");

    const auto& gens = ideal.generators();
    auto covers_all = [&](Support t) {
        return std::all_of(gens.begin(), gens.end(), [t](Support g) { return (g & t) != 0; });
    };

    // Branch on the vertices of the first generator the partial cover misses.
    // A vertex that is skipped in one branch is banned from the later ones,
    // which keeps each candidate from being generated twice.
    std::unordered_set<Support> found;
    auto branch = [&](auto&& self, Support cover, Support banned) -> void {
        auto miss = std::find_if(gens.begin(), gens.end(), [cover](Support g) { return (g & cover) == 0; });
        if (miss == gens.end())
        {
            found.insert(cover);
            return;
        }
        Support choices = *miss & ~banned;
        while (choices)
        {
            Support v = choices & (~choices + 1);
            self(self, cover | v, banned);
            banned |= v;
            choices &= choices - 1;
        }
    };
    branch(branch, 0, 0);

    std::vector<Support> out;
    for (auto t : found)
    {
        bool minimal = true;
        for (Support rest = t; rest && minimal; rest &= rest - 1)
            minimal = !covers_all(t & ~(rest & (~rest + 1)));
        if (minimal)
            out.push_back(t);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

inline int height(const SquarefreeIdeal& ideal)
{
    auto covers = minimal_vertex_covers(ideal);
    int h = ideal.ambient();
    for (auto c : covers)
        h = std::min(h, degree(c));
    return h;
}

/// I^∨: generated by the minimal vertex covers of I.
inline SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal)
{
    if (ideal.is_zero())
        throw DomainError("Alexander dual of the zero ideal is not represented");
    return {ideal.ambient(), minimal_vertex_covers(ideal)};
}

/// Result of I : m. When `unit` is set the colon is the whole ring and
/// `ideal` is left as the zero ideal.
struct ColonIdeal
{
    bool unit = false;
    SquarefreeIdeal ideal;
};

inline ColonIdeal colon_by_monomial(const SquarefreeIdeal& ideal, const SquarefreeMonomial& m)
{
    if (m.n != ideal.ambient())
        throw DomainError("colon: monomial and ideal live in different rings");
    std::vector<Support> quotients;
    quotients.reserve(ideal.generators().size());
    for (auto g : ideal.generators())
    {
        Support q = g & ~m.support;
        if (q == 0)
            return {true, SquarefreeIdeal(ideal.ambient(), {})};
        quotients.push_back(q);
    }
    return {false, SquarefreeIdeal(ideal.ambient(), std::move(quotients))};
}

/// I_[d]: generated by every squarefree monomial of degree d that lies in I.
inline SquarefreeIdeal squarefree_component(const SquarefreeIdeal& ideal, int d)
{
    const int n = ideal.ambient();
    if (ideal.is_zero())
        throw DomainError("squarefree component of the zero ideal");
    if (d < 1 || d > n)
        throw DomainError("squarefree component degree must lie in 1.." + std::to_string(n));

    std::vector<Support> gens;
    // Gosper's hack walks all n-bit masks with popcount d.
    std::uint64_t s = (std::uint64_t{1} << d) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit)
    {
        if (ideal.contains(static_cast<Support>(s)))
            gens.push_back(static_cast<Support>(s));
        std::uint64_t c = s & (~s + 1);
        std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return {n, std::move(gens)};
}

enum class QuotientsOutcome
{
    yes,
    no,
    inconclusive
};

struct LinearQuotientsVerdict
{
    QuotientsOutcome outcome = QuotientsOutcome::no;
    std::vector<Support> ordering;   // witness when outcome == yes
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultQuotientsBudget = 1'000'000;

/// True when (earlier) : next is generated by variables (or is zero).
inline bool has_linear_colon(int n, const std::vector<Support>& earlier, Support next)
{
    if (earlier.empty())
        return true;
    auto colon = colon_by_monomial(SquarefreeIdeal(n, earlier), {n, next});
    if (colon.unit)
        return false;
    const auto& gens = colon.ideal.generators();
    return std::all_of(gens.begin(), gens.end(), [](Support g) { return degree(g) == 1; });
}

/**
 * Backtracking search for a linear-quotients order u_1, ..., u_m: every
 * (u_1, ..., u_{j-1}) : u_j must be generated by variables. Only orders with
 * nondecreasing degree are explored. Whether a prefix can be completed
 * depends only on the set of generators it uses, so dead sets are cached
 * when there are at most 64 generators.
 */
inline LinearQuotientsVerdict has_linear_quotients(const SquarefreeIdeal& ideal,
                                                   std::uint64_t budget = kDefaultQuotientsBudget)
{
    if (ideal.is_zero())
        throw DomainError("linear quotients of the zero ideal");

    const int n = ideal.ambient();
    std::vector<Support> gens = ideal.generators();
    std::stable_sort(gens.begin(), gens.end(), [](Support a, Support b) { return degree(a) < degree(b); });
    const std::size_t m = gens.size();
    const bool memo = m <= 64;

    LinearQuotientsVerdict verdict;
    std::unordered_set<std::uint64_t> dead;
    std::vector<bool> used(m, false);
    std::vector<Support> prefix;
    std::uint64_t used_key = 0;
    bool out_of_budget = false;

    auto extend = [&](auto&& self) -> bool {
        if (prefix.size() == m)
            return true;
        if (memo && dead.count(used_key))
            return false;
        if (++verdict.nodes > budget)
        {
            out_of_budget = true;
            return false;
        }
        int min_deg = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (!used[k])
            {
                min_deg = degree(gens[k]);
                break;
            }
        for (std::size_t k = 0; k < m && degree(gens[k]) <= min_deg; ++k)
        {
            if (used[k] || !has_linear_colon(n, prefix, gens[k]))
                continue;
            used[k] = true;
            used_key ^= std::uint64_t{1} << (k % 64);
            prefix.push_back(gens[k]);
            if (self(self))
                return true;
            prefix.pop_back();
            used_key ^= std::uint64_t{1} << (k % 64);
            used[k] = false;
            if (out_of_budget)
                return false;
        }
        if (memo)
            dead.insert(used_key);
        return false;
    };

    if (extend(extend))
    {
        verdict.outcome = QuotientsOutcome::yes;
        verdict.ordering = prefix;
    }
    else
    {
        verdict.outcome = out_of_budget ? QuotientsOutcome::inconclusive : QuotientsOutcome::no;
    }
    return verdict;
}

}   // namespace cedge

#endif
