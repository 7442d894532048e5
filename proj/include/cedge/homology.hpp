/**
 * Exact graded Betti numbers of S/I for squarefree I via Hochster's formula:
 *
 *     beta_{i,sigma}(S/I) = dim H~_{|sigma|-i-1}(Delta|_sigma ; K)
 *
 * where Delta is the Stanley-Reisner complex of I. Ranks are computed
 * exactly, over GF(2) with word-packed elimination or over Q with
 * fraction-free integer elimination.
 */

#ifndef CEDGE_HOMOLOGY_HPP
#define CEDGE_HOMOLOGY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ideal.hpp"

namespace cedge {

enum class Field
{
    gf2,
    rationals
};

inline std::string field_name(Field f) { return f == Field::gf2 ? "gf2" : "q"; }

inline Field parse_field(const std::string& s)
{
    if (s == "gf2")
        return Field::gf2;
    if (s == "q")
        return Field::rationals;
    throw DomainError("unknown field '" + s + "' (expected gf2 or q)");
}

/**
 * Downward-closed family of subsets of {1..n}. An empty face list is the
 * void complex; {∅} is the irrelevant complex.
 */
class SimplicialComplex
{
  public:
    SimplicialComplex() = default;

    /// `faces` must already be closed under subsets.
    SimplicialComplex(int n, std::vector<Support> faces) : n_(n), faces_(std::move(faces))
    {
        std::sort(faces_.begin(), faces_.end());
        faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    }

    int ground() const { return n_; }
    const std::vector<Support>& faces() const { return faces_; }
    bool is_void() const { return faces_.empty(); }
    bool contains(Support f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

    SimplicialComplex restrict_to(Support sigma) const
    {
        std::vector<Support> kept;
        for (auto f : faces_)
            if (divides(f, sigma))
                kept.push_back(f);
        SimplicialComplex out;
        out.n_ = n_;
        out.faces_ = std::move(kept);
        return out;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  private:
    int n_ = 0;
    std::vector<Support> faces_;
};

/// Faces are the supports of squarefree monomials outside I.
inline SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal)
{
    if (ideal.is_zero())
        throw DomainError("Stanley-Reisner complex of the zero ideal is not supported");
    const int n = ideal.ambient();
    std::vector<Support> faces;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < count; ++s)
        if (!ideal.contains(static_cast<Support>(s)))
            faces.push_back(static_cast<Support>(s));
    return {n, std::move(faces)};
}

namespace detail {

// Rank of a 0/1 matrix over GF(2); each row is a packed bit vector.
inline std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows)
{
    std::size_t rank = 0;
    if (rows.empty())
        return 0;
    const std::size_t words = rows.front().size();
    for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col)
    {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r][w] & bit))
                for (std::size_t k = w; k < words; ++k)
                    rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

// Fraction-free (Bareiss) elimination: every intermediate entry is a minor
// of the input, and each division by the previous pivot is exact.
template <typename Int>
bool bareiss_step(std::vector<std::vector<Int>>& rows, std::size_t rank, std::size_t col, const Int& previous)
{
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
    {
        for (std::size_t k = col + 1; k < rows[r].size(); ++k)
        {
            if constexpr (std::is_same_v<Int, std::int64_t>)
            {
                std::int64_t a, b, diff;
                if (__builtin_mul_overflow(rows[rank][col], rows[r][k], &a) ||
                    __builtin_mul_overflow(rows[r][col], rows[rank][k], &b) || __builtin_sub_overflow(a, b, &diff))
                    return false;
                rows[r][k] = diff / previous;
            }
            else
            {
                rows[r][k] = (rows[rank][col] * rows[r][k] - rows[r][col] * rows[rank][k]) / previous;
            }
        }
        rows[r][col] = 0;
    }
    return true;
}

// Rank over Q of an integer matrix. Returns nullopt if Int overflowed.
template <typename Int>
std::optional<std::size_t> rank_bareiss(std::vector<std::vector<Int>> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    Int previous = 1;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col)
    {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        if (!bareiss_step(rows, rank, col, previous))
            return std::nullopt;
        previous = rows[rank][col];
        ++rank;
    }
    return rank;
}

inline std::size_t rank_rational(const std::vector<std::vector<std::int64_t>>& rows)
{
    if (auto r = rank_bareiss(rows))
        return *r;
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> wide;
    wide.reserve(rows.size());
    for (const auto& row : rows)
        wide.emplace_back(row.begin(), row.end());
    return *rank_bareiss(std::move(wide));
}

// Rank of the boundary map from faces of size k to faces of size k-1.
inline std::size_t boundary_rank(const std::vector<Support>& upper, const std::vector<Support>& lower, Field field)
{
    if (upper.empty() || lower.empty())
        return 0;
    auto column = [&lower](Support f) {
        return static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), f) - lower.begin());
    };

    if (field == Field::gf2)
    {
        const std::size_t words = (lower.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(upper.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < upper.size(); ++r)
            for (Support rest = upper[r]; rest; rest &= rest - 1)
            {
                std::size_t c = column(upper[r] & ~(rest & (~rest + 1)));
                rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
            }
        return rank_gf2(std::move(rows));
    }

    std::vector<std::vector<std::int64_t>> rows(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t r = 0; r < upper.size(); ++r)
    {
        int sign = 1;
        for (Support rest = upper[r]; rest; rest &= rest - 1, sign = -sign)
            rows[r][column(upper[r] & ~(rest & (~rest + 1)))] = sign;
    }
    return rank_rational(rows);
}

}   // namespace detail

/**
 * Reduced homology dimensions; entry k holds dim H~_{k-1}, so index 0 is
 * degree -1. The chain complex includes the empty face in degree -1, which
 * gives H~_{-1}({∅}) = K. The void complex yields an empty vector.
 */
inline std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, Field field)
{
    if (complex.is_void())
        return {};
    int top = 0;
    for (auto f : complex.faces())
        top = std::max(top, degree(f));

    // by_size[k] holds the faces with k vertices, sorted for column lookup
    std::vector<std::vector<Support>> by_size(static_cast<std::size_t>(top) + 2);
    for (auto f : complex.faces())
        by_size[degree(f)].push_back(f);

    std::vector<std::size_t> rank(by_size.size() + 1, 0);   // rank[k]: boundary out of size-k faces
    for (std::size_t k = 1; k < by_size.size(); ++k)
        rank[k] = detail::boundary_rank(by_size[k], by_size[k - 1], field);

    std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1);
    for (std::size_t k = 0; k < dims.size(); ++k)
        dims[k] = by_size[k].size() - rank[k] - rank[k + 1];
    return dims;
}

/// Largest ambient dimension the Betti oracle accepts by default.
inline constexpr int kDefaultOracleLimit = 14;

/// Graded Betti numbers beta_{i,j}(S/I); absent entries are zero.
struct BettiTable
{
    int n = 0;
    Field field = Field::gf2;
    std::map<std::pair<int, int>, std::uint64_t> entries;

    std::uint64_t at(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

inline BettiTable hochster_betti(const SquarefreeIdeal& ideal, Field field, int limit = kDefaultOracleLimit)
{
    if (ideal.ambient() > limit)
        throw LimitError("Betti oracle limit is n <= " + std::to_string(limit) + ", got n=" +
                         std::to_string(ideal.ambient()));
    const int n = ideal.ambient();
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<bool> is_face(count);
    for (std::uint64_t s = 0; s < count; ++s)
        is_face[s] = !ideal.contains(static_cast<Support>(s));

    BettiTable table;
    table.n = n;
    table.field = field;
    std::vector<Support> faces;
    for (std::uint64_t s = 0; s < count; ++s)
    {
        const auto sigma = static_cast<Support>(s);
        // A nonempty simplex is acyclic.
        if (sigma != 0 && is_face[sigma])
            continue;
        faces.clear();
        for (Support f = sigma;; f = (f - 1) & sigma)
        {
            if (is_face[f])
                faces.push_back(f);
            if (f == 0)
                break;
        }
        const auto dims = reduced_homology_dims(SimplicialComplex(n, faces), field);
        const int size = degree(sigma);
        for (std::size_t k = 0; k < dims.size(); ++k)
            if (dims[k] > 0)
                table.entries[{size - static_cast<int>(k), size}] += dims[k];
    }
    return table;
}

struct RegPd
{
    int reg_quotient;   // reg(S/I)
    int pd_quotient;    // pd(S/I)
    int reg_ideal;      // reg(I) = reg(S/I) + 1
    int pd_ideal;       // pd(I) = pd(S/I) - 1
};

inline RegPd reg_pd(const BettiTable& table)
{
    if (table.entries.empty())
        throw DomainError("reg/pd of an empty Betti table");
    int reg = 0, pd = 0;
    bool first = true;
    for (const auto& [key, value] : table.entries)
    {
        if (value == 0)
            continue;
        const auto [i, j] = key;
        reg = first ? j - i : std::max(reg, j - i);
        pd = first ? i : std::max(pd, i);
        first = false;
    }
    if (first)
        throw DomainError("reg/pd of an empty Betti table");
    return {reg, pd, reg + 1, pd - 1};
}

/// CM test by Auslander-Buchsbaum: pd(S/I) equals the height of I.
inline bool is_cohen_macaulay(const SquarefreeIdeal& ideal, Field field)
{
    return reg_pd(hochster_betti(ideal, field)).pd_quotient == height(ideal);
}

inline bool has_linear_resolution(const SquarefreeIdeal& ideal, Field field)
{
    auto d = ideal.common_degree();
    if (!d)
        return false;
    return reg_pd(hochster_betti(ideal, field)).reg_ideal == *d;
}

/// Every nonzero squarefree component I_[d] must have a linear resolution.
inline bool is_componentwise_linear(const SquarefreeIdeal& ideal, Field field)
{
    for (int d = ideal.initial_degree(); d <= ideal.ambient(); ++d)
    {
        auto component = squarefree_component(ideal, d);
        if (!component.is_zero() && !has_linear_resolution(component, field))
            return false;
    }
    return true;
}

/// S/I is sequentially CM iff the Alexander dual is componentwise linear.
inline bool is_sequentially_cm(const SquarefreeIdeal& ideal, Field field)
{
    return is_componentwise_linear(alexander_dual(ideal), field);
}

}   // namespace cedge

#endif
