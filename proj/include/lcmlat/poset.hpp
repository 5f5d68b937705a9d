#ifndef LCMLAT_POSET_HPP
#define LCMLAT_POSET_HPP

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcmlat {

using Bitset = boost::dynamic_bitset<>;

/// Finite poset over elements 0..n-1 with string labels. The order is held
/// as up-set bitsets; the cover relation (transitive reduction) and cover
/// adjacency are computed once and cached.
class Poset {
public:
    Poset() = default;

    /// `up[a]` must contain b iff a <= b (reflexive, antisymmetric,
    /// transitive; validated).
    static Poset from_leq(std::vector<std::string> labels, std::vector<Bitset> up);

    /// Builds from an explicit cover edge list; validates that the edges
    /// are acyclic and transitively reduced.
    static Poset from_cover_edges(std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& covers);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(int e) const { return labels_.at(static_cast<std::size_t>(e)); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool covers(int a, int b) const;  // b covers a

    const Bitset& up_set(int a) const { return up_[static_cast<std::size_t>(a)]; }
    const Bitset& down_set(int a) const { return down_[static_cast<std::size_t>(a)]; }
    /// Elements covering a / covered by a, as bitsets and index lists.
    const Bitset& cover_up_set(int a) const { return cover_up_[static_cast<std::size_t>(a)]; }
    const Bitset& cover_down_set(int a) const { return cover_down_[static_cast<std::size_t>(a)]; }
    const std::vector<int>& covers_above(int a) const { return cover_above_[static_cast<std::size_t>(a)]; }
    const std::vector<int>& covers_below(int a) const { return cover_below_[static_cast<std::size_t>(a)]; }

    /// Cover edges (a, b) with b covering a, sorted.
    const std::vector<std::pair<int, int>>& cover_edges() const { return cover_edges_; }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    std::optional<int> bottom() const;
    std::optional<int> top() const;
    bool is_bounded() const { return bottom().has_value() && top().has_value(); }
    /// Elements covering the bottom; requires a bottom.
    std::vector<int> atoms() const;

    /// Induced subposet on the given elements (ascending by original index);
    /// labels are inherited.
    Poset induced(const std::vector<int>& elements) const;

private:
    void finalize();

    std::vector<std::string> labels_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<Bitset> cover_up_;
    std::vector<Bitset> cover_down_;
    std::vector<std::vector<int>> cover_above_;
    std::vector<std::vector<int>> cover_below_;
    std::vector<std::pair<int, int>> cover_edges_;
};

/// Element indices of [x, y]; throws unless x <= y.
std::vector<int> interval_elements(const Poset& P, int x, int y);

/// Closed interval [x, y] as an induced poset; throws on incomparable ends.
Poset interval(const Poset& P, int x, int y);
/// Open interval (x, y); throws on incomparable ends.
Poset open_interval(const Poset& P, int x, int y);
/// P minus its bottom and top; requires a bounded poset.
Poset proper_part(const Poset& P);

/// Bounded with all maximal chains of equal length.
bool is_graded_poset(const Poset& P);

/// Whenever a, b cover a common c, some d covers both a and b.
bool is_semimodular(const Poset& P);
/// Bounded and every closed interval is semimodular.
bool is_totally_semimodular(const Poset& P);

/// Minimal upper bounds of {a, b}.
std::vector<int> join_witnesses(const Poset& P, int a, int b);
/// Every pair has a unique minimal upper bound and a unique maximal lower
/// bound. Requires a bounded poset.
bool is_lattice(const Poset& P);

inline constexpr std::size_t kDefaultIsoCap = 4096;

/// Order isomorphism P -> Q if one exists (invariant refinement, then
/// backtracking). `extra_invariant`, when given, must be preserved by the
/// bijection (element -> integer color, e.g. a degree map).
std::optional<std::vector<int>> are_isomorphic(
    const Poset& P, const Poset& Q,
    const std::vector<long long>* p_colors = nullptr,
    const std::vector<long long>* q_colors = nullptr,
    std::size_t size_cap = kDefaultIsoCap);

}  // namespace lcmlat

#endif
