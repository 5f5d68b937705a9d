#include "lcmlat/rao.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>

#include "lcmlat/errors.hpp"

namespace lcmlat {

namespace {

std::vector<int> minimal_common_upper_bounds(const Poset& P, int a, int b) {
    Bitset ub = P.up_set(a) & P.up_set(b);
    std::vector<int> out;
    for (std::size_t u = ub.find_first(); u != Bitset::npos; u = ub.find_next(u)) {
        if ((P.down_set(static_cast<int>(u)) & ub).count() == 1) out.push_back(static_cast<int>(u));
    }
    return out;
}

// Does some z cover both `k_atom` and `j_atom` with z <= y?
bool has_cover_step(const Poset& P, int k_atom, int j_atom, int y) {
    Bitset z = P.cover_up_set(k_atom) & P.cover_up_set(j_atom) & P.down_set(y);
    return z.any();
}

// Condition (ii) for the new atom b against the earlier atom a, quantified
// over minimal common upper bounds only: any upper bound of {a, b} lies
// above a minimal one, and z <= minimal <= y.
bool pair_condition(const Poset& P, const std::vector<int>& earlier, int a, int b) {
    for (int k_atom : earlier) {
        bool all = true;
        for (int y : minimal_common_upper_bounds(P, a, b)) {
            if (!has_cover_step(P, k_atom, b, y)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

class RaoSearcher {
public:
    RaoSearcher(const Poset& P, SearchBudget budget) : P_(P), budget_(budget) {}

    SearchResult<RaoCertificate> run(int bottom, const std::vector<int>* forced_root) {
        forced_root_ = forced_root;
        auto node = search_interval(bottom, {}, true);
        if (exhausted_) return SearchResult<RaoCertificate>::make_exhausted();
        if (!node) return SearchResult<RaoCertificate>::make_not_found();
        return SearchResult<RaoCertificate>::make_found(RaoCertificate{std::move(*node)});
    }

private:
    // Interval [x, 1̂] with the atoms in `required_first` constrained to a
    // prefix of the ordering. Memoized on (x, required_first).
    std::optional<RaoNode> search_interval(int x, std::vector<int> required_first, bool root) {
        if (!budget_.tick()) {
            exhausted_ = true;
            return std::nullopt;
        }
        if (P_.up_set(x).count() <= 2) {
            // The proper part of the interval is empty.
            RaoNode node;
            node.bottom = x;
            return node;
        }
        std::vector<int> key = required_first;
        std::sort(key.begin(), key.end());
        const auto memo_key = std::make_pair(x, key);
        if (!root || !forced_root_) {
            auto it = memo_.find(memo_key);
            if (it != memo_.end()) return it->second;
        }

        const std::vector<int>& atoms = P_.covers_above(x);
        std::vector<int> placed;
        placed.reserve(atoms.size());
        std::vector<RaoNode> children;
        std::unordered_set<std::uint64_t> dead_prefixes;
        bool found = extend(x, atoms, key, placed, children, dead_prefixes, root);
        if (exhausted_) return std::nullopt;

        std::optional<RaoNode> result;
        if (found) {
            RaoNode node;
            node.bottom = x;
            node.atom_order = placed;
            node.children = std::move(children);
            node.witnesses = collect_witnesses(placed);
            result = std::move(node);
        }
        if (!root || !forced_root_) memo_.emplace(memo_key, result);
        return result;
    }

    bool extend(int x, const std::vector<int>& atoms, const std::vector<int>& required_first,
                std::vector<int>& placed, std::vector<RaoNode>& children,
                std::unordered_set<std::uint64_t>& dead_prefixes, bool root) {
        if (placed.size() == atoms.size()) return true;
        const std::uint64_t mask = prefix_mask(atoms, placed);
        if (dead_prefixes.count(mask)) return false;

        for (int b : atoms) {
            if (std::find(placed.begin(), placed.end(), b) != placed.end()) continue;
            if (root && forced_root_) {
                if ((*forced_root_)[placed.size()] != b) continue;
            } else if (placed.size() < required_first.size()) {
                // Required atoms fill the prefix (in any internal order).
                if (std::find(required_first.begin(), required_first.end(), b) ==
                    required_first.end()) {
                    continue;
                }
            }
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            bool ok = true;
            for (int a : placed) {
                if (!pair_condition(P_, placed, a, b)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;

            // Condition (i): the interval above b, with atoms covering an
            // earlier atom forced to the front.
            std::vector<int> required_child;
            for (int c : P_.covers_above(b)) {
                for (int a : placed) {
                    if (P_.covers(a, c)) {
                        required_child.push_back(c);
                        break;
                    }
                }
            }
            auto child = search_interval(b, std::move(required_child), false);
            if (exhausted_) return false;
            if (!child) continue;

            placed.push_back(b);
            children.push_back(std::move(*child));
            if (extend(x, atoms, required_first, placed, children, dead_prefixes, root)) {
                return true;
            }
            if (exhausted_) return false;
            placed.pop_back();
            children.pop_back();
        }
        // Completability depends only on the set of placed atoms, not their
        // internal order, so this prefix set is dead for every order.
        dead_prefixes.insert(mask);
        return false;
    }

    static std::uint64_t prefix_mask(const std::vector<int>& atoms, const std::vector<int>& placed) {
        std::uint64_t mask = 0;
        for (int b : placed) {
            auto it = std::find(atoms.begin(), atoms.end(), b);
            mask |= std::uint64_t{1} << (it - atoms.begin());
        }
        return mask;
    }

    std::vector<RaoPairWitness> collect_witnesses(const std::vector<int>& order) const {
        std::vector<RaoPairWitness> out;
        for (std::size_t j = 1; j < order.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                RaoPairWitness w;
                w.i = static_cast<int>(i);
                w.j = static_cast<int>(j);
                w.k = -1;
                for (std::size_t k = 0; k < j; ++k) {
                    bool all = true;
                    std::vector<std::array<int, 2>> steps;
                    for (int y : minimal_common_upper_bounds(P_, order[i], order[j])) {
                        Bitset z = P_.cover_up_set(order[k]) & P_.cover_up_set(order[j]) &
                                   P_.down_set(y);
                        if (z.none()) {
                            all = false;
                            break;
                        }
                        steps.push_back({y, static_cast<int>(z.find_first())});
                    }
                    if (all) {
                        w.k = static_cast<int>(k);
                        w.cover_steps = std::move(steps);
                        break;
                    }
                }
                out.push_back(std::move(w));
            }
        }
        return out;
    }

    const Poset& P_;
    SearchBudget budget_;
    bool exhausted_ = false;
    const std::vector<int>* forced_root_ = nullptr;
    std::map<std::pair<int, std::vector<int>>, std::optional<RaoNode>> memo_;
};

}  // namespace

SearchResult<RaoCertificate> has_recursive_atom_ordering(const Poset& P, SearchBudget budget) {
    if (!is_graded_poset(P)) {
        throw InputError("has_recursive_atom_ordering: poset is not graded");
    }
    return RaoSearcher(P, budget).run(*P.bottom(), nullptr);
}

SearchResult<RaoCertificate> has_recursive_atom_ordering_with_root(
    const Poset& P, const std::vector<int>& root_order, SearchBudget budget) {
    if (!is_graded_poset(P)) {
        throw InputError("has_recursive_atom_ordering: poset is not graded");
    }
    std::vector<int> atoms = P.atoms();
    std::vector<int> sorted = root_order;
    std::sort(sorted.begin(), sorted.end());
    std::sort(atoms.begin(), atoms.end());
    if (sorted != atoms) {
        throw InputError("has_recursive_atom_ordering: root order must permute the atoms");
    }
    if (P.size() <= 2) return RaoSearcher(P, budget).run(*P.bottom(), nullptr);
    return RaoSearcher(P, budget).run(*P.bottom(), &root_order);
}

namespace {

bool verify_node(const Poset& P, const RaoNode& node, const std::vector<int>& required_first) {
    const int x = node.bottom;
    // Interval [x, 1̂] is the up-set of x.
    Bitset members = P.up_set(x);
    if (members.count() <= 2) {
        return node.atom_order.empty() && node.children.empty();
    }
    std::vector<int> atoms;
    for (std::size_t c = members.find_first(); c != Bitset::npos; c = members.find_next(c)) {
        if (P.covers(x, static_cast<int>(c))) atoms.push_back(static_cast<int>(c));
    }
    std::vector<int> got = node.atom_order;
    std::sort(got.begin(), got.end());
    if (got != atoms) return false;
    if (node.children.size() != node.atom_order.size()) return false;

    // Required-first prefix.
    std::vector<int> prefix(node.atom_order.begin(),
                            node.atom_order.begin() +
                                static_cast<std::ptrdiff_t>(required_first.size()));
    std::vector<int> want = required_first;
    std::sort(prefix.begin(), prefix.end());
    std::sort(want.begin(), want.end());
    if (prefix != want) return false;

    // Condition (ii), literally: for every pair i < j the witness k must be
    // earlier than j and work for every common upper bound y.
    const auto& order = node.atom_order;
    std::size_t widx = 0;
    for (std::size_t j = 1; j < order.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (widx >= node.witnesses.size()) return false;
            const RaoPairWitness& w = node.witnesses[widx++];
            if (w.i != static_cast<int>(i) || w.j != static_cast<int>(j)) return false;
            if (w.k < 0 || w.k >= static_cast<int>(j)) return false;
            const int ai = order[i];
            const int aj = order[j];
            const int ak = order[static_cast<std::size_t>(w.k)];
            Bitset common = P.up_set(ai) & P.up_set(aj);
            for (std::size_t y = common.find_first(); y != Bitset::npos;
                 y = common.find_next(y)) {
                bool found_z = false;
                for (std::size_t z = 0; z < P.size(); ++z) {
                    const int zi = static_cast<int>(z);
                    if (P.covers(ak, zi) && P.covers(aj, zi) && P.leq(zi, static_cast<int>(y))) {
                        found_z = true;
                        break;
                    }
                }
                if (!found_z) return false;
            }
        }
    }
    if (widx != node.witnesses.size()) return false;

    // Condition (i): recompute each child's required-first set and recurse.
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (node.children[j].bottom != order[j]) return false;
        std::vector<int> required_child;
        for (int c : P.covers_above(order[j])) {
            for (std::size_t i = 0; i < j; ++i) {
                if (P.covers(order[i], c)) {
                    required_child.push_back(c);
                    break;
                }
            }
        }
        if (!verify_node(P, node.children[j], required_child)) return false;
    }
    return true;
}

}  // namespace

bool verify_rao_certificate(const Poset& P, const RaoCertificate& cert) {
    if (!is_graded_poset(P)) return false;
    auto b = P.bottom();
    if (!b || cert.root.bottom != *b) return false;
    return verify_node(P, cert.root, {});
}

SearchResult<RaoCertificate> is_cl_shellable(const LcmLattice& L, SearchBudget budget) {
    if (!is_graded_poset(L.poset())) return SearchResult<RaoCertificate>::make_not_found();
    return has_recursive_atom_ordering(L.poset(), budget);
}

namespace {

class FastPathSearch {
public:
    FastPathSearch(const Poset& P, std::vector<int> atoms, SearchBudget budget)
        : P_(P), atoms_(std::move(atoms)), budget_(budget) {}

    SearchResult<std::vector<int>> run() {
        std::vector<int> placed;
        placed.reserve(atoms_.size());
        bool ok = extend(placed);
        if (exhausted_) return SearchResult<std::vector<int>>::make_exhausted();
        if (!ok) return SearchResult<std::vector<int>>::make_not_found();
        return SearchResult<std::vector<int>>::make_found(std::move(placed_result_));
    }

private:
    bool extend(std::vector<int>& placed) {
        if (placed.size() == atoms_.size()) {
            placed_result_ = placed;
            return true;
        }
        std::uint64_t mask = 0;
        for (int b : placed) {
            auto it = std::find(atoms_.begin(), atoms_.end(), b);
            mask |= std::uint64_t{1} << (it - atoms_.begin());
        }
        if (dead_.count(mask)) return false;
        for (int b : atoms_) {
            if (std::find(placed.begin(), placed.end(), b) != placed.end()) continue;
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            bool ok = true;
            for (int a : placed) {
                if (!pair_condition(P_, placed, a, b)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            placed.push_back(b);
            if (extend(placed)) return true;
            if (exhausted_) return false;
            placed.pop_back();
        }
        dead_.insert(mask);
        return false;
    }

    const Poset& P_;
    std::vector<int> atoms_;
    SearchBudget budget_;
    bool exhausted_ = false;
    std::vector<int> placed_result_;
    std::unordered_set<std::uint64_t> dead_;
};

}  // namespace

SearchResult<std::vector<int>> rao_fast_path(const LcmLattice& L, int d, SearchBudget budget) {
    if (!is_d_degree_graded(L, d)) {
        throw InputError("rao_fast_path: lattice is not d-degree graded for d = " +
                         std::to_string(d));
    }
    if (L.atom_indices().size() > 64) {
        throw SizeLimitError("rao_fast_path supports at most 64 atoms");
    }
    return FastPathSearch(L.poset(), L.atom_indices(), budget).run();
}

}  // namespace lcmlat
