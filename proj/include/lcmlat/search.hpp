#ifndef LCMLAT_SEARCH_HPP
#define LCMLAT_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>

namespace lcmlat {

/// Outcome of a budgeted combinatorial search.
///
/// NotFound is only ever returned after provably exhaustive search;
/// a search that ran out of budget reports Exhausted so callers can
/// distinguish "false" from "gave up".
enum class SearchStatus { Found, NotFound, Exhausted };

template <typename Certificate>
struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Certificate> certificate;

    bool found() const { return status == SearchStatus::Found; }
    bool not_found() const { return status == SearchStatus::NotFound; }
    bool exhausted() const { return status == SearchStatus::Exhausted; }

    static SearchResult make_found(Certificate cert) {
        return SearchResult{SearchStatus::Found, std::move(cert)};
    }
    static SearchResult make_not_found() {
        return SearchResult{SearchStatus::NotFound, std::nullopt};
    }
    static SearchResult make_exhausted() {
        return SearchResult{SearchStatus::Exhausted, std::nullopt};
    }
};

/// Node budget for backtracking searches. Each search owns its own counter;
/// budgets are never shared between invocations.
class SearchBudget {
public:
    static constexpr std::uint64_t kDefaultNodes = 20'000'000;

    SearchBudget() : remaining_(kDefaultNodes) {}
    explicit SearchBudget(std::uint64_t nodes) : remaining_(nodes) {}

    /// Consumes one node; returns false once the budget is spent.
    bool tick() {
        if (remaining_ == 0) return false;
        --remaining_;
        return true;
    }

    bool spent() const { return remaining_ == 0; }
    std::uint64_t remaining() const { return remaining_; }

private:
    std::uint64_t remaining_;
};

}  // namespace lcmlat

#endif
