#pragma once

/**
 * Exhaustive enumeration of event families over a rational grid, and
 * desk-scale verification of the class relations on every enumerated family.
 *
 * Families come out in canonical order: events sorted lexicographically
 * inside a family, families compared lexicographically by their event lists.
 * Parallel runs split that sequence into contiguous ranges and merge results
 * in order, so output never depends on the worker count.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numev/classify.hpp"
#include "numev/family.hpp"

namespace numev {

enum class Prefilter { ContainsBounds, ComplementClosed };

struct SearchSpace {
    std::size_t num_states = 1;
    /// Grid values are k / denominator for k = 0..denominator.
    std::int64_t denominator = 1;
    std::size_t max_family_size = 2;
    std::vector<Prefilter> require;

    bool has(Prefilter p) const;
    /// Throws std::invalid_argument on an empty or degenerate space.
    void validate() const;
};

struct SearchOptions {
    /// Maximum number of families examined; exceeding it makes the run inconclusive.
    std::optional<std::size_t> budget;
    std::size_t workers = 1;
};

/// All grid points in canonical order.
std::vector<Event> grid_points(const SearchSpace& space);

/// Canonical families as sorted index lists into grid_points(space). At most
/// `limit` are returned; the rest of the sequence is not materialised when the
/// enumeration can be streamed.
std::vector<std::vector<std::uint16_t>> canonical_index_sets(const SearchSpace& space,
                                                             std::optional<std::size_t> limit = std::nullopt);

std::vector<EventFamily> enumerate_families(const SearchSpace& space,
                                            std::optional<std::size_t> limit = std::nullopt);

enum class SearchStatus { Complete, Inconclusive };

struct Violation {
    std::string law;
    EventFamily family;
    std::string detail;
};

struct SearchReport {
    SearchSpace space;
    SearchStatus status = SearchStatus::Complete;
    std::size_t examined = 0;
    /// Number of examined families with each flag set, indexed by ClassFlag.
    std::array<std::size_t, kAllFlags.size()> flag_counts{};
    /// Specific families satisfying (6) with the supremum inside P vs. with the
    /// pointwise maximum.
    std::size_t condition6_supremum_count = 0;
    std::size_t condition6_pointwise_count = 0;
    std::vector<Violation> violations;
};

/// Every law checked on one family; empty when all hold.
std::vector<Violation> check_laws(const EventFamily& family);

SearchReport verify_theorems(const SearchSpace& space, const SearchOptions& options = {});

struct WitnessQuery {
    std::vector<ClassFlag> want;
    /// A family is rejected when every flag listed here is set.
    std::vector<ClassFlag> avoid;

    bool matches(const ClassificationReport& report) const;
};

struct WitnessResult {
    SearchStatus status = SearchStatus::Complete;
    std::size_t examined = 0;
    std::optional<EventFamily> family;
};

WitnessResult find_witness(const SearchSpace& space, const WitnessQuery& query,
                           const SearchOptions& options = {});

}  // namespace numev
