#pragma once

/**
 * Commutation, infimum faithfulness, and containment of a finite subset in a
 * Boolean subalgebra.
 *
 * For a structured family whose members are {0,1}-valued the subset
 * {p1,...,pn} lies in a Boolean subalgebra iff every product of its members
 * is again a member (`product_criterion`). `boolean_subalgebra_oracle`
 * decides the same question by searching subfamilies directly.
 */

#include <optional>
#include <span>
#include <vector>

#include "numev/family.hpp"

namespace numev {

/// p = (p ^ q) v (p ^ q'), every extremum taken inside the family.
bool commutes(const EventFamily& family, EventFamily::Index p, EventFamily::Index q);
bool commutes(const EventFamily& family, const Event& p, const Event& q);

/// p ^ q exists iff p and q commute, for every pair.
bool is_infimum_faithful(const EventFamily& family);

struct ProductCriterionResult {
    bool holds = true;
    /// First subset (in chosen order, by increasing bitmask) whose product is missing.
    std::vector<Event> failing_subset;
    std::optional<Event> missing_product;
};

/// Products of all nonempty subsets of `chosen` are members. Throws
/// PreconditionError unless the family is structured and {0,1}-valued and
/// `chosen` is a nonempty list of members.
ProductCriterionResult product_criterion(const EventFamily& family, std::span<const Event> chosen);

/// Smallest subfamily Q containing 0, 1 and `chosen` that is closed under
/// complement and under infima computed in `family`, and is a Boolean algebra
/// in the induced order. Ties are broken lexicographically.
std::optional<std::vector<Event>> boolean_subalgebra_oracle(const EventFamily& family,
                                                            std::span<const Event> chosen);

}  // namespace numev
