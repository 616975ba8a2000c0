#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relkk/complex.hpp"
#include "relkk/vectors.hpp"

namespace relkk {

/// One step of a verified shelling: the facet, the unique minimal new face,
/// and how many faces the step added.
struct ShellingStep {
    Face facet;
    Face restriction;
    std::size_t new_faces = 0;
};

struct ShellingCheck {
    bool ok = false;
    std::vector<ShellingStep> steps;
    std::size_t failed_step = 0;        // 1-based, valid when !ok
    std::vector<Face> minimal_faces;    // the incomparable minimal faces at failure
};

/// Verifies that `order` (a permutation of the maximal faces of psi) is a
/// shelling order: each step must add a face interval with a unique
/// inclusion-minimal element. Throws if the order is not a permutation of
/// the maximal faces.
ShellingCheck verify_shelling(const RelativeComplex& psi, const std::vector<Face>& order);

/// Restriction-size histogram h_i = #{steps with |restriction| = i} of a
/// shelling of a pure (d-1)-dimensional relative complex. Throws on
/// non-pure input.
HVector h_from_shelling(const std::vector<ShellingStep>& steps, int d);

enum class SearchStatus { found, exhausted, budget_exceeded };

inline constexpr std::uint64_t kDefaultShellingBudget = 1u << 22;
inline constexpr std::uint64_t kDefaultPresentationBudget = 1u << 24;

struct ShellingSearch {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<Face> order; // valid when found
    std::uint64_t nodes = 0;
};

/// Backtracking search for a shelling order of a pure relative complex,
/// memoized on the set of facets placed so far. Deterministic: facets are
/// tried in revlex order.
ShellingSearch find_shelling(const RelativeComplex& psi,
                             std::uint64_t budget = kDefaultShellingBudget);

struct FullShellability {
    SearchStatus status = SearchStatus::exhausted; // found = yes, exhausted = no
    std::optional<RelativeComplex> presentation;
    std::vector<Face> delta_order, gamma_order, psi_order;
    std::uint64_t nodes = 0;
};

/// Searches for a presentation (delta', gamma') of the same relative face
/// set, with delta' and gamma' pure of the same dimension as psi and all
/// three shellable. Exhaustive over pure presentations on [n]; n is capped
/// at 6 unless the budget is explicitly raised.
FullShellability is_fully_shellable(const RelativeComplex& psi,
                                    std::uint64_t budget = kDefaultPresentationBudget);

} // namespace relkk
