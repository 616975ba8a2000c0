#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relkk/complex.hpp"
#include "relkk/realizability.hpp"
#include "relkk/shelling.hpp"
#include "relkk/vectors.hpp"

namespace relkk {

/// Compressed presentation pair realizing an accepted proper f-vector on
/// [n]: delta and gamma are the compressed complexes of the certificate's
/// minimal f-vectors. Throws if rel_f_check rejects.
RelativeComplex witness_rel_f(const FVector& f, int n);

/// Order-preserving bijection from multisets of cardinality k <= d over
/// [n-d] to d-subsets of [n]:
///   {b_1,...,b_k} -> {1,...,d-k} u {b_1+d-k+1, ..., b_k+d}.
Face phi_d(const MultiFace& f, int d, int n);

struct BfsWitness {
    RelativeComplex psi;
    std::vector<Face> delta_order, gamma_order, psi_order;
};

/// Fully shellable witness for an accepted fully-CM h-vector: compressed
/// multicomplex pair on [n-d] mapped through phi_d, facets ordered by
/// graded revlex. The returned orders are shellings of delta, gamma and
/// psi. Throws if fully_cm_h_check rejects.
BfsWitness bfs_witness(const HVector& h, int n);

/// Cones gamma `cone_steps` times with fresh vertices, adds the result to
/// delta, and returns the pair of skeleta at the dimension of psi. The
/// relative face set is preserved exactly. Requires a nonvoid gamma.
RelativeComplex cone_skeleton_repair(const RelativeComplex& psi, int cone_steps);

struct DecompositionPart {
    int shift = 0;             // number of zeros prepended
    std::vector<Int> nu;       // an M-sequence, starts with 1
};

/// A decomposition h = sum_i E^{shift_i} nu_i into shifted M-sequences.
struct BjornerDecomposition {
    std::vector<Int> target;
    std::vector<DecompositionPart> parts;
};

/// Checks every part is an M-sequence and the shifted sum matches the
/// target (comparing with zero padding).
CheckResult verify_decomposition(const BjornerDecomposition& dec);

inline constexpr std::uint64_t kDefaultDecompositionBudget = 1u << 22;

struct DecompositionSearch {
    SearchStatus status = SearchStatus::exhausted; // found / exhausted(no) / budget
    std::optional<BjornerDecomposition> decomposition;
    std::uint64_t nodes = 0;
};

/// Exact search for M-sequences nu_i with sum E^{shift_i} nu_i = h, parts
/// processed in increasing shift order, each nu lexicographically smallest
/// among the completions tried first.
DecompositionSearch find_decomposition(const HVector& h, const std::vector<int>& shifts,
                                       std::uint64_t budget = kDefaultDecompositionBudget);

struct DecompositionWitness {
    RelativeComplex psi;
    std::vector<Face> order; // shelling order of psi
};

/// Shellable relative complex realizing a verified decomposition: one
/// shellable block per part with `shift` fresh vertices glued to every
/// face, parts coned to the target dimension, disjoint union on a fresh
/// ground set. The minimal faces of the result have exactly the part
/// shifts as cardinalities.
DecompositionWitness decomposition_witness(const BjornerDecomposition& dec);

} // namespace relkk
