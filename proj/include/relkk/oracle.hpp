#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "relkk/complex.hpp"
#include "relkk/int.hpp"
#include "relkk/vectors.hpp"

namespace relkk {

/// Brute-force ground truth on small ground sets. The caps below guard
/// against doubly-exponential blowup; raising them requires the explicit
/// accept_long_runtimes opt-in.
struct OracleLimits {
    bool accept_long_runtimes = false;
    int max_enumerate_n = 6;
    int max_pair_n = 5;
    int max_fully_shellable_n = 5;
    int max_fully_shellable_d = 2;
    std::uint64_t max_shadow_families = 20'000'000;
};

using IntVec = std::vector<Int>;

/// Every downward-closed family over [n], void and {empty} included, each
/// exactly once; complexes are produced as facet antichains.
void enumerate_complexes(int n, const std::function<void(const SimplicialComplex&)>& sink,
                         const OracleLimits& limits = {});

std::uint64_t count_complexes(int n, const OracleLimits& limits = {});

/// Visits every presentation pair (delta, gamma) over [n] with gamma a
/// nonvoid proper subcomplex of delta, passing the two face-count-by-
/// cardinality arrays. The basis for the pairwise ground truths below.
void visit_relative_pairs(int n,
                          const std::function<void(const std::vector<int>& f_delta,
                                                   const std::vector<int>& f_gamma)>& sink,
                          const OracleLimits& limits = {});

/// All trimmed f-vectors of proper relative complexes (gamma nonvoid,
/// delta \ gamma nonempty) over [n].
std::set<IntVec> achievable_relative_f(int n, const OracleLimits& limits = {});

/// Minimum shadow cardinality over all m-element families of k-subsets of [n].
Int min_shadow(int m, int k, int n, const OracleLimits& limits = {});

/// All h-vectors of relative complexes with a presentation in which delta,
/// gamma and psi are pure of dimension d-1 and all three shellable.
std::set<IntVec> achievable_fully_shellable_h(int n, int d, const OracleLimits& limits = {});

struct EnumerationReport {
    std::string kind;
    std::vector<Int> params;
    std::uint64_t complexes_enumerated = 0;
    std::set<IntVec> vectors; // achievable f- or h-vectors, kind-dependent
    Int scalar = 0;           // min-shadow value, kind-dependent
    double elapsed_seconds = 0.0;
};

EnumerationReport oracle_complexes_report(int n, const OracleLimits& limits = {});
EnumerationReport oracle_relative_f_report(int n, const OracleLimits& limits = {});
EnumerationReport oracle_min_shadow_report(int m, int k, int n, const OracleLimits& limits = {});
EnumerationReport oracle_fully_shellable_h_report(int n, int d, const OracleLimits& limits = {});

} // namespace relkk
