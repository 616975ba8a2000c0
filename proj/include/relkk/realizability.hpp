#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relkk/int.hpp"
#include "relkk/vectors.hpp"

namespace relkk {

enum class Direction { top_down, bottom_up };

/// One step of a realizability recursion, kept for --trace output.
struct TraceEntry {
    int k;
    Int shadow_a, shadow_b;
    Int a, b;
};

/// The (a_k), (b_k) sequences produced by a realizability recursion. In
/// top-down mode a_k - b_k equals the input entry at k and b_k >= 0; in
/// bottom-up mode the same difference identity holds while b_k >= 0.
struct CertificatePair {
    std::vector<Int> a, b;
    Direction direction = Direction::top_down;
    bool accepted = false;
    std::optional<int> failed_index;
    std::string reason;
};

struct CheckResult {
    bool accepted = false;
    std::optional<int> failed_index;
    std::string reason;
};

/// Classical face-count condition for simplicial complexes:
/// lower_shadow_{k+1}(f_k) <= f_{k-1} for every k >= 1. Requires a
/// non-relative vector (empty-face count 1).
CheckResult kruskal_katona_check(const FVector& f);

/// Macaulay condition: f_{k-1} >= macaulay_shadow_{k+1}(f_k) for k >= 1.
/// The sequence includes the leading 1.
CheckResult m_sequence_check(const std::vector<Int>& f);

/// Growth-form equivalent of the Macaulay condition, used only for
/// cross-validation: f_{k+1} <= upper_shadow^{k+1}(f_k) for k >= 0.
bool m_sequence_upper_check(const std::vector<Int>& f);

/// Realizability of a proper f-vector by a relative simplicial complex on
/// ground set [n]: top-down recursion with the lower shadow, accepted iff
/// a_0 <= n. Trailing zeros are trimmed first; the all-zero vector is
/// accepted with an empty certificate (void witness).
CertificatePair rel_f_check(const FVector& f, int n, std::vector<TraceEntry>* trace = nullptr);

/// Same recursion with the Macaulay shadow: finite relative multicomplexes.
CertificatePair rel_multi_check(const FVector& f, int n, std::vector<TraceEntry>* trace = nullptr);

/// Bottom-up prefix check for (possibly infinite) relative multicomplexes:
/// a_0 = n, b_0 = n - f_0, mins with the upper shadow; reports the first
/// index with b_k < 0. Acceptance means no violation within the prefix.
CertificatePair rel_multi_prefix_check(const FVector& f, int n,
                                       std::vector<TraceEntry>* trace = nullptr);

/// Hilbert functions of quotients I/J of homogeneous ideals in n variables:
/// delegates to rel_multi_prefix_check with f_k = H(k+1). Requires H(0) = 0.
CertificatePair hilbert_quotient_check(const std::vector<Int>& H, int n,
                                       std::vector<TraceEntry>* trace = nullptr);

/// h-vectors of fully Cohen-Macaulay relative complexes on [n]: top-down
/// Macaulay-shadow recursion on (h_1..h_d), accepted iff a_0 <= n - d.
/// The all-zero h is accepted for every n (void complex); otherwise n <= d
/// is rejected outright.
CertificatePair fully_cm_h_check(const HVector& h, int n, std::vector<TraceEntry>* trace = nullptr);

/// Necessary condition for h-vectors of Cohen-Macaulay relative complexes
/// on [n]: same recursion, accepted iff a_0 <= n. A pass does not certify
/// existence.
CertificatePair cm_h_necessary_check(const HVector& h, int n,
                                     std::vector<TraceEntry>* trace = nullptr);

} // namespace relkk
