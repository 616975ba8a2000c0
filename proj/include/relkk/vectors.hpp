#pragma once

#include <vector>

#include "relkk/int.hpp"

namespace relkk {

/// Face-count vector indexed by cardinality: entries[c] counts faces of
/// cardinality c (dimension c-1), so entries[0] is the empty-face count.
/// The all-zero/empty vector denotes the void complex.
struct FVector {
    std::vector<Int> entries;

    FVector() = default;
    explicit FVector(std::vector<Int> e) : entries(std::move(e)) {}

    bool is_zero() const;
    /// Proper means no empty face: entries[0] == 0 (or no entries at all).
    bool proper() const;
    /// Copy with trailing zeros removed; all-zero collapses to empty.
    FVector trimmed() const;
    /// Top dimension: entries.size() - 2 after trimming (-1 for a single
    /// count of the empty face). Requires a non-void vector.
    int dim() const;

    bool operator==(const FVector&) const = default;
};

/// h-vector of a (d-1)-dimensional relative complex; entries h_0..h_d.
struct HVector {
    std::vector<Int> entries;

    HVector() = default;
    explicit HVector(std::vector<Int> e) : entries(std::move(e)) {}

    int d() const { return static_cast<int>(entries.size()) - 1; }
    bool proper() const;
    bool is_zero() const;

    bool operator==(const HVector&) const = default;
};

/// Change of basis sum f_{k-1} t^{d-k} = sum h_i (t+1)^{d-i} and back.
/// These act on arbitrary integer vectors; entries may be negative.
std::vector<Int> f_to_h_coeffs(const std::vector<Int>& f, int d);
std::vector<Int> h_to_f_coeffs(const std::vector<Int>& h);

HVector f_to_h(const FVector& f, int d);
FVector h_to_f(const HVector& h);

/// Throws unless every entry is non-negative and entries[0] is 0 or 1.
void validate_f_vector(const FVector& f);
/// Throws unless every entry is non-negative.
void validate_h_vector(const HVector& h);

} // namespace relkk
