#include "relkk/vectors.hpp"

#include <stdexcept>

namespace relkk {

bool FVector::is_zero() const {
    for (const auto& e : entries) {
        if (e != 0) return false;
    }
    return true;
}

bool FVector::proper() const {
    return entries.empty() || entries[0] == 0;
}

FVector FVector::trimmed() const {
    FVector out = *this;
    while (!out.entries.empty() && out.entries.back() == 0) {
        out.entries.pop_back();
    }
    return out;
}

int FVector::dim() const {
    FVector t = trimmed();
    if (t.entries.empty()) {
        throw std::logic_error("FVector::dim: void vector has no dimension");
    }
    return static_cast<int>(t.entries.size()) - 2;
}

bool HVector::proper() const {
    return entries.empty() || entries[0] == 0;
}

bool HVector::is_zero() const {
    for (const auto& e : entries) {
        if (e != 0) return false;
    }
    return true;
}

std::vector<Int> f_to_h_coeffs(const std::vector<Int>& f, int d) {
    if (static_cast<int>(f.size()) > d + 1) {
        throw std::invalid_argument("f_to_h: vector longer than d+1");
    }
    // h_i = sum_{k<=i} (-1)^{i-k} C(d-k, i-k) f_{k-1}
    std::vector<Int> h(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        Int acc = 0;
        for (int k = 0; k <= i && k < static_cast<int>(f.size()); ++k) {
            Int c = binomial(d - k, i - k);
            if ((i - k) % 2 != 0) c = -c;
            acc += c * f[k];
        }
        h[i] = acc;
    }
    return h;
}

std::vector<Int> h_to_f_coeffs(const std::vector<Int>& h) {
    const int d = static_cast<int>(h.size()) - 1;
    // f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i
    std::vector<Int> f(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) {
            acc += binomial(d - i, k - i) * h[i];
        }
        f[k] = acc;
    }
    return f;
}

HVector f_to_h(const FVector& f, int d) {
    return HVector(f_to_h_coeffs(f.entries, d));
}

FVector h_to_f(const HVector& h) {
    return FVector(h_to_f_coeffs(h.entries));
}

void validate_f_vector(const FVector& f) {
    for (const auto& e : f.entries) {
        if (e < 0) throw std::invalid_argument("f-vector entries must be non-negative");
    }
    if (!f.entries.empty() && f.entries[0] != 0 && f.entries[0] != 1) {
        throw std::invalid_argument("f-vector empty-face count must be 0 or 1");
    }
}

void validate_h_vector(const HVector& h) {
    for (const auto& e : h.entries) {
        if (e < 0) throw std::invalid_argument("h-vector entries must be non-negative");
    }
}

} // namespace relkk
