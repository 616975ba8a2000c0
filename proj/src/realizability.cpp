#include "relkk/realizability.hpp"

#include <stdexcept>

#include "relkk/shadow.hpp"

namespace relkk {

namespace {

using ShadowFn = Int (*)(const Int&, unsigned long);

// Top-down recursion shared by the relative-f, relative-multicomplex and
// fully-CM checks. `entries` is (x_0, ..., x_{d-1}) with x_k the count at
// cardinality k+1; the certificate has a_k - b_k = x_k throughout.
CertificatePair run_top_down(const std::vector<Int>& entries, ShadowFn shadow,
                             std::vector<TraceEntry>* trace) {
    CertificatePair cert;
    cert.direction = Direction::top_down;
    const int d = static_cast<int>(entries.size());
    cert.a.assign(d, 0);
    cert.b.assign(d, 0);
    if (d == 0) return cert;
    cert.a[d - 1] = entries[d - 1];
    cert.b[d - 1] = 0;
    for (int k = d - 1; k >= 1; --k) {
        const Int sa = shadow(cert.a[k], static_cast<unsigned long>(k + 1));
        const Int sb = shadow(cert.b[k], static_cast<unsigned long>(k + 1));
        cert.a[k - 1] = std::max(sa, Int(entries[k - 1] + sb));
        cert.b[k - 1] = std::max(sb, Int(sa - entries[k - 1]));
        if (trace) trace->push_back({k - 1, sa, sb, cert.a[k - 1], cert.b[k - 1]});
    }
    return cert;
}

std::vector<Int> positive_part(const FVector& f) {
    // entries past the leading empty-face count
    std::vector<Int> out;
    if (f.entries.size() > 1) {
        out.assign(f.entries.begin() + 1, f.entries.end());
    }
    return out;
}

void require_proper_f(const FVector& f, const char* who) {
    validate_f_vector(f);
    if (!f.proper()) {
        throw std::invalid_argument(std::string(who) + ": input must be proper (no empty face)");
    }
}

CertificatePair rel_check_impl(const FVector& f, int n, ShadowFn shadow, const char* who,
                               std::vector<TraceEntry>* trace) {
    require_proper_f(f, who);
    if (n <= 0) throw std::invalid_argument(std::string(who) + ": ground set must be positive");
    const FVector t = f.trimmed();
    if (t.entries.empty()) {
        CertificatePair cert;
        cert.accepted = true; // void relative complex
        return cert;
    }
    CertificatePair cert = run_top_down(positive_part(t), shadow, trace);
    if (cert.a.empty() || cert.a[0] <= n) {
        cert.accepted = true;
    } else {
        cert.accepted = false;
        cert.failed_index = 0;
        cert.reason = "a_0 = " + cert.a[0].str() + " exceeds ground set size " + std::to_string(n);
    }
    return cert;
}

} // namespace

CheckResult kruskal_katona_check(const FVector& f) {
    validate_f_vector(f);
    const FVector t = f.trimmed();
    CheckResult res;
    if (t.entries.empty()) {
        res.accepted = true; // void complex
        return res;
    }
    if (t.entries[0] != 1) {
        throw std::invalid_argument(
            "kruskal_katona_check: relative input (empty-face count 0); use the relative checks");
    }
    for (std::size_t c = 2; c < t.entries.size(); ++c) {
        const Int s = lower_shadow(t.entries[c], static_cast<unsigned long>(c));
        if (s > t.entries[c - 1]) {
            res.accepted = false;
            res.failed_index = static_cast<int>(c) - 1; // k with shadow(f_k) > f_{k-1}
            res.reason = "shadow_" + std::to_string(c) + "(" + t.entries[c].str() + ") = " +
                         s.str() + " exceeds " + t.entries[c - 1].str();
            return res;
        }
    }
    res.accepted = true;
    return res;
}

CheckResult m_sequence_check(const std::vector<Int>& f) {
    CheckResult res;
    if (f.empty() || f[0] != 1) {
        throw std::invalid_argument("m_sequence_check: sequence must start with 1");
    }
    for (const auto& e : f) {
        if (e < 0) throw std::invalid_argument("m_sequence_check: negative entry");
    }
    for (std::size_t c = 2; c < f.size(); ++c) {
        const Int s = macaulay_shadow(f[c], static_cast<unsigned long>(c));
        if (s > f[c - 1]) {
            res.accepted = false;
            res.failed_index = static_cast<int>(c) - 1;
            res.reason = "macaulay_shadow_" + std::to_string(c) + "(" + f[c].str() + ") = " +
                         s.str() + " exceeds " + f[c - 1].str();
            return res;
        }
    }
    res.accepted = true;
    return res;
}

bool m_sequence_upper_check(const std::vector<Int>& f) {
    if (f.empty() || f[0] != 1) {
        throw std::invalid_argument("m_sequence_upper_check: sequence must start with 1");
    }
    for (std::size_t c = 1; c + 1 < f.size(); ++c) {
        if (f[c + 1] > upper_shadow(f[c], static_cast<unsigned long>(c))) return false;
    }
    return true;
}

CertificatePair rel_f_check(const FVector& f, int n, std::vector<TraceEntry>* trace) {
    return rel_check_impl(f, n, lower_shadow, "rel_f_check", trace);
}

CertificatePair rel_multi_check(const FVector& f, int n, std::vector<TraceEntry>* trace) {
    return rel_check_impl(f, n, macaulay_shadow, "rel_multi_check", trace);
}

CertificatePair rel_multi_prefix_check(const FVector& f, int n, std::vector<TraceEntry>* trace) {
    require_proper_f(f, "rel_multi_prefix_check");
    if (n <= 0) {
        throw std::invalid_argument("rel_multi_prefix_check: ground set must be positive");
    }
    CertificatePair cert;
    cert.direction = Direction::bottom_up;
    const std::vector<Int> fs = positive_part(f); // f_0 .. f_K
    if (fs.empty()) {
        cert.accepted = true;
        return cert;
    }
    cert.a.push_back(n);
    cert.b.push_back(Int(n) - fs[0]);
    if (cert.b[0] < 0) {
        cert.accepted = false;
        cert.failed_index = 0;
        cert.reason = "b_0 = " + cert.b[0].str() + " is negative (f_0 exceeds ground set)";
        return cert;
    }
    for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
        const Int ua = upper_shadow(cert.a[k], static_cast<unsigned long>(k + 1));
        const Int ub = upper_shadow(cert.b[k], static_cast<unsigned long>(k + 1));
        cert.a.push_back(std::min(ua, Int(fs[k + 1] + ub)));
        cert.b.push_back(std::min(ub, Int(ua - fs[k + 1])));
        if (trace) {
            trace->push_back({static_cast<int>(k) + 1, ua, ub, cert.a.back(), cert.b.back()});
        }
        if (cert.b.back() < 0) {
            cert.accepted = false;
            cert.failed_index = static_cast<int>(k) + 1;
            cert.reason = "b_" + std::to_string(k + 1) + " = " + cert.b.back().str() +
                          " is negative";
            return cert;
        }
    }
    cert.accepted = true; // no violation within the given prefix
    return cert;
}

CertificatePair hilbert_quotient_check(const std::vector<Int>& H, int n,
                                       std::vector<TraceEntry>* trace) {
    if (H.empty() || H[0] != 0) {
        throw std::invalid_argument("hilbert_quotient_check: H(0) must be 0");
    }
    FVector f;
    f.entries.assign(H.size(), 0);
    for (std::size_t k = 1; k < H.size(); ++k) {
        f.entries[k] = H[k]; // f_{k-1} = H(k)
    }
    return rel_multi_prefix_check(f, n, trace);
}

CertificatePair fully_cm_h_check(const HVector& h, int n, std::vector<TraceEntry>* trace) {
    validate_h_vector(h);
    if (!h.proper()) {
        throw std::invalid_argument("fully_cm_h_check: h must be proper (h_0 = 0)");
    }
    if (n <= 0) throw std::invalid_argument("fully_cm_h_check: ground set must be positive");
    const int d = h.d();
    CertificatePair cert;
    if (h.is_zero()) {
        cert.accepted = true; // the void complex realizes it on any ground set
        return cert;
    }
    if (n <= d) {
        cert.accepted = false;
        cert.failed_index = 0;
        cert.reason = "ground set of size " + std::to_string(n) +
                      " cannot carry a nonzero h-vector with d = " + std::to_string(d);
        return cert;
    }
    std::vector<Int> entries(h.entries.begin() + 1, h.entries.end());
    cert = run_top_down(entries, macaulay_shadow, trace);
    if (cert.a.empty() || cert.a[0] <= n - d) {
        cert.accepted = true;
    } else {
        cert.accepted = false;
        cert.failed_index = 0;
        cert.reason = "a_0 = " + cert.a[0].str() + " exceeds n - d = " + std::to_string(n - d);
    }
    return cert;
}

CertificatePair cm_h_necessary_check(const HVector& h, int n, std::vector<TraceEntry>* trace) {
    validate_h_vector(h);
    if (!h.proper()) {
        throw std::invalid_argument("cm_h_necessary_check: h must be proper (h_0 = 0)");
    }
    if (n <= 0) throw std::invalid_argument("cm_h_necessary_check: ground set must be positive");
    CertificatePair cert;
    if (h.is_zero()) {
        cert.accepted = true;
        return cert;
    }
    std::vector<Int> entries(h.entries.begin() + 1, h.entries.end());
    cert = run_top_down(entries, macaulay_shadow, trace);
    if (cert.a.empty() || cert.a[0] <= n) {
        cert.accepted = true;
    } else {
        cert.accepted = false;
        cert.failed_index = 0;
        cert.reason = "a_0 = " + cert.a[0].str() + " exceeds ground set size " + std::to_string(n);
    }
    return cert;
}

} // namespace relkk
