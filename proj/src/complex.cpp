#include "relkk/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "relkk/shadow.hpp"

namespace relkk {

bool is_valid_face(const Face& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 1) return false;
        if (i > 0 && f[i] <= f[i - 1]) return false;
    }
    return true;
}

bool is_valid_multiface(const MultiFace& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 1) return false;
        if (i > 0 && f[i] < f[i - 1]) return false;
    }
    return true;
}

int revlex_compare(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("revlex_compare: cardinality mismatch");
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int graded_revlex_compare(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return revlex_compare(a, b);
}

std::vector<std::vector<int>> compressed_family(const Int& m, int k, int n, bool multiset) {
    if (k < 0 || n < 0 || m < 0) {
        throw std::invalid_argument("compressed_family: negative argument");
    }
    const Int total = multiset ? binomial(Int(n) + k - 1, k) : binomial(n, k);
    if (m > total) {
        throw std::invalid_argument("compressed_family: m exceeds the number of k-faces on [n]");
    }
    std::vector<std::vector<int>> out;
    if (m == 0) return out;
    if (m > 5'000'000) {
        throw std::invalid_argument("compressed_family: family too large to materialize");
    }
    const auto count = static_cast<std::size_t>(m.convert_to<unsigned long long>());
    out.reserve(count);

    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = multiset ? 1 : i + 1;
    out.push_back(cur);
    while (out.size() < count) {
        // revlex successor: bump the leftmost position that can grow,
        // resetting everything before it to the minimum.
        int j = 0;
        if (multiset) {
            while (j < k - 1 && cur[j] + 1 > cur[j + 1]) ++j;
            ++cur[j];
            for (int i = 0; i < j; ++i) cur[i] = 1;
        } else {
            while (j < k - 1 && cur[j] + 1 >= cur[j + 1]) ++j;
            ++cur[j];
            for (int i = 0; i < j; ++i) cur[i] = i + 1;
        }
        out.push_back(cur);
    }
    return out;
}

std::vector<Face> shadow_of_family(const std::vector<Face>& faces) {
    if (faces.empty()) return {};
    const std::size_t k = faces[0].size();
    FaceSet shadow;
    for (const auto& f : faces) {
        if (f.size() != k) {
            throw std::invalid_argument("shadow_of_family: non-uniform cardinalities");
        }
        for (std::size_t drop = 0; drop < k; ++drop) {
            Face sub;
            sub.reserve(k - 1);
            for (std::size_t i = 0; i < k; ++i) {
                if (i != drop) sub.push_back(f[i]);
            }
            shadow.insert(sub);
        }
    }
    return {shadow.begin(), shadow.end()};
}

// ---------------------------------------------------------------- complexes

SimplicialComplex SimplicialComplex::void_complex(int n) {
    SimplicialComplex c;
    c.n_ = n;
    return c;
}

SimplicialComplex SimplicialComplex::empty_face_complex(int n) {
    SimplicialComplex c;
    c.n_ = n;
    c.void_ = false;
    c.facets_ = {Face{}};
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> facets) {
    SimplicialComplex c;
    c.n_ = n;
    if (facets.empty()) return c; // void
    for (auto& f : facets) {
        if (!is_valid_face(f)) {
            throw std::invalid_argument("SimplicialComplex: faces must be strictly increasing");
        }
        if (!f.empty() && f.back() > n) {
            throw std::invalid_argument("SimplicialComplex: vertex exceeds ground set");
        }
        if (f.size() > 62) {
            throw std::invalid_argument("SimplicialComplex: facet too large to enumerate");
        }
    }
    // keep only inclusion-maximal generators
    std::vector<Face> maximal;
    for (const auto& f : facets) {
        bool dominated = false;
        for (const auto& g : facets) {
            if (&f != &g && f.size() <= g.size() && std::includes(g.begin(), g.end(), f.begin(), f.end()) && f != g) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), GradedRevlexLess{});
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    c.void_ = false;
    c.facets_ = std::move(maximal);
    return c;
}

int SimplicialComplex::dim() const {
    if (void_) throw std::logic_error("dim of the void complex");
    return static_cast<int>(facets_.back().size()) - 1;
}

bool SimplicialComplex::contains(const Face& f) const {
    if (void_) return false;
    for (const auto& g : facets_) {
        if (f.size() <= g.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
            return true;
        }
    }
    return false;
}

FaceSet SimplicialComplex::faces() const {
    FaceSet all;
    if (void_) return all;
    for (const auto& g : facets_) {
        const std::size_t k = g.size();
        // all subsets of g
        for (std::uint64_t mask = 0;; ++mask) {
            Face sub;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask >> i & 1) sub.push_back(g[i]);
            }
            all.insert(std::move(sub));
            if (mask == (std::uint64_t(1) << k) - 1) break;
        }
    }
    return all;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    if (void_) return f;
    f.entries.assign(static_cast<std::size_t>(dim()) + 2, 0);
    for (const auto& face : faces()) {
        f.entries[face.size()] += 1;
    }
    return f;
}

Multicomplex Multicomplex::void_complex(int n) {
    Multicomplex c;
    c.n_ = n;
    return c;
}

Multicomplex Multicomplex::from_faces(int n, std::vector<MultiFace> faces) {
    Multicomplex c;
    c.n_ = n;
    std::sort(faces.begin(), faces.end(), GradedRevlexLess{});
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (const auto& f : faces) {
        if (!is_valid_multiface(f)) {
            throw std::invalid_argument("Multicomplex: faces must be weakly increasing");
        }
        if (!f.empty() && f.back() > n) {
            throw std::invalid_argument("Multicomplex: element exceeds ground set");
        }
    }
    // closure under dropping one element
    auto member = [&faces](const MultiFace& f) {
        return std::binary_search(faces.begin(), faces.end(), f, GradedRevlexLess{});
    };
    for (const auto& f : faces) {
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            if (drop > 0 && f[drop] == f[drop - 1]) continue;
            MultiFace sub;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != drop) sub.push_back(f[i]);
            }
            if (!member(sub)) {
                throw std::invalid_argument("Multicomplex: not closed under multisubsets");
            }
        }
    }
    c.faces_ = std::move(faces);
    return c;
}

bool Multicomplex::contains(const MultiFace& f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, GradedRevlexLess{});
}

FVector Multicomplex::f_vector() const {
    FVector f;
    if (faces_.empty()) return f;
    f.entries.assign(faces_.back().size() + 1, 0);
    for (const auto& face : faces_) {
        f.entries[face.size()] += 1;
    }
    return f;
}

RelativeComplex::RelativeComplex(SimplicialComplex delta, SimplicialComplex gamma)
    : delta_(std::move(delta)), gamma_(std::move(gamma)) {
    if (gamma_.n() > delta_.n()) {
        throw std::invalid_argument("RelativeComplex: gamma ground set exceeds delta's");
    }
    for (const auto& g : gamma_.facets()) {
        if (!delta_.contains(g)) {
            throw std::invalid_argument("RelativeComplex: gamma is not a subcomplex of delta");
        }
    }
}

bool RelativeComplex::proper() const {
    // The empty face is missing from delta \ gamma iff gamma is nonvoid
    // (or delta is void as well).
    return !gamma_.is_void() || delta_.is_void();
}

FaceSet RelativeComplex::faces() const {
    FaceSet out = delta_.faces();
    for (const auto& f : gamma_.faces()) {
        out.erase(f);
    }
    return out;
}

std::vector<Face> RelativeComplex::max_faces() const {
    // Maximal faces of delta \ gamma are exactly the facets of delta that
    // are not in gamma: supersets of a face outside gamma stay outside.
    std::vector<Face> out;
    if (delta_.is_void()) return out;
    for (const auto& f : delta_.facets()) {
        if (!gamma_.contains(f)) out.push_back(f);
    }
    return out;
}

FVector RelativeComplex::f_vector() const {
    FVector fd = delta_.f_vector();
    FVector fg = gamma_.f_vector();
    std::vector<Int> diff(std::max(fd.entries.size(), fg.entries.size()), 0);
    for (std::size_t i = 0; i < diff.size(); ++i) {
        Int d = i < fd.entries.size() ? fd.entries[i] : Int(0);
        Int g = i < fg.entries.size() ? fg.entries[i] : Int(0);
        diff[i] = d - g;
    }
    return FVector(std::move(diff)).trimmed();
}

bool RelativeComplex::is_void_relative() const {
    return faces().empty();
}

int RelativeComplex::dim() const {
    auto fs = faces();
    if (fs.empty()) throw std::logic_error("dim of an empty relative complex");
    std::size_t best = 0;
    for (const auto& f : fs) best = std::max(best, f.size());
    return static_cast<int>(best) - 1;
}

// ------------------------------------------------------- compressed builders

namespace {

// Shared feasibility loop; `shadow` is the lower or Macaulay shadow.
void check_growth(const FVector& f, int n, bool multiset, Int (*shadow)(const Int&, unsigned long)) {
    const auto& e = f.entries;
    if (e.empty()) return;
    if (e[0] != 1) {
        throw std::invalid_argument("compressed builder: f must start with a single empty face");
    }
    if (e.size() >= 2 && e[1] > n) {
        throw std::invalid_argument("compressed builder: f_0 exceeds the ground set (index 1)");
    }
    for (std::size_t c = 2; c < e.size(); ++c) {
        // faces of cardinality c against cardinality c-1
        if (shadow(e[c], static_cast<unsigned long>(c)) > e[c - 1]) {
            throw std::invalid_argument("compressed builder: infeasible f-vector (index " +
                                        std::to_string(c) + ")");
        }
    }
    (void)multiset;
}

} // namespace

SimplicialComplex compressed_complex(const FVector& f, int n) {
    validate_f_vector(f);
    FVector t = f.trimmed();
    if (t.entries.empty()) return SimplicialComplex::void_complex(n);
    check_growth(t, n, false, lower_shadow);
    std::vector<Face> all;
    for (std::size_t c = 0; c < t.entries.size(); ++c) {
        auto fam = compressed_family(t.entries[c], static_cast<int>(c), n, false);
        all.insert(all.end(), fam.begin(), fam.end());
    }
    SimplicialComplex out = SimplicialComplex::from_facets(n, all);
    if (out.f_vector() != t) {
        throw std::logic_error("compressed_complex: family is not downward closed");
    }
    return out;
}

Multicomplex compressed_multicomplex(const FVector& f, int n) {
    validate_f_vector(f);
    FVector t = f.trimmed();
    if (t.entries.empty()) return Multicomplex::void_complex(n);
    check_growth(t, n, true, macaulay_shadow);
    std::vector<MultiFace> all;
    for (std::size_t c = 0; c < t.entries.size(); ++c) {
        auto fam = compressed_family(t.entries[c], static_cast<int>(c), n, true);
        all.insert(all.end(), fam.begin(), fam.end());
    }
    return Multicomplex::from_faces(n, std::move(all)); // validates closure
}

SimplicialComplex cone(const SimplicialComplex& c, int apex) {
    if (c.is_void()) return c;
    if (!c.facets().empty()) {
        for (const auto& f : c.facets()) {
            if (!f.empty() && f.back() >= apex) {
                throw std::invalid_argument("cone: apex must exceed existing vertices");
            }
        }
    }
    std::vector<Face> facets;
    for (const auto& f : c.facets()) {
        Face g = f;
        g.push_back(apex);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(std::max(c.n(), apex), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
    if (c.is_void()) return c;
    std::vector<Face> gen;
    for (const auto& f : c.faces()) {
        if (static_cast<int>(f.size()) <= k + 1) gen.push_back(f);
    }
    return SimplicialComplex::from_facets(c.n(), std::move(gen));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void()) return b;
    if (b.is_void()) return a;
    std::vector<Face> gen = a.facets();
    gen.insert(gen.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_facets(std::max(a.n(), b.n()), std::move(gen));
}

} // namespace relkk
