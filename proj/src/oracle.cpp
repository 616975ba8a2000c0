#include "relkk/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "relkk/shadow.hpp"
#include "relkk/shelling.hpp"

namespace relkk {

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return __builtin_popcount(m); }

Face face_of(Mask m) {
    Face f;
    for (int v = 0; v < 32; ++v) {
        if (m >> v & 1) f.push_back(v + 1);
    }
    return f;
}

// All subsets of [n] ordered by (cardinality, value); the order refines
// inclusion, which the closure-respecting enumerations below rely on.
std::vector<Mask> graded_masks(int n) {
    std::vector<Mask> faces(std::size_t(1) << n);
    for (Mask m = 0; m < faces.size(); ++m) faces[m] = m;
    std::stable_sort(faces.begin(), faces.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    return faces;
}

// Enumerates every downward-closed subset of the face list `universe`
// (which must itself be closed and inclusion-ordered). Each leaf invokes
// `sink` with membership flags parallel to `universe`.
struct ClosedFamilyDfs {
    const std::vector<Mask>& universe;
    std::vector<std::vector<int>> cover_ix; // indices of (size-1)-subsets within universe
    std::vector<char> in;
    const std::function<void(const std::vector<char>&)>& sink;

    ClosedFamilyDfs(const std::vector<Mask>& u,
                    const std::function<void(const std::vector<char>&)>& s)
        : universe(u), in(u.size(), 0), sink(s) {
        std::unordered_map<Mask, int> index;
        for (std::size_t i = 0; i < universe.size(); ++i) index[universe[i]] = static_cast<int>(i);
        cover_ix.resize(universe.size());
        for (std::size_t i = 0; i < universe.size(); ++i) {
            Mask f = universe[i];
            for (int v = 0; v < 32; ++v) {
                if (f >> v & 1) {
                    auto it = index.find(f & ~(Mask(1) << v));
                    if (it == index.end()) {
                        throw std::logic_error("closed-family enumeration: universe not closed");
                    }
                    cover_ix[i].push_back(it->second);
                }
            }
        }
    }

    void run(std::size_t i) {
        if (i == universe.size()) {
            sink(in);
            return;
        }
        run(i + 1); // exclude
        bool ok = true;
        for (int c : cover_ix[i]) {
            if (!in[c]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            in[i] = 1;
            run(i + 1);
            in[i] = 0;
        }
    }
};

std::vector<Face> facets_of_flags(const std::vector<Mask>& universe, const std::vector<char>& in) {
    std::vector<Face> facets;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (!in[i]) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < universe.size(); ++j) {
            if (j != i && in[j] && (universe[i] & universe[j]) == universe[i] &&
                universe[i] != universe[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets.push_back(face_of(universe[i]));
    }
    return facets;
}

void require_cap(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(std::string("oracle cap exceeded: ") + what +
                                    " (set accept_long_runtimes to override)");
    }
}

} // namespace

void enumerate_complexes(int n, const std::function<void(const SimplicialComplex&)>& sink,
                         const OracleLimits& limits) {
    if (n < 0) throw std::invalid_argument("enumerate_complexes: negative n");
    require_cap(limits.accept_long_runtimes || n <= limits.max_enumerate_n,
                "enumerate_complexes n");
    auto universe = graded_masks(n);
    std::function<void(const std::vector<char>&)> handle = [&](const std::vector<char>& in) {
        bool any = false;
        for (char c : in) {
            if (c) {
                any = true;
                break;
            }
        }
        if (!any) {
            sink(SimplicialComplex::void_complex(n));
            return;
        }
        sink(SimplicialComplex::from_facets(n, facets_of_flags(universe, in)));
    };
    ClosedFamilyDfs dfs(universe, handle);
    dfs.run(0);
}

std::uint64_t count_complexes(int n, const OracleLimits& limits) {
    std::uint64_t count = 0;
    enumerate_complexes(n, [&count](const SimplicialComplex&) { ++count; }, limits);
    return count;
}

void visit_relative_pairs(int n,
                          const std::function<void(const std::vector<int>&,
                                                   const std::vector<int>&)>& sink,
                          const OracleLimits& limits) {
    if (n < 0) throw std::invalid_argument("visit_relative_pairs: negative n");
    require_cap(limits.accept_long_runtimes || n <= limits.max_pair_n, "visit_relative_pairs n");
    auto universe = graded_masks(n);

    // Outer DFS picks delta's face set; inner DFS picks gamma inside it.
    std::function<void(const std::vector<char>&)> outer = [&](const std::vector<char>& delta_in) {
        std::vector<Mask> delta_faces;
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (delta_in[i]) delta_faces.push_back(universe[i]);
        }
        if (delta_faces.empty()) return;
        std::vector<int> fdelta(n + 2, 0);
        for (Mask f : delta_faces) fdelta[popcount(f)]++;

        std::function<void(const std::vector<char>&)> inner =
            [&](const std::vector<char>& gamma_in) {
                bool any = false, all = true;
                for (std::size_t i = 0; i < delta_faces.size(); ++i) {
                    if (gamma_in[i]) {
                        any = true;
                    } else {
                        all = false;
                    }
                }
                if (!any || all) return; // gamma must be nonvoid and proper
                std::vector<int> fgamma(n + 2, 0);
                for (std::size_t i = 0; i < delta_faces.size(); ++i) {
                    if (gamma_in[i]) fgamma[popcount(delta_faces[i])]++;
                }
                sink(fdelta, fgamma);
            };
        ClosedFamilyDfs inner_dfs(delta_faces, inner);
        inner_dfs.run(0);
    };
    ClosedFamilyDfs outer_dfs(universe, outer);
    outer_dfs.run(0);
}

std::set<IntVec> achievable_relative_f(int n, const OracleLimits& limits) {
    std::set<IntVec> achieved;
    visit_relative_pairs(
        n,
        [&](const std::vector<int>& fdelta, const std::vector<int>& fgamma) {
            std::vector<int> diff(fdelta.size());
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = fdelta[i] - fgamma[i];
            while (!diff.empty() && diff.back() == 0) diff.pop_back();
            if (diff.empty()) return;
            achieved.insert(IntVec(diff.begin(), diff.end()));
        },
        limits);
    return achieved;
}

Int min_shadow(int m, int k, int n, const OracleLimits& limits) {
    if (m < 0 || k < 1 || n < 0) throw std::invalid_argument("min_shadow: bad arguments");
    const Int total = binomial(n, k);
    if (Int(m) > total) throw std::invalid_argument("min_shadow: m exceeds C(n,k)");
    require_cap(total <= 64, "min_shadow C(n,k)");
    const Int families = binomial(total, static_cast<unsigned long>(m));
    require_cap(limits.accept_long_runtimes ||
                    families <= Int(limits.max_shadow_families),
                "min_shadow family count");
    if (m == 0) return 0;

    auto ksets = compressed_family(total, k, n, false);
    // shadow bitmap over (k-1)-sets
    auto subs = compressed_family(binomial(n, k - 1), k - 1, n, false);
    require_cap(subs.size() <= 64, "min_shadow shadow universe");
    std::map<Face, int> sub_ix;
    for (std::size_t i = 0; i < subs.size(); ++i) sub_ix[subs[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> shadow_bits(ksets.size(), 0);
    for (std::size_t i = 0; i < ksets.size(); ++i) {
        for (std::size_t drop = 0; drop < ksets[i].size(); ++drop) {
            Face sub;
            for (std::size_t j = 0; j < ksets[i].size(); ++j) {
                if (j != drop) sub.push_back(ksets[i][j]);
            }
            shadow_bits[i] |= std::uint64_t(1) << sub_ix.at(sub);
        }
    }

    int best = std::numeric_limits<int>::max();
    std::vector<int> pick(m);
    std::function<void(int, int, std::uint64_t)> rec = [&](int start, int chosen,
                                                           std::uint64_t acc) {
        if (chosen == m) {
            best = std::min(best, __builtin_popcountll(acc));
            return;
        }
        for (int i = start; i + (m - chosen) <= static_cast<int>(ksets.size()); ++i) {
            rec(i + 1, chosen + 1, acc | shadow_bits[i]);
        }
    };
    rec(0, 0, 0);
    return best;
}

std::set<IntVec> achievable_fully_shellable_h(int n, int d, const OracleLimits& limits) {
    if (n < 1 || d < 1) throw std::invalid_argument("achievable_fully_shellable_h: bad arguments");
    require_cap(limits.accept_long_runtimes ||
                    (n <= limits.max_fully_shellable_n && d <= limits.max_fully_shellable_d),
                "achievable_fully_shellable_h n/d");
    auto dsets = compressed_family(binomial(n, d), d, n, false);
    const std::size_t count = dsets.size();
    require_cap(count <= 16, "achievable_fully_shellable_h facet universe");

    // Shellability of a plain pure complex, by facet subset.
    std::vector<char> plain(std::size_t(1) << count, 0);
    auto complex_of = [&](std::uint32_t sel) {
        std::vector<Face> facets;
        for (std::size_t i = 0; i < count; ++i) {
            if (sel >> i & 1) facets.push_back(dsets[i]);
        }
        return SimplicialComplex::from_facets(n, facets);
    };
    for (std::uint32_t sel = 1; sel < (std::uint32_t(1) << count); ++sel) {
        RelativeComplex rc(complex_of(sel), SimplicialComplex::void_complex(n));
        plain[sel] = find_shelling(rc).status == SearchStatus::found ? 1 : 0;
    }

    std::set<IntVec> achieved;
    for (std::uint32_t a = 1; a < (std::uint32_t(1) << count); ++a) {
        if (!plain[a]) continue;
        SimplicialComplex delta = complex_of(a);
        // gamma: nonempty proper subsets of delta's facet set
        for (std::uint32_t g = (a - 1) & a; g != 0; g = (g - 1) & a) {
            if (!plain[g]) continue;
            SimplicialComplex gamma = complex_of(g);
            RelativeComplex psi(delta, gamma);
            if (find_shelling(psi).status != SearchStatus::found) continue;
            FVector f = psi.f_vector();
            HVector h = f_to_h(f, d);
            achieved.insert(h.entries);
        }
    }
    return achieved;
}

namespace {

template <typename Fn>
EnumerationReport timed_report(std::string kind, std::vector<Int> params, Fn&& fill) {
    EnumerationReport rep;
    rep.kind = std::move(kind);
    rep.params = std::move(params);
    const auto start = std::chrono::steady_clock::now();
    fill(rep);
    rep.elapsed_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return rep;
}

} // namespace

EnumerationReport oracle_complexes_report(int n, const OracleLimits& limits) {
    return timed_report("complexes", {n}, [&](EnumerationReport& rep) {
        rep.complexes_enumerated = count_complexes(n, limits);
    });
}

EnumerationReport oracle_relative_f_report(int n, const OracleLimits& limits) {
    return timed_report("relative-f", {n}, [&](EnumerationReport& rep) {
        rep.vectors = achievable_relative_f(n, limits);
        rep.complexes_enumerated = count_complexes(n, limits);
    });
}

EnumerationReport oracle_min_shadow_report(int m, int k, int n, const OracleLimits& limits) {
    return timed_report("min-shadow", {m, k, n}, [&](EnumerationReport& rep) {
        rep.scalar = min_shadow(m, k, n, limits);
    });
}

EnumerationReport oracle_fully_shellable_h_report(int n, int d, const OracleLimits& limits) {
    return timed_report("fully-shellable-h", {n, d}, [&](EnumerationReport& rep) {
        rep.vectors = achievable_fully_shellable_h(n, d, limits);
    });
}

} // namespace relkk
