#include "relkk/shelling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace relkk {

namespace {

using Mask = std::uint64_t;

Mask mask_of(const Face& f) {
    Mask m = 0;
    for (int v : f) {
        if (v < 1 || v > 64) throw std::invalid_argument("shelling: vertex out of mask range");
        m |= Mask(1) << (v - 1);
    }
    return m;
}

Face face_of(Mask m) {
    Face f;
    for (int v = 0; v < 64; ++v) {
        if (m >> v & 1) f.push_back(v + 1);
    }
    return f;
}

std::vector<Mask> masks_of(const std::vector<Face>& faces) {
    std::vector<Mask> ms;
    ms.reserve(faces.size());
    for (const auto& f : faces) ms.push_back(mask_of(f));
    return ms;
}

// Incremental shelling state over a fixed relative face set.
struct ShellingContext {
    std::unordered_set<Mask> psi_faces;
    std::unordered_set<Mask> covered;

    explicit ShellingContext(const RelativeComplex& psi) {
        for (const auto& f : psi.faces()) psi_faces.insert(mask_of(f));
    }

    // Faces of 2^facet inside psi that are not covered yet.
    std::vector<Mask> new_faces(Mask facet) const {
        std::vector<Mask> out;
        Mask s = facet;
        while (true) {
            if (psi_faces.count(s) && !covered.count(s)) out.push_back(s);
            if (s == 0) break;
            s = (s - 1) & facet;
        }
        return out;
    }

    static std::vector<Mask> minimal_of(const std::vector<Mask>& faces) {
        std::vector<Mask> mins;
        for (Mask t : faces) {
            bool has_proper_subset = false;
            for (Mask u : faces) {
                if (u != t && (u & t) == u) {
                    has_proper_subset = true;
                    break;
                }
            }
            if (!has_proper_subset) mins.push_back(t);
        }
        return mins;
    }
};

} // namespace

ShellingCheck verify_shelling(const RelativeComplex& psi, const std::vector<Face>& order) {
    ShellingCheck res;
    std::vector<Mask> expected = masks_of(psi.max_faces());
    std::vector<Mask> given = masks_of(order);
    {
        auto e = expected;
        auto g = given;
        std::sort(e.begin(), e.end());
        std::sort(g.begin(), g.end());
        if (e != g) {
            throw std::invalid_argument(
                "verify_shelling: order is not a permutation of the maximal faces");
        }
    }
    ShellingContext ctx(psi);
    for (std::size_t j = 0; j < given.size(); ++j) {
        auto fresh = ctx.new_faces(given[j]);
        auto mins = ShellingContext::minimal_of(fresh);
        if (mins.size() != 1) {
            res.ok = false;
            res.failed_step = j + 1;
            for (Mask m : mins) res.minimal_faces.push_back(face_of(m));
            return res;
        }
        res.steps.push_back({order[j], face_of(mins[0]), fresh.size()});
        for (Mask m : fresh) ctx.covered.insert(m);
    }
    res.ok = true;
    return res;
}

HVector h_from_shelling(const std::vector<ShellingStep>& steps, int d) {
    if (d < 0) throw std::invalid_argument("h_from_shelling: d must be non-negative");
    HVector h;
    h.entries.assign(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& s : steps) {
        if (static_cast<int>(s.facet.size()) != d) {
            throw std::invalid_argument("h_from_shelling: complex is not pure of dimension d-1");
        }
        h.entries[s.restriction.size()] += 1;
    }
    return h;
}

namespace {

struct ShellingDfs {
    std::vector<Mask> facets; // revlex order
    ShellingContext ctx;
    std::unordered_set<std::uint64_t> dead;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> order_ix;

    ShellingDfs(const RelativeComplex& psi, std::vector<Mask> fs, std::uint64_t b)
        : facets(std::move(fs)), ctx(psi), budget(b) {}

    bool run(std::uint64_t used) {
        if (order_ix.size() == facets.size()) return true;
        if (dead.count(used)) return false;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (used >> i & 1) continue;
            auto fresh = ctx.new_faces(facets[i]);
            auto mins = ShellingContext::minimal_of(fresh);
            if (mins.size() != 1) continue;
            for (Mask m : fresh) ctx.covered.insert(m);
            order_ix.push_back(static_cast<int>(i));
            if (run(used | (std::uint64_t(1) << i))) return true;
            order_ix.pop_back();
            for (Mask m : fresh) ctx.covered.erase(m);
            if (out_of_budget) return false;
        }
        dead.insert(used);
        return false;
    }
};

} // namespace

ShellingSearch find_shelling(const RelativeComplex& psi, std::uint64_t budget) {
    ShellingSearch res;
    auto maxf = psi.max_faces();
    if (maxf.empty()) {
        res.status = SearchStatus::found; // empty complex, empty order
        return res;
    }
    for (const auto& f : maxf) {
        if (f.size() != maxf.front().size()) {
            throw std::invalid_argument("find_shelling: complex is not pure");
        }
    }
    if (maxf.size() > 63) throw std::invalid_argument("find_shelling: too many facets");
    std::vector<Mask> fs = masks_of(maxf);
    std::sort(fs.begin(), fs.end()); // numeric order of masks = revlex
    ShellingDfs dfs(psi, fs, budget);
    bool found = dfs.run(0);
    res.nodes = dfs.nodes;
    if (found) {
        res.status = SearchStatus::found;
        for (int ix : dfs.order_ix) res.order.push_back(face_of(fs[ix]));
    } else if (dfs.out_of_budget) {
        res.status = SearchStatus::budget_exceeded;
    } else {
        res.status = SearchStatus::exhausted;
    }
    return res;
}

namespace {

// Shellability of a plain pure complex given by facet masks, with a shared
// node budget. Returns the order when found.
struct PlainShellResult {
    SearchStatus status;
    std::vector<Face> order;
};

PlainShellResult shellable_plain(int n, const std::vector<Mask>& facet_masks,
                                 std::uint64_t& budget_left) {
    std::vector<Face> facets;
    for (Mask m : facet_masks) facets.push_back(face_of(m));
    SimplicialComplex c = SimplicialComplex::from_facets(n, facets);
    RelativeComplex rc(c, SimplicialComplex::void_complex(n));
    ShellingSearch s = find_shelling(rc, budget_left);
    budget_left -= std::min(budget_left, s.nodes);
    return {s.status, s.order};
}

} // namespace

FullShellability is_fully_shellable(const RelativeComplex& psi, std::uint64_t budget) {
    FullShellability res;
    const int n = psi.n();
    if (n > 64) throw std::invalid_argument("is_fully_shellable: ground set too large");

    FaceSet pf = psi.faces();
    if (pf.empty()) {
        // Void relative complex: any presentation with delta = gamma works.
        res.status = SearchStatus::found;
        res.presentation = RelativeComplex(SimplicialComplex::empty_face_complex(n),
                                           SimplicialComplex::empty_face_complex(n));
        return res;
    }

    std::uint64_t budget_left = budget;

    if (pf.count(Face{})) {
        // Non-proper: psi is forced to be a plain complex with gamma void.
        for (const auto& f : pf) {
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face sub;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    if (i != drop) sub.push_back(f[i]);
                }
                if (!pf.count(sub)) {
                    res.status = SearchStatus::exhausted;
                    return res;
                }
            }
        }
        auto maxf = psi.max_faces();
        const std::size_t d = maxf.front().size();
        for (const auto& f : maxf) {
            if (f.size() != d) {
                res.status = SearchStatus::exhausted; // not pure, cannot be shellable here
                return res;
            }
        }
        ShellingSearch s = find_shelling(psi, budget_left);
        res.nodes = s.nodes;
        res.status = s.status;
        if (s.status == SearchStatus::found) {
            res.presentation = psi;
            res.delta_order = s.order;
            res.psi_order = s.order;
        }
        return res;
    }

    // Proper case. Maximal faces must all have the same cardinality d, since
    // any pure presentation forces psi itself to be pure.
    auto maxf = psi.max_faces();
    const std::size_t d = maxf.front().size();
    for (const auto& f : maxf) {
        if (f.size() != d) {
            res.status = SearchStatus::exhausted;
            return res;
        }
    }

    std::unordered_set<Mask> p_masks;
    for (const auto& f : pf) p_masks.insert(mask_of(f));

    // Forced part of gamma': every subset of a psi face that is not itself
    // in psi must belong to any valid gamma'.
    std::unordered_set<Mask> forced;
    for (const auto& f : pf) {
        Mask fm = mask_of(f);
        Mask s = fm;
        while (true) {
            if (!p_masks.count(s)) forced.insert(s);
            if (s == 0) break;
            s = (s - 1) & fm;
        }
    }

    // Candidate gamma' facets: d-subsets of [n] none of whose subsets meet psi.
    std::vector<Mask> candidates;
    {
        auto dsets = compressed_family(binomial(n, static_cast<int>(d)), static_cast<int>(d),
                                       n, false);
        for (const auto& g : dsets) {
            Mask gm = mask_of(g);
            bool clean = true;
            Mask s = gm;
            while (true) {
                if (p_masks.count(s)) {
                    clean = false;
                    break;
                }
                if (s == 0) break;
                s = (s - 1) & gm;
            }
            if (clean) candidates.push_back(gm);
        }
    }
    // Every forced face needs a candidate superset, else no presentation exists.
    for (Mask f : forced) {
        bool coverable = false;
        for (Mask c : candidates) {
            if ((f & c) == f) {
                coverable = true;
                break;
            }
        }
        if (!coverable) {
            res.status = SearchStatus::exhausted;
            return res;
        }
    }
    if (candidates.size() > 24) {
        throw std::invalid_argument("is_fully_shellable: presentation space too large");
    }

    // Psi's own shellability is presentation-independent; settle it once.
    ShellingSearch psi_search = find_shelling(psi, budget_left);
    budget_left -= std::min(budget_left, psi_search.nodes);
    if (psi_search.status == SearchStatus::budget_exceeded) {
        res.status = SearchStatus::budget_exceeded;
        return res;
    }
    if (psi_search.status == SearchStatus::exhausted) {
        res.status = SearchStatus::exhausted;
        return res;
    }

    std::vector<Mask> psi_facets = masks_of(maxf);
    bool ran_out = false;
    for (std::uint32_t sel = 1; sel < (1u << candidates.size()); ++sel) {
        if (budget_left == 0) {
            ran_out = true;
            break;
        }
        std::vector<Mask> gamma_facets;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (sel >> i & 1) gamma_facets.push_back(candidates[i]);
        }
        // closure(gamma') must contain every forced face
        auto covers = [&gamma_facets](Mask f) {
            for (Mask g : gamma_facets) {
                if ((f & g) == f) return true;
            }
            return false;
        };
        bool all_covered = true;
        for (Mask f : forced) {
            if (!covers(f)) {
                all_covered = false;
                break;
            }
        }
        if (!all_covered) continue;

        auto gs = shellable_plain(n, gamma_facets, budget_left);
        if (gs.status == SearchStatus::budget_exceeded) {
            ran_out = true;
            break;
        }
        if (gs.status != SearchStatus::found) continue;

        std::vector<Mask> delta_facets = gamma_facets;
        delta_facets.insert(delta_facets.end(), psi_facets.begin(), psi_facets.end());
        auto ds = shellable_plain(n, delta_facets, budget_left);
        if (ds.status == SearchStatus::budget_exceeded) {
            ran_out = true;
            break;
        }
        if (ds.status != SearchStatus::found) continue;

        std::vector<Face> gfaces;
        for (Mask m : gamma_facets) gfaces.push_back(face_of(m));
        std::vector<Face> dfaces = gfaces;
        for (Mask m : psi_facets) dfaces.push_back(face_of(m));
        res.status = SearchStatus::found;
        res.presentation = RelativeComplex(SimplicialComplex::from_facets(n, dfaces),
                                           SimplicialComplex::from_facets(n, gfaces));
        res.delta_order = ds.order;
        res.gamma_order = gs.order;
        res.psi_order = psi_search.order;
        return res;
    }
    res.status = ran_out ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
    return res;
}

} // namespace relkk
