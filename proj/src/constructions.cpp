#include "relkk/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "relkk/shadow.hpp"

namespace relkk {

RelativeComplex witness_rel_f(const FVector& f, int n) {
    CertificatePair cert = rel_f_check(f, n);
    if (!cert.accepted) {
        throw std::invalid_argument("witness_rel_f: f is not realizable on [n]: " + cert.reason);
    }
    if (cert.a.empty()) {
        return RelativeComplex(SimplicialComplex::void_complex(n),
                               SimplicialComplex::void_complex(n));
    }
    FVector fd, fg;
    fd.entries.push_back(1);
    fg.entries.push_back(1);
    fd.entries.insert(fd.entries.end(), cert.a.begin(), cert.a.end());
    fg.entries.insert(fg.entries.end(), cert.b.begin(), cert.b.end());
    SimplicialComplex delta = compressed_complex(fd, n);
    SimplicialComplex gamma = compressed_complex(fg, n);
    return RelativeComplex(std::move(delta), std::move(gamma));
}

Face phi_d(const MultiFace& f, int d, int n) {
    if (!is_valid_multiface(f)) {
        throw std::invalid_argument("phi_d: input must be weakly increasing");
    }
    if (d < 0 || n < d) throw std::invalid_argument("phi_d: need 0 <= d <= n");
    const int k = static_cast<int>(f.size());
    if (k > d) throw std::invalid_argument("phi_d: cardinality exceeds d");
    if (!f.empty() && f.back() > n - d) {
        throw std::invalid_argument("phi_d: element exceeds n - d");
    }
    Face out;
    out.reserve(d);
    for (int i = 1; i <= d - k; ++i) out.push_back(i);
    for (int i = 0; i < k; ++i) out.push_back(f[i] + d - k + 1 + i);
    return out;
}

namespace {

// Shellable complex with h-vector equal to the multicomplex f-vector `fv`
// (which must start with 1): faces of the compressed multicomplex on
// [ground_m], in graded revlex order, mapped through phi_d into d-sets.
struct BfsBlock {
    SimplicialComplex delta;
    std::vector<Face> order;
    Multicomplex tilde;
};

BfsBlock bfs_block(const FVector& fv, int d, int ground_m, int n) {
    BfsBlock out{SimplicialComplex::void_complex(n), {}, Multicomplex::void_complex(ground_m)};
    out.tilde = compressed_multicomplex(fv, ground_m);
    for (const auto& mf : out.tilde.faces()) {
        out.order.push_back(phi_d(mf, d, n));
    }
    out.delta = SimplicialComplex::from_facets(n, out.order);
    return out;
}

} // namespace

BfsWitness bfs_witness(const HVector& h, int n) {
    CertificatePair cert = fully_cm_h_check(h, n);
    if (!cert.accepted) {
        throw std::invalid_argument("bfs_witness: h is not fully realizable on [n]: " + cert.reason);
    }
    const int d = h.d();
    if (cert.a.empty()) cert.a.assign(d, 0); // all-zero h
    if (cert.b.empty()) cert.b.assign(d, 0);
    const int m = n - d;

    FVector fd, fg;
    fd.entries.push_back(1);
    fg.entries.push_back(1);
    fd.entries.insert(fd.entries.end(), cert.a.begin(), cert.a.end());
    fg.entries.insert(fg.entries.end(), cert.b.begin(), cert.b.end());

    BfsBlock db = bfs_block(fd, d, m, n);
    BfsBlock gb = bfs_block(fg, d, m, n);

    BfsWitness w{RelativeComplex(db.delta, gb.delta), db.order, gb.order, {}};
    for (std::size_t i = 0; i < db.order.size(); ++i) {
        if (!gb.tilde.contains(db.tilde.faces()[i])) {
            w.psi_order.push_back(db.order[i]);
        }
    }
    return w;
}

RelativeComplex cone_skeleton_repair(const RelativeComplex& psi, int cone_steps) {
    if (psi.gamma().is_void()) {
        throw std::invalid_argument("cone_skeleton_repair: gamma must be nonvoid");
    }
    if (cone_steps < 0) throw std::invalid_argument("cone_skeleton_repair: negative cone count");
    SimplicialComplex gamma1 = psi.gamma();
    int next_vertex = psi.n() + 1;
    for (int i = 0; i < cone_steps; ++i) {
        gamma1 = cone(gamma1, next_vertex++);
    }
    SimplicialComplex delta1 = complex_union(psi.delta(), gamma1);
    const int dim_psi = psi.is_void_relative() ? delta1.dim() : psi.dim();
    return RelativeComplex(skeleton(delta1, dim_psi), skeleton(gamma1, dim_psi));
}

CheckResult verify_decomposition(const BjornerDecomposition& dec) {
    CheckResult res;
    for (const auto& e : dec.target) {
        if (e < 0) {
            res.reason = "target has a negative entry";
            return res;
        }
    }
    std::vector<Int> sum(dec.target.size(), 0);
    for (std::size_t i = 0; i < dec.parts.size(); ++i) {
        const auto& p = dec.parts[i];
        if (p.shift < 0) {
            res.failed_index = static_cast<int>(i);
            res.reason = "part " + std::to_string(i) + " has a negative shift";
            return res;
        }
        if (p.nu.empty() || p.nu[0] != 1) {
            res.failed_index = static_cast<int>(i);
            res.reason = "part " + std::to_string(i) + " is not an M-sequence (must start with 1)";
            return res;
        }
        for (const auto& e : p.nu) {
            if (e < 0) {
                res.failed_index = static_cast<int>(i);
                res.reason = "part " + std::to_string(i) + " has a negative entry";
                return res;
            }
        }
        if (!m_sequence_check(p.nu).accepted) {
            res.failed_index = static_cast<int>(i);
            res.reason = "part " + std::to_string(i) + " is not an M-sequence";
            return res;
        }
        for (std::size_t j = 0; j < p.nu.size(); ++j) {
            const std::size_t pos = static_cast<std::size_t>(p.shift) + j;
            if (pos >= sum.size()) {
                if (p.nu[j] != 0) {
                    res.failed_index = static_cast<int>(i);
                    res.reason = "part " + std::to_string(i) + " overruns the target";
                    return res;
                }
                continue;
            }
            sum[pos] += p.nu[j];
        }
    }
    if (sum != dec.target) {
        res.reason = "shifted sum does not match the target";
        return res;
    }
    res.accepted = true;
    return res;
}

namespace {

struct DecompositionDfs {
    std::vector<Int> residual;
    std::vector<int> shifts; // ascending
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::vector<Int>> chosen;

    bool tick() {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    bool solve(std::size_t part) {
        if (out_of_budget) return false;
        if (part == shifts.size()) {
            for (const auto& r : residual) {
                if (r != 0) return false;
            }
            return true;
        }
        const int s = shifts[part];
        // Positions below the current shift can never be reduced again.
        for (int p = 0; p < s && p < static_cast<int>(residual.size()); ++p) {
            if (residual[p] != 0) return false;
        }
        if (s >= static_cast<int>(residual.size())) return false; // leading 1 has no slot
        if (residual[s] < 1) return false;
        std::vector<Int> nu{1};
        residual[s] -= 1;
        bool ok = extend(part, nu, s + 1);
        residual[s] += 1;
        return ok;
    }

    // Extend part `part`'s nu entry by entry, smallest value first.
    bool extend(std::size_t part, std::vector<Int>& nu, int pos) {
        if (out_of_budget) return false;
        if (pos == static_cast<int>(residual.size())) {
            chosen.push_back(nu);
            if (solve(part + 1)) return true;
            chosen.pop_back();
            return false;
        }
        const unsigned long c = nu.size(); // next entry index within nu
        Int cap = residual[pos];
        if (c >= 2) {
            cap = std::min(cap, upper_shadow(nu[c - 1], c - 1));
        }
        for (Int v = 0; v <= cap; ++v) {
            if (!tick()) return false;
            nu.push_back(v);
            residual[pos] -= v;
            if (extend(part, nu, pos + 1)) return true;
            residual[pos] += v;
            nu.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }
};

std::vector<Int> trim_trailing_zeros(std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

} // namespace

DecompositionSearch find_decomposition(const HVector& h, const std::vector<int>& shifts,
                                       std::uint64_t budget) {
    validate_h_vector(h);
    for (int s : shifts) {
        if (s < 0) throw std::invalid_argument("find_decomposition: negative shift");
    }
    DecompositionDfs dfs;
    dfs.residual = h.entries;
    dfs.shifts = shifts;
    std::sort(dfs.shifts.begin(), dfs.shifts.end());
    dfs.budget = budget;

    DecompositionSearch res;
    const bool found = dfs.solve(0);
    res.nodes = dfs.nodes;
    if (dfs.out_of_budget) {
        res.status = SearchStatus::budget_exceeded;
        return res;
    }
    if (!found) {
        res.status = SearchStatus::exhausted;
        return res;
    }
    BjornerDecomposition dec;
    dec.target = h.entries;
    for (std::size_t i = 0; i < dfs.shifts.size(); ++i) {
        std::vector<Int> nu = trim_trailing_zeros(dfs.chosen[i]);
        dec.parts.push_back({dfs.shifts[i], std::move(nu)});
    }
    res.status = SearchStatus::found;
    res.decomposition = std::move(dec);
    return res;
}

DecompositionWitness decomposition_witness(const BjornerDecomposition& dec) {
    CheckResult check = verify_decomposition(dec);
    if (!check.accepted) {
        throw std::invalid_argument("decomposition_witness: invalid decomposition: " + check.reason);
    }
    const int d = static_cast<int>(dec.target.size()) - 1;

    std::vector<Face> delta_facets, gamma_facets, order;
    int next_vertex = 1;
    for (const auto& part : dec.parts) {
        const std::vector<Int> nu = trim_trailing_zeros(part.nu);
        const int block_dim_plus = static_cast<int>(nu.size()) - 1; // block is (D-1)-dimensional
        const int block_m = nu.size() >= 2 ? static_cast<int>(nu[1].convert_to<long>()) : 0;
        const int block_n = block_m + block_dim_plus;

        BfsBlock block = bfs_block(FVector(nu), block_dim_plus, block_m, block_n);

        // Fresh labels: block vertices, then the shift set, then cone apexes.
        const int base = next_vertex - 1;
        next_vertex += block_n;
        Face shift_set, apexes;
        for (int i = 0; i < part.shift; ++i) shift_set.push_back(next_vertex++);
        const int cones = d - block_dim_plus - part.shift;
        if (cones < 0) {
            throw std::logic_error("decomposition_witness: part exceeds the target dimension");
        }
        for (int i = 0; i < cones; ++i) apexes.push_back(next_vertex++);

        Face tail = shift_set; // vertices present in every psi face of this part
        tail.insert(tail.end(), apexes.begin(), apexes.end());

        // delta_i = block * full simplex on (shift_set u apexes);
        // gamma_i = block * { T : shift_set not fully contained in T }.
        for (const auto& bf : block.delta.facets()) {
            Face f;
            for (int v : bf) f.push_back(v + base);
            Face df = f;
            df.insert(df.end(), tail.begin(), tail.end());
            std::sort(df.begin(), df.end());
            delta_facets.push_back(df);
            if (!shift_set.empty()) {
                // maximal faces avoiding all of shift_set: drop one shift vertex
                for (std::size_t skip = 0; skip < shift_set.size(); ++skip) {
                    Face gf = f;
                    for (std::size_t i = 0; i < shift_set.size(); ++i) {
                        if (i != skip) gf.push_back(shift_set[i]);
                    }
                    gf.insert(gf.end(), apexes.begin(), apexes.end());
                    std::sort(gf.begin(), gf.end());
                    gamma_facets.push_back(gf);
                }
            }
        }
        for (const auto& of : block.order) {
            Face f;
            for (int v : of) f.push_back(v + base);
            f.insert(f.end(), tail.begin(), tail.end());
            std::sort(f.begin(), f.end());
            order.push_back(f);
        }
    }

    const int n = next_vertex - 1;
    SimplicialComplex delta = delta_facets.empty()
                                  ? SimplicialComplex::void_complex(std::max(n, 0))
                                  : SimplicialComplex::from_facets(n, delta_facets);
    SimplicialComplex gamma = gamma_facets.empty()
                                  ? SimplicialComplex::void_complex(std::max(n, 0))
                                  : SimplicialComplex::from_facets(n, gamma_facets);
    return {RelativeComplex(std::move(delta), std::move(gamma)), std::move(order)};
}

} // namespace relkk
