// Command-line surface: every decision procedure, construction and oracle,
// JSON in and out. Exit codes: 0 accepted/constructed, 1 rejected/none,
// 2 input error, 3 budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "relkk/json_io.hpp"
#include "relkk/shadow.hpp"

namespace {

using namespace relkk;

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json parse_json_text(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

// Inline JSON when the argument looks like JSON, otherwise a file path.
Json load_json_arg(const std::string& arg, const char* what) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        return parse_json_text(arg, what);
    }
    std::ifstream in(arg);
    if (!in) throw InputError(std::string(what) + ": cannot open file " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), what);
}

std::vector<Int> parse_int_vector(const std::string& arg, const char* what) {
    try {
        return int_vec_from_json(load_json_arg(arg, what));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

Int parse_big(const std::string& s, const char* what) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw InputError(std::string(what) + ": not an integer: " + s);
    }
}

void emit(Json j, int indent = 2) {
    j["schema"] = 1;
    std::cout << j.dump(indent) << "\n";
}

Json trace_to_json(const std::vector<TraceEntry>& trace) {
    Json arr = Json::array();
    for (const auto& t : trace) {
        Json e;
        e["k"] = t.k;
        e["shadow_a"] = int_to_json(t.shadow_a);
        e["shadow_b"] = int_to_json(t.shadow_b);
        e["a"] = int_to_json(t.a);
        e["b"] = int_to_json(t.b);
        arr.push_back(e);
    }
    return arr;
}

int emit_certificate(const CertificatePair& cert, bool trace_on,
                     const std::vector<TraceEntry>& trace) {
    Json j = to_json(cert);
    if (trace_on) j["trace"] = trace_to_json(trace);
    emit(j);
    return cert.accepted ? kExitAccepted : kExitRejected;
}

int emit_check(const CheckResult& res) {
    emit(to_json(res));
    return res.accepted ? kExitAccepted : kExitRejected;
}

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        default: return "budget-exceeded";
    }
}

// ------------------------------------------------------------------ oracle

std::string cache_file_name(const EnumerationReport& skeleton) {
    std::string name = skeleton.kind;
    for (const auto& p : skeleton.params) name += "_" + p.str();
    return name + ".json";
}

int run_oracle(const std::string& kind, const std::vector<Int>& params,
               const OracleLimits& limits) {
    EnumerationReport want;
    want.kind = kind;
    want.params = params;
    const char* cache_dir = std::getenv("RELKK_ORACLE_CACHE");
    std::filesystem::path cache_path;
    if (cache_dir && *cache_dir) {
        cache_path = std::filesystem::path(cache_dir) / cache_file_name(want);
        std::ifstream in(cache_path);
        if (in) {
            std::stringstream buf;
            buf << in.rdbuf();
            Json cached = parse_json_text(buf.str(), "oracle cache");
            cached["cache"] = "hit";
            emit(cached);
            return kExitAccepted;
        }
    }
    EnumerationReport rep;
    auto as_int = [](const Int& v) { return v.convert_to<int>(); };
    if (kind == "complexes") {
        rep = oracle_complexes_report(as_int(params[0]), limits);
    } else if (kind == "relative-f") {
        rep = oracle_relative_f_report(as_int(params[0]), limits);
    } else if (kind == "min-shadow") {
        rep = oracle_min_shadow_report(as_int(params[0]), as_int(params[1]), as_int(params[2]),
                                       limits);
    } else {
        rep = oracle_fully_shellable_h_report(as_int(params[0]), as_int(params[1]), limits);
    }
    Json j = to_json(rep);
    if (!cache_path.empty()) {
        std::filesystem::create_directories(cache_path.parent_path());
        std::ofstream out(cache_path);
        Json stored = j;
        stored["schema"] = 1;
        out << stored.dump(2) << "\n";
    }
    emit(j);
    return kExitAccepted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"realizability of face vectors of relative complexes on a fixed ground set"};
    app.require_subcommand(1);
    bool trace_on = false;
    app.add_flag("--trace", trace_on, "include the certificate evolution in the output");

    // shadow
    std::string shadow_variant, shadow_r;
    unsigned long shadow_k = 0;
    auto* sc_shadow = app.add_subcommand("shadow", "evaluate a shadow operator");
    sc_shadow->add_option("variant", shadow_variant, "lower | macaulay | upper")->required();
    sc_shadow->add_option("r", shadow_r)->required();
    sc_shadow->add_option("k", shadow_k)->required();

    std::string rep_r;
    unsigned long rep_k = 0;
    auto* sc_rep = app.add_subcommand("binom-rep", "cascade representation of r");
    sc_rep->add_option("r", rep_r)->required();
    sc_rep->add_option("k", rep_k)->required();

    std::string vec_arg;
    int n_arg = 0;
    auto* sc_kk = app.add_subcommand("kk-check", "f-vector condition for simplicial complexes");
    sc_kk->add_option("f", vec_arg)->required();

    auto* sc_m = app.add_subcommand("m-check", "M-sequence condition for multicomplex f-vectors");
    sc_m->add_option("f", vec_arg)->required();

    auto* sc_relf = app.add_subcommand("rel-f-check", "relative simplicial realizability on [n]");
    sc_relf->add_option("f", vec_arg)->required();
    sc_relf->add_option("n", n_arg)->required();

    auto* sc_relm = app.add_subcommand("rel-multi-check", "finite relative multicomplex check");
    sc_relm->add_option("f", vec_arg)->required();
    sc_relm->add_option("n", n_arg)->required();

    auto* sc_prefix = app.add_subcommand("rel-prefix-check", "prefix check for infinite inputs");
    sc_prefix->add_option("f", vec_arg)->required();
    sc_prefix->add_option("n", n_arg)->required();

    auto* sc_hilbert = app.add_subcommand("hilbert-check", "Hilbert function of an ideal quotient");
    sc_hilbert->add_option("H", vec_arg)->required();
    sc_hilbert->add_option("n", n_arg)->required();

    auto* sc_fcm = app.add_subcommand("fcm-h-check", "fully Cohen-Macaulay h-vector check");
    sc_fcm->add_option("hvec", vec_arg)->required();
    sc_fcm->add_option("n", n_arg)->required();

    auto* sc_nec = app.add_subcommand("cm-h-necessary", "necessary CM h-vector condition");
    sc_nec->add_option("hvec", vec_arg)->required();
    sc_nec->add_option("n", n_arg)->required();

    auto* sc_wf = app.add_subcommand("witness-f", "compressed presentation for an f-vector");
    sc_wf->add_option("f", vec_arg)->required();
    sc_wf->add_option("n", n_arg)->required();

    auto* sc_wh = app.add_subcommand("witness-h", "fully shellable witness for an h-vector");
    sc_wh->add_option("hvec", vec_arg)->required();
    sc_wh->add_option("n", n_arg)->required();

    std::string face_arg;
    int phi_dim = 0;
    auto* sc_phi = app.add_subcommand("phi-d", "multiset-to-facet bijection");
    sc_phi->add_option("F", face_arg)->required();
    sc_phi->add_option("d", phi_dim)->required();
    sc_phi->add_option("n", n_arg)->required();

    std::string psi_arg;
    int cone_steps = 0;
    auto* sc_cone = app.add_subcommand("cone-repair", "cone gamma and take skeleta");
    sc_cone->add_option("psi", psi_arg)->required();
    sc_cone->add_option("steps", cone_steps)->required();

    std::vector<int> shifts;
    std::uint64_t budget = 0;
    auto* sc_dec = app.add_subcommand("decompose", "shifted M-sequence decomposition of h");
    sc_dec->add_option("hvec", vec_arg)->required();
    sc_dec->add_option("shifts", shifts, "non-negative shifts, one per part")->required();
    sc_dec->add_option("--budget", budget, "search node limit");

    std::string file_arg;
    auto* sc_dw = app.add_subcommand("decomp-witness", "shellable witness for a decomposition");
    sc_dw->add_option("file", file_arg, "decomposition JSON (inline or path)")->required();

    std::string order_arg;
    auto* sc_sv = app.add_subcommand("shell-verify", "verify a shelling order");
    sc_sv->add_option("psi", psi_arg)->required();
    sc_sv->add_option("order", order_arg)->required();

    auto* sc_sf = app.add_subcommand("shell-find", "search for a shelling order");
    sc_sf->add_option("psi", psi_arg)->required();
    sc_sf->add_option("--budget", budget, "search node limit");

    auto* sc_fs = app.add_subcommand("fully-shellable", "search pure shellable presentations");
    sc_fs->add_option("psi", psi_arg)->required();
    sc_fs->add_option("--budget", budget, "search node limit");

    std::string hf_arg;
    auto* sc_hf = app.add_subcommand("hf-convert", "convert between f- and h-vectors");
    sc_hf->add_option("vector", hf_arg,
                      "{\"kind\":\"f\"|\"h\",\"d\":...,\"entries\":[...]}; stdin when omitted");

    auto* sc_oracle = app.add_subcommand("oracle", "brute-force enumeration reports");
    bool long_runs = false;
    sc_oracle->add_flag("--accept-long-runtimes", long_runs,
                        "lift the small-ground-set caps");
    int o_n = 0, o_d = 0, o_m = 0, o_k = 0;
    auto* oc = sc_oracle->add_subcommand("complexes", "count complexes on [n]");
    oc->add_option("n", o_n)->required();
    auto* orf = sc_oracle->add_subcommand("rel-f", "achievable relative f-vectors on [n]");
    orf->add_option("n", o_n)->required();
    auto* oms = sc_oracle->add_subcommand("min-shadow", "minimum shadow over m-families");
    oms->add_option("m", o_m)->required();
    oms->add_option("k", o_k)->required();
    oms->add_option("n", o_n)->required();
    auto* ofs = sc_oracle->add_subcommand("fs-h", "fully shellable h-vectors on [n], dim d-1");
    ofs->add_option("n", o_n)->required();
    ofs->add_option("d", o_d)->required();
    sc_oracle->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<TraceEntry> trace;
        auto* tr = trace_on ? &trace : nullptr;

        if (*sc_shadow) {
            const Int r = parse_big(shadow_r, "r");
            Int value;
            if (shadow_variant == "lower") {
                value = lower_shadow(r, shadow_k);
            } else if (shadow_variant == "macaulay") {
                value = macaulay_shadow(r, shadow_k);
            } else if (shadow_variant == "upper") {
                value = upper_shadow(r, shadow_k);
            } else {
                throw InputError("shadow variant must be lower, macaulay or upper");
            }
            Json j;
            j["variant"] = shadow_variant;
            j["r"] = int_to_json(r);
            j["k"] = shadow_k;
            j["value"] = int_to_json(value);
            emit(j);
            return kExitAccepted;
        }
        if (*sc_rep) {
            const BinomialRep rep = binomial_rep(parse_big(rep_r, "r"), rep_k);
            Json terms = Json::array();
            for (const auto& t : rep.terms) {
                Json term = Json::array();
                term.push_back(int_to_json(t.top));
                term.push_back(t.index);
                terms.push_back(term);
            }
            Json j;
            j["k"] = rep.k;
            j["terms"] = terms;
            j["value"] = int_to_json(rep.value());
            emit(j);
            return kExitAccepted;
        }
        if (*sc_kk) {
            return emit_check(kruskal_katona_check(FVector(parse_int_vector(vec_arg, "f"))));
        }
        if (*sc_m) {
            return emit_check(m_sequence_check(parse_int_vector(vec_arg, "f")));
        }
        if (*sc_relf) {
            return emit_certificate(rel_f_check(FVector(parse_int_vector(vec_arg, "f")), n_arg, tr),
                                    trace_on, trace);
        }
        if (*sc_relm) {
            return emit_certificate(
                rel_multi_check(FVector(parse_int_vector(vec_arg, "f")), n_arg, tr), trace_on,
                trace);
        }
        if (*sc_prefix) {
            return emit_certificate(
                rel_multi_prefix_check(FVector(parse_int_vector(vec_arg, "f")), n_arg, tr),
                trace_on, trace);
        }
        if (*sc_hilbert) {
            return emit_certificate(hilbert_quotient_check(parse_int_vector(vec_arg, "H"), n_arg, tr),
                                    trace_on, trace);
        }
        if (*sc_fcm) {
            return emit_certificate(
                fully_cm_h_check(HVector(parse_int_vector(vec_arg, "h")), n_arg, tr), trace_on,
                trace);
        }
        if (*sc_nec) {
            return emit_certificate(
                cm_h_necessary_check(HVector(parse_int_vector(vec_arg, "h")), n_arg, tr), trace_on,
                trace);
        }
        if (*sc_wf) {
            const FVector f(parse_int_vector(vec_arg, "f"));
            CertificatePair cert = rel_f_check(f, n_arg);
            if (!cert.accepted) {
                Json j = to_json(cert);
                emit(j);
                return kExitRejected;
            }
            RelativeComplex psi = witness_rel_f(f, n_arg);
            Json j;
            j["certificate"] = to_json(cert);
            j["witness"] = to_json(psi);
            j["f"] = int_vec_to_json(psi.f_vector().entries);
            emit(j);
            return kExitAccepted;
        }
        if (*sc_wh) {
            const HVector h(parse_int_vector(vec_arg, "h"));
            CertificatePair cert = fully_cm_h_check(h, n_arg);
            if (!cert.accepted) {
                emit(to_json(cert));
                return kExitRejected;
            }
            BfsWitness w = bfs_witness(h, n_arg);
            Json j;
            j["certificate"] = to_json(cert);
            j["witness"] = to_json(w.psi);
            j["delta_order"] = face_list_to_json(w.delta_order);
            j["gamma_order"] = face_list_to_json(w.gamma_order);
            j["psi_order"] = face_list_to_json(w.psi_order);
            emit(j);
            return kExitAccepted;
        }
        if (*sc_phi) {
            Json fj = load_json_arg(face_arg, "F");
            MultiFace mf = face_from_json(fj, /*multiset=*/true);
            Face out = phi_d(mf, phi_dim, n_arg);
            Json j;
            j["face"] = face_to_json(out);
            emit(j);
            return kExitAccepted;
        }
        if (*sc_cone) {
            RelativeComplex psi = relative_complex_from_json(load_json_arg(psi_arg, "psi"));
            RelativeComplex out = cone_skeleton_repair(psi, cone_steps);
            Json j;
            j["psi"] = to_json(out);
            emit(j);
            return kExitAccepted;
        }
        if (*sc_dec) {
            const HVector h(parse_int_vector(vec_arg, "h"));
            DecompositionSearch s =
                find_decomposition(h, shifts, budget ? budget : kDefaultDecompositionBudget);
            Json j;
            j["status"] = status_name(s.status);
            if (s.status == SearchStatus::found) j["decomposition"] = to_json(*s.decomposition);
            emit(j);
            if (s.status == SearchStatus::found) return kExitAccepted;
            return s.status == SearchStatus::exhausted ? kExitRejected : kExitBudget;
        }
        if (*sc_dw) {
            BjornerDecomposition dec = decomposition_from_json(load_json_arg(file_arg, "file"));
            CheckResult check = verify_decomposition(dec);
            if (!check.accepted) {
                emit(to_json(check));
                return kExitRejected;
            }
            DecompositionWitness w = decomposition_witness(dec);
            Json j;
            j["witness"] = to_json(w.psi);
            j["order"] = face_list_to_json(w.order);
            emit(j);
            return kExitAccepted;
        }
        if (*sc_sv) {
            RelativeComplex psi = relative_complex_from_json(load_json_arg(psi_arg, "psi"));
            auto order = face_list_from_json(load_json_arg(order_arg, "order"));
            ShellingCheck check = verify_shelling(psi, order);
            Json j;
            j["ok"] = check.ok;
            if (check.ok) {
                j["transcript"] = shelling_transcript_to_json(check.steps);
            } else {
                j["failed_step"] = check.failed_step;
                j["minimal_faces"] = face_list_to_json(check.minimal_faces);
            }
            emit(j);
            return check.ok ? kExitAccepted : kExitRejected;
        }
        if (*sc_sf) {
            RelativeComplex psi = relative_complex_from_json(load_json_arg(psi_arg, "psi"));
            ShellingSearch s = find_shelling(psi, budget ? budget : kDefaultShellingBudget);
            Json j;
            j["status"] = status_name(s.status);
            j["nodes"] = s.nodes;
            if (s.status == SearchStatus::found) {
                ShellingCheck check = verify_shelling(psi, s.order);
                j["transcript"] = shelling_transcript_to_json(check.steps);
            }
            emit(j);
            if (s.status == SearchStatus::found) return kExitAccepted;
            return s.status == SearchStatus::exhausted ? kExitRejected : kExitBudget;
        }
        if (*sc_fs) {
            RelativeComplex psi = relative_complex_from_json(load_json_arg(psi_arg, "psi"));
            FullShellability fs =
                is_fully_shellable(psi, budget ? budget : kDefaultPresentationBudget);
            Json j;
            j["status"] = status_name(fs.status);
            j["fully_shellable"] = fs.status == SearchStatus::found;
            if (fs.presentation) {
                j["presentation"] = to_json(*fs.presentation);
                j["delta_order"] = face_list_to_json(fs.delta_order);
                j["gamma_order"] = face_list_to_json(fs.gamma_order);
                j["psi_order"] = face_list_to_json(fs.psi_order);
            }
            emit(j);
            if (fs.status == SearchStatus::found) return kExitAccepted;
            return fs.status == SearchStatus::exhausted ? kExitRejected : kExitBudget;
        }
        if (*sc_hf) {
            Json in;
            if (hf_arg.empty()) {
                std::stringstream buf;
                buf << std::cin.rdbuf();
                in = parse_json_text(buf.str(), "stdin");
            } else {
                in = load_json_arg(hf_arg, "vector");
            }
            if (!in.is_object() || !in.contains("kind") || !in.contains("entries")) {
                throw InputError("hf-convert: expected {\"kind\",\"d\",\"entries\"}");
            }
            const std::string kind = in.at("kind").get<std::string>();
            auto entries = int_vec_from_json(in.at("entries"));
            Json j;
            if (kind == "f") {
                const int d = in.contains("d") ? in.at("d").get<int>()
                                               : static_cast<int>(entries.size()) - 1;
                j = hvector_to_json(f_to_h(FVector(entries), d));
            } else if (kind == "h") {
                j = fvector_to_json(h_to_f(HVector(entries)),
                                    static_cast<int>(entries.size()) - 1);
            } else {
                throw InputError("hf-convert: kind must be \"f\" or \"h\"");
            }
            emit(j);
            return kExitAccepted;
        }
        if (*sc_oracle) {
            OracleLimits limits;
            limits.accept_long_runtimes = long_runs;
            if (*oc) return run_oracle("complexes", {o_n}, limits);
            if (*orf) return run_oracle("relative-f", {o_n}, limits);
            if (*oms) return run_oracle("min-shadow", {o_m, o_k, o_n}, limits);
            if (*ofs) return run_oracle("fully-shellable-h", {o_n, o_d}, limits);
        }
    } catch (const InputError& e) {
        Json j;
        j["error"] = e.what();
        emit(j);
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        Json j;
        j["error"] = e.what();
        emit(j);
        return kExitInputError;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = e.what();
        emit(j);
        return kExitInputError;
    }
    return kExitInputError;
}
