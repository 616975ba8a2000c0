#include "relkk/json_io.hpp"

#include <stdexcept>

namespace relkk {

namespace {

const Int kJsonNumberLimit = Int(1) << 53;

} // namespace

Json int_to_json(const Int& v) {
    if (v <= kJsonNumberLimit && -v <= kJsonNumberLimit) {
        return Json(v.convert_to<std::int64_t>());
    }
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json int_vec_to_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const auto& e : v) arr.push_back(int_to_json(e));
    return arr;
}

std::vector<Int> int_vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_from_json(e));
    return out;
}

Json face_to_json(const Face& f) {
    Json arr = Json::array();
    for (int v : f) arr.push_back(v);
    return arr;
}

Face face_from_json(const Json& j, bool multiset) {
    if (!j.is_array()) throw std::invalid_argument("face: expected an array of vertices");
    Face f;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("face: vertices must be integers");
        f.push_back(e.get<int>());
    }
    if (multiset ? !is_valid_multiface(f) : !is_valid_face(f)) {
        throw std::invalid_argument(multiset ? "face: must be weakly increasing positive integers"
                                             : "face: must be strictly increasing positive integers");
    }
    return f;
}

Json face_list_to_json(const std::vector<Face>& fs) {
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back(face_to_json(f));
    return arr;
}

std::vector<Face> face_list_from_json(const Json& j, bool multiset) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of faces");
    std::vector<Face> out;
    for (const auto& e : j) out.push_back(face_from_json(e, multiset));
    return out;
}

Json to_json(const SimplicialComplex& c) {
    Json j;
    j["n"] = c.n();
    j["void"] = c.is_void();
    j["facets"] = face_list_to_json(c.facets());
    return j;
}

SimplicialComplex simplicial_complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n")) {
        throw std::invalid_argument("complex: expected an object with \"n\" and \"facets\"");
    }
    const int n = j.at("n").get<int>();
    if (n < 0) throw std::invalid_argument("complex: n must be non-negative");
    const bool is_void = j.value("void", false);
    if (is_void) {
        if (j.contains("facets") && !j.at("facets").empty()) {
            throw std::invalid_argument("complex: void complex cannot list facets");
        }
        return SimplicialComplex::void_complex(n);
    }
    auto facets = face_list_from_json(j.at("facets"));
    if (facets.empty()) {
        throw std::invalid_argument(
            "complex: non-void complex needs at least the empty face as a facet");
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

Json to_json(const RelativeComplex& c) {
    Json j;
    j["delta"] = to_json(c.delta());
    j["gamma"] = to_json(c.gamma());
    return j;
}

RelativeComplex relative_complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("delta") || !j.contains("gamma")) {
        throw std::invalid_argument("relative complex: expected {\"delta\":..., \"gamma\":...}");
    }
    return RelativeComplex(simplicial_complex_from_json(j.at("delta")),
                           simplicial_complex_from_json(j.at("gamma")));
}

Json fvector_to_json(const FVector& f, int d) {
    Json j;
    j["kind"] = "f";
    j["d"] = d;
    j["entries"] = int_vec_to_json(f.entries);
    return j;
}

Json hvector_to_json(const HVector& h) {
    Json j;
    j["kind"] = "h";
    j["d"] = h.d();
    j["entries"] = int_vec_to_json(h.entries);
    return j;
}

Json to_json(const CertificatePair& c) {
    Json j;
    j["accepted"] = c.accepted;
    j["a"] = int_vec_to_json(c.a);
    j["b"] = int_vec_to_json(c.b);
    j["direction"] = c.direction == Direction::top_down ? "top-down" : "bottom-up";
    j["failed_index"] = c.failed_index ? Json(*c.failed_index) : Json(nullptr);
    j["reason"] = c.reason.empty() ? Json(nullptr) : Json(c.reason);
    return j;
}

Json to_json(const CheckResult& c) {
    Json j;
    j["accepted"] = c.accepted;
    j["failed_index"] = c.failed_index ? Json(*c.failed_index) : Json(nullptr);
    j["reason"] = c.reason.empty() ? Json(nullptr) : Json(c.reason);
    return j;
}

Json shelling_transcript_to_json(const std::vector<ShellingStep>& steps) {
    Json order = Json::array();
    Json restrictions = Json::array();
    for (const auto& s : steps) {
        order.push_back(face_to_json(s.facet));
        restrictions.push_back(face_to_json(s.restriction));
    }
    Json j;
    j["order"] = order;
    j["restrictions"] = restrictions;
    return j;
}

Json to_json(const BjornerDecomposition& dec) {
    Json parts = Json::array();
    for (const auto& p : dec.parts) {
        Json pj;
        pj["shift"] = p.shift;
        pj["nu"] = int_vec_to_json(p.nu);
        parts.push_back(pj);
    }
    Json j;
    j["target"] = int_vec_to_json(dec.target);
    j["parts"] = parts;
    return j;
}

BjornerDecomposition decomposition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("target") || !j.contains("parts")) {
        throw std::invalid_argument("decomposition: expected {\"target\":..., \"parts\":...}");
    }
    BjornerDecomposition dec;
    dec.target = int_vec_from_json(j.at("target"));
    for (const auto& pj : j.at("parts")) {
        DecompositionPart p;
        p.shift = pj.at("shift").get<int>();
        p.nu = int_vec_from_json(pj.at("nu"));
        dec.parts.push_back(std::move(p));
    }
    return dec;
}

Json to_json(const EnumerationReport& rep) {
    Json j;
    j["kind"] = rep.kind;
    j["params"] = int_vec_to_json(rep.params);
    j["complexes_enumerated"] = rep.complexes_enumerated;
    Json vecs = Json::array();
    for (const auto& v : rep.vectors) vecs.push_back(int_vec_to_json(v));
    j["vectors"] = vecs;
    j["value"] = int_to_json(rep.scalar);
    j["elapsed_seconds"] = rep.elapsed_seconds;
    return j;
}

} // namespace relkk
