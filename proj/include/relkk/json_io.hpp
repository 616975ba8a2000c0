#pragma once

#include <string>

#include <json.hpp>

#include "relkk/complex.hpp"
#include "relkk/constructions.hpp"
#include "relkk/oracle.hpp"
#include "relkk/realizability.hpp"
#include "relkk/shelling.hpp"
#include "relkk/vectors.hpp"

namespace relkk {

using Json = nlohmann::json;

/// Counts with |v| <= 2^53 serialize as JSON numbers, anything larger as a
/// decimal string, so outputs stay readable by double-based JSON parsers.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json int_vec_to_json(const std::vector<Int>& v);
std::vector<Int> int_vec_from_json(const Json& j);

Json face_to_json(const Face& f);
Face face_from_json(const Json& j, bool multiset = false);
Json face_list_to_json(const std::vector<Face>& fs);
std::vector<Face> face_list_from_json(const Json& j, bool multiset = false);

Json to_json(const SimplicialComplex& c);
SimplicialComplex simplicial_complex_from_json(const Json& j);

Json to_json(const RelativeComplex& c);
RelativeComplex relative_complex_from_json(const Json& j);

Json fvector_to_json(const FVector& f, int d);
Json hvector_to_json(const HVector& h);

Json to_json(const CertificatePair& c);
Json to_json(const CheckResult& c);
Json shelling_transcript_to_json(const std::vector<ShellingStep>& steps);

Json to_json(const BjornerDecomposition& dec);
BjornerDecomposition decomposition_from_json(const Json& j);

Json to_json(const EnumerationReport& rep);

} // namespace relkk
