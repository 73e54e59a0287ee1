#pragma once

#include <nlohmann/json.hpp>

#include "rds/audit.hpp"
#include "rds/curvelift.hpp"
#include "rds/double_cover.hpp"
#include "rds/imquad.hpp"
#include "rds/planeset.hpp"
#include "rds/rational.hpp"
#include "rds/search.hpp"
#include "rds/surfacelift.hpp"

// JSON encodings. Rationals are always strings "p/q" (or "p"); decoding
// raises Error{parse} on any schema violation.
namespace rds::json {

using nlohmann::json;

json encode(const Rational& q);
Rational decode_rational(const json& j);

json encode(const ImQuadElement& z);
ImQuadElement decode_imquad(const json& j);

json encode(const LatticePoint& p);
LatticePoint decode_point(const json& j);

json encode(const Configuration& c);
Configuration decode_configuration(const json& j);

json encode(const DistanceMatrix& m);
DistanceMatrix decode_distance_matrix(const json& j);

json encode(const RdsReport& r);
json encode(const AuditReport& r);

json encode(const TriPoly& f, int degree);
json encode(const PlaneCurve& c);
PlaneCurve decode_curve(const json& j);

json encode(const TransversalityReport& r);
json encode(const TripleSelection& s);
json encode(const DoubleCoverCurve& d);

json encode(const QuadricSystem& s);
json encode(const LiftedPoint& p);
LiftedPoint decode_lifted_point(const json& j);
json encode(const SingularityRecord& r);
json encode(const GeneralTypeCertificate& c);

json encode(const SearchSpec& s);
SearchSpec decode_search_spec(const json& j);
json encode(const SearchCheckpoint& c);
SearchCheckpoint decode_checkpoint(const json& j);

}  // namespace rds::json
