/*
 * Copyright 2026 The detrep authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "detrep/agler.hpp"
#include "detrep/kvh.hpp"
#include "detrep/modes.hpp"

namespace detrep {

using Json = nlohmann::json;

// Polynomial format: {"vars": d, "mode": "exact"|"float",
//   "terms": [{"exp": [k_1..k_d], "re": ..., "im": ...}]}.
// Exact coefficients are "num/den" decimal strings; float are numbers.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

// Matrix format: {"rows": r, "cols": c, "entries": [[re, im], ...]} row-major,
// plus "mode": "exact" with string entries in exact mode.
Json matrix_to_json(const AnyMatrix& m);
AnyMatrix matrix_from_json(const Json& j);

// Representation: {"n": [n_1..n_d], "K": <matrix>}; the bounded variant adds
// beta, kappa and bound.
Json representation_to_json(const AnyRepresentation& rep);
AnyRepresentation representation_from_json(const Json& j);
Json bounded_representation_to_json(const BoundedRepresentation& rep);

// Tuple: {"d": d, "matrices": [<matrix>, ...], "tolerance": ...}.
Json tuple_to_json(const CommutingTuple<Cplx>& t);
CommutingTuple<Cplx> tuple_from_json(const Json& j);

// Realization: {"m": [...], "A":, "B":, "C":, "D": <matrix>}.
Json realization_to_json(const Realization& r);
Realization realization_from_json(const Json& j);

Json verification_report_to_json(const VerificationReport& r);
Json pmrp_report_to_json(const PmrpReport& r);
Json radius_to_json(const RadiusEstimate& r);
Json supnorm_to_json(const SupNormEstimate& r);
Json kvh_report_to_json(const KvhReport& r);
Json kvh_section5_to_json(const KvhSection5& r);
Json cd_result_to_json(const CdResult& r);

/// Deterministic serialization: sorted keys, doubles at 17 significant
/// digits, non-finite values as null.
std::string dump_json(const Json& j);

}  // namespace detrep
