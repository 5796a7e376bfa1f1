#pragma once

/// \file
/// \brief JSON forms of the report types and a canonical writer.
///
/// Canonical output: object keys in lexicographic order, no whitespace,
/// doubles with 17 significant digits, non-finite doubles as null. Parsing
/// canonical output and writing it again reproduces the same bytes.

#include "gft/analytic_verify.hpp"
#include "gft/class_criteria.hpp"
#include "gft/series_core.hpp"
#include "gft/threshold_solver.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace gft {

using Json = nlohmann::json;

/// Number or null for non-finite values.
Json number_or_null(double x);

Json to_json(const CoefficientSeq& f);
Json to_json(const MembershipReport& r);
Json to_json(const GridReport& r);
Json to_json(const ThresholdResult& r);

/// Inverse of to_json(CoefficientSeq). Throws DomainError on schema errors.
CoefficientSeq coefficient_seq_from_json(const Json& j);

std::string canonical_dump(const Json& j);

} // namespace gft
