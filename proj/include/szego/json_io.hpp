#pragma once

// JSON and CSV encodings. Exact numbers always travel as strings ("p/q").

#include "szego/laws.hpp"
#include "szego/phi_map.hpp"
#include "szego/realization.hpp"
#include "szego/signature.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace szego {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
/// Accepts "p/q" strings and JSON integers; floats are rejected.
Rational rational_from_json(const Json& j);

Json poly_json(const RatPoly& p);                 // {"coeffs": [...]}, ascending
Json tagged_json(const RatPoly& p, int n);        // {"n": n, "coeffs": [...]}
Json exp_json(const RatPoly& r);                  // {"exp_times": {"coeffs": [...]}}

struct ObjectInput {
  RatPoly poly;
  std::optional<int> n;
  bool exp_form = false;
};
/// Any of the three encodings above.
ObjectInput object_from_json(const Json& j);

/// {"rational", "complex_pairs", "zeros", "infinity", "scalar", "a_poly"} plus
/// "algebraic" and "unresolved" when present. Approximate values appear only
/// under "approx".
Json factors_json(const FactorMultiset& f);
/// Either an encoded multiset or a bare list whose entries are "p/q" strings
/// or [re, im] conjugate pairs.
FactorMultiset factors_from_json(const Json& j);

Json root_signature_json(const RootSignature& s);
Json signature_json(const SignVector8& s);
Json necessary_json(const NecessaryReport& r);

Json spec_json(const CaseSpec& c);
CaseSpec spec_from_json(const Json& j);

Json certificate_json(const RealizationCertificate& c);
Json outcome_json(const RealizeOutcome& o);
Json summary_json(const RealizeSummary& s, bool with_certificates);

Json phi_row_json(const PhiRow& row);
Json law_json(const LawResult& r);

Json error_json(const std::string& type, const std::string& message);

/// Column orders are fixed; see README.
std::string spec_csv_header();
std::string spec_csv_row(const CaseSpec& c);
std::string summary_csv(const RealizeSummary& s);
std::string phi_csv(const std::vector<PhiRow>& rows);

}  // namespace szego
