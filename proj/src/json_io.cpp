#include "szego/json_io.hpp"

#include <sstream>

namespace szego {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  throw DomainError("expected an exact number as a \"p/q\" string, got " + j.dump());
}

namespace {

Json coeff_list(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

RatPoly poly_from_list(const Json& j) {
  if (!j.is_array()) throw DomainError("\"coeffs\" must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return RatPoly(std::move(c));
}

int int_field(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw DomainError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

Json pair_json(const GaussRational& z) { return Json::array({to_json(z.re), to_json(z.im)}); }

GaussRational pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("a conjugate pair is written [re, im]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

}  // namespace

Json poly_json(const RatPoly& p) { return Json{{"coeffs", coeff_list(p)}}; }

Json tagged_json(const RatPoly& p, int n) { return Json{{"n", n}, {"coeffs", coeff_list(p)}}; }

Json exp_json(const RatPoly& r) { return Json{{"exp_times", poly_json(r)}}; }

ObjectInput object_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("expected a polynomial object");
  ObjectInput in;
  if (j.contains("exp_times")) {
    in.exp_form = true;
    const Json& inner = j.at("exp_times");
    if (!inner.is_object() || !inner.contains("coeffs")) throw DomainError("\"exp_times\" needs \"coeffs\"");
    in.poly = poly_from_list(inner.at("coeffs"));
    return in;
  }
  if (!j.contains("coeffs")) throw DomainError("polynomial object needs \"coeffs\"");
  in.poly = poly_from_list(j.at("coeffs"));
  if (j.contains("n")) in.n = int_field(j, "n", 0);
  return in;
}

Json factors_json(const FactorMultiset& f) {
  Json j;
  Json rational = Json::array();
  for (const auto& r : f.rational) rational.push_back(to_json(r));
  Json pairs = Json::array();
  for (const auto& z : f.complex_pairs) pairs.push_back(pair_json(z));
  j["rational"] = rational;
  j["complex_pairs"] = pairs;
  j["zeros"] = f.zeros;
  j["infinity"] = f.infinity;
  j["scalar"] = to_json(f.scalar);
  if (!f.algebraic.empty()) {
    Json alg = Json::array();
    for (const auto& iv : f.algebraic) {
      alg.push_back({{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"poly", poly_json(iv.poly)}});
    }
    j["algebraic"] = alg;
  }
  if (f.unresolved_pairs > 0) {
    Json approx = Json::array();
    for (const auto& z : f.unresolved_approx) approx.push_back(Json::array({z.real(), z.imag()}));
    j["unresolved"] = {{"pairs", f.unresolved_pairs},
                       {"residual", poly_json(f.residual)},
                       {"approx", {{"roots", approx}, {"relative_residual_bound", "1/1000000000"}}}};
  }
  j["a_poly"] = poly_json(f.a_poly);
  return j;
}

FactorMultiset factors_from_json(const Json& j) {
  if (j.is_array()) {
    std::vector<Rational> reals;
    std::vector<GaussRational> pairs;
    for (const auto& e : j) {
      if (e.is_array()) pairs.push_back(pair_from_json(e));
      else reals.push_back(rational_from_json(e));
    }
    return FactorMultiset::from_values(reals, pairs);
  }
  if (!j.is_object()) throw DomainError("factors must be a list or an object");
  const int infinity = int_field(j, "infinity", 0);
  const Rational scalar = j.contains("scalar") ? rational_from_json(j.at("scalar")) : Rational(1);
  std::vector<Rational> reals;
  std::vector<GaussRational> pairs;
  if (j.contains("rational")) {
    for (const auto& e : j.at("rational")) reals.push_back(rational_from_json(e));
  }
  for (int i = int_field(j, "zeros", 0); i > 0; --i) reals.emplace_back(0);
  if (j.contains("complex_pairs")) {
    for (const auto& e : j.at("complex_pairs")) pairs.push_back(pair_from_json(e));
  }
  FactorMultiset listed = FactorMultiset::from_values(reals, pairs, infinity, scalar);
  if (!j.contains("a_poly")) {
    if (j.contains("algebraic") || j.contains("unresolved")) {
      throw DomainError("irrational factors can only be given through \"a_poly\"");
    }
    return listed;
  }
  ObjectInput a = object_from_json(j.at("a_poly"));
  FactorMultiset f = classify_factor_roots(a.poly);
  if (f.a_poly != a.poly) throw DomainError("\"a_poly\" must be monic");
  if (f.rational != listed.rational || f.complex_pairs != listed.complex_pairs || f.zeros != listed.zeros) {
    throw DomainError("\"a_poly\" disagrees with the listed factors");
  }
  f.infinity = infinity;
  f.scalar = scalar;
  return f;
}

Json root_signature_json(const RootSignature& s) {
  return {{"pos", s.pos}, {"zero", s.zero}, {"neg", s.neg}, {"complex_pairs", s.complex_pairs},
          {"distinct_nonzero", s.distinct_nonzero}};
}

Json signature_json(const SignVector8& s) {
  return {{"roots_pos", s.roots.pos},
          {"roots_zero", s.roots.zero},
          {"roots_neg", s.roots.neg},
          {"roots_complex_pairs", s.roots.complex_pairs},
          {"roots_distinct_nonzero", s.roots.distinct_nonzero},
          {"neg_a_pos", s.neg_a.pos},
          {"neg_a_zero", s.neg_a.zero},
          {"neg_a_neg", s.neg_a.neg},
          {"neg_a_complex_pairs", s.neg_a.complex_pairs},
          {"neg_a_distinct_nonzero", s.neg_a.distinct_nonzero}};
}

Json necessary_json(const NecessaryReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"clause", x.clause}, {"observed", x.observed}, {"required", x.required}, {"detail", x.detail}});
  }
  return {{"pass", r.pass}, {"violations", v}};
}

Json spec_json(const CaseSpec& c) {
  return {{"case", c.case_id}, {"n", c.n},   {"q", c.q}, {"q1", c.q1}, {"qC", c.qC},
          {"k", c.k},          {"k1", c.k1}, {"kC", c.kC}, {"m", c.m},   {"r", c.r},
          {"s", c.s},          {"delta", c.delta}, {"construction_unsupported", c.construction_unsupported}};
}

CaseSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("a case spec is a flat JSON object");
  CaseSpec c;
  c.case_id = int_field(j, "case", 0);
  c.n = int_field(j, "n", 0);
  c.q = int_field(j, "q", 0);
  c.q1 = int_field(j, "q1", 0);
  c.qC = int_field(j, "qC", 0);
  c.k = int_field(j, "k", 0);
  c.k1 = int_field(j, "k1", 0);
  c.kC = int_field(j, "kC", 0);
  c.m = int_field(j, "m", 0);
  c.r = int_field(j, "r", 0);
  c.s = int_field(j, "s", 0);
  c.delta = int_field(j, "delta", 0);
  c.construction_unsupported = c.delta % 2 != 0;
  c.validate();
  return c;
}

namespace {

Json slot_json(const Slot& s) {
  Json j{{"kind", to_string(s.kind)}, {"index", s.index}};
  if (s.value.is_real()) j["value"] = to_json(s.value.re);
  else j["value"] = pair_json(s.value);
  return j;
}

Json object_json(const RatPoly& p, int n, Mode mode) {
  return mode == Mode::polynomial ? tagged_json(p, n) : exp_json(p);
}

}  // namespace

Json certificate_json(const RealizationCertificate& c) {
  Json slots = Json::array();
  for (const auto& s : c.plan.slots) slots.push_back(slot_json(s));
  Json plan{{"base_l", c.plan.base_l},
            {"base_mu", c.plan.base_mu},
            {"magnitude", to_json(c.plan.magnitude)},
            {"seed", c.plan.seed},
            {"slots", slots},
            {"target", poly_json(c.plan.target)},
            {"free_factor", poly_json(c.plan.free_factor)}};
  Json trace{{"round", c.trace.round},
             {"index", c.trace.index},
             {"candidates", c.trace.candidates},
             {"fallback", c.trace.fallback}};
  return {{"spec", spec_json(c.spec)},
          {"mode", to_string(c.mode)},
          {"n", c.n},
          {"object", object_json(c.object, c.n, c.mode)},
          {"factors", factors_json(c.factors)},
          {"signature", signature_json(c.signature)},
          {"plan", plan},
          {"trace", trace}};
}

Json outcome_json(const RealizeOutcome& o) {
  Json j{{"spec", spec_json(o.spec)}, {"status", to_string(o.status)}, {"candidates", o.candidates}};
  if (!o.message.empty()) j["message"] = o.message;
  if (o.certificate) j["certificate"] = certificate_json(*o.certificate);
  return j;
}

Json summary_json(const RealizeSummary& s, bool with_certificates) {
  Json outcomes = Json::array();
  for (const auto& o : s.outcomes) {
    Json j = outcome_json(o);
    if (!with_certificates) j.erase("certificate");
    outcomes.push_back(j);
  }
  return {{"n", s.n},
          {"mode", to_string(s.mode)},
          {"specs", s.outcomes.size()},
          {"realized", s.realized},
          {"failed", s.failed},
          {"unsupported", s.unsupported},
          {"fallback_realized", s.fallback_realized},
          {"outcomes", outcomes}};
}

Json phi_row_json(const PhiRow& row) {
  Json eig = Json::array();
  for (const auto& e : row.eigen.eigenvalues) eig.push_back(to_json(e));
  Json j{{"n", row.n},
         {"mode", to_string(row.mode)},
         {"eigenvalues", eig},
         {"characteristic", poly_json(row.eigen.characteristic)},
         {"all_rational", row.all_rational()},
         {"all_positive", row.all_positive()},
         {"invertible", row.invertible()},
         {"affinity_samples", row.affinity_samples},
         {"affinity_mismatches", row.affinity_mismatches}};
  if (!row.eigen.note.empty()) j["note"] = row.eigen.note;
  return j;
}

Json law_json(const LawResult& r) {
  Json j{{"name", r.name}, {"pass", r.passed()}, {"cases", r.cases}, {"failures", r.failures}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json error_json(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

std::string spec_csv_header() {
  return "case,n,q,q1,qC,k,k1,kC,m,r,s,delta,unsupported,roots_pos,roots_zero,roots_neg,roots_pairs,"
         "neg_a_pos,neg_a_zero,neg_a_neg,neg_a_pairs";
}

std::string spec_csv_row(const CaseSpec& c) {
  const SignVector8 v = c.expected();
  std::ostringstream os;
  os << c.case_id << ',' << c.n << ',' << c.q << ',' << c.q1 << ',' << c.qC << ',' << c.k << ',' << c.k1 << ','
     << c.kC << ',' << c.m << ',' << c.r << ',' << c.s << ',' << c.delta << ',' << (c.construction_unsupported ? 1 : 0)
     << ',' << v.roots.pos << ',' << v.roots.zero << ',' << v.roots.neg << ',' << v.roots.complex_pairs << ','
     << v.neg_a.pos << ',' << v.neg_a.zero << ',' << v.neg_a.neg << ',' << v.neg_a.complex_pairs;
  return os.str();
}

std::string summary_csv(const RealizeSummary& s) {
  std::ostringstream os;
  os << "mode," << spec_csv_header() << ",status,round,index,candidates,fallback\n";
  for (const auto& o : s.outcomes) {
    os << to_string(s.mode) << ',' << spec_csv_row(o.spec) << ',' << to_string(o.status) << ',';
    if (o.certificate) {
      const auto& t = o.certificate->trace;
      os << t.round << ',' << t.index << ',' << t.candidates << ',' << (t.fallback ? 1 : 0);
    } else {
      os << ",," << o.candidates << ',';
    }
    os << '\n';
  }
  return os.str();
}

std::string phi_csv(const std::vector<PhiRow>& rows) {
  std::ostringstream os;
  os << "n,mode,eigenvalues,all_rational,all_positive,invertible,affinity_samples,affinity_mismatches\n";
  for (const auto& r : rows) {
    std::string eig;
    for (const auto& e : r.eigen.eigenvalues) eig += (eig.empty() ? "" : " ") + to_string(e);
    os << r.n << ',' << to_string(r.mode) << ',' << eig << ',' << r.all_rational() << ',' << r.all_positive() << ','
       << r.invertible() << ',' << r.affinity_samples << ',' << r.affinity_mismatches << '\n';
  }
  return os.str();
}

}  // namespace szego
