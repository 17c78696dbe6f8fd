#pragma once

// Sign signatures of P/(x+1) (or R) and of the factor multiset, the
// necessary conditions linking them, and the admissible case tuples.

#include "szego/decomposition.hpp"

#include <string>
#include <vector>

namespace szego {

struct RootSignature {
  int pos = 0;
  int zero = 0;  // multiplicity of the root 0
  int neg = 0;
  int complex_pairs = 0;
  bool distinct_nonzero = true;

  [[nodiscard]] int degree() const { return pos + zero + neg + 2 * complex_pairs; }
  [[nodiscard]] int real_count() const { return pos + zero + neg; }
  [[nodiscard]] RootSignature mirrored() const { return {neg, zero, pos, complex_pairs, distinct_nonzero}; }
  [[nodiscard]] bool same_counts(const RootSignature& o) const {
    return pos == o.pos && zero == o.zero && neg == o.neg && complex_pairs == o.complex_pairs;
  }
};

/// roots: of P/(x+1) or of R; neg_a: of the quantities -a_i.
struct SignVector8 {
  RootSignature roots;
  RootSignature neg_a;

  /// Signature of the a_i themselves.
  [[nodiscard]] RootSignature a() const { return neg_a.mirrored(); }
  [[nodiscard]] bool same_counts(const SignVector8& o) const {
    return roots.same_counts(o.roots) && neg_a.same_counts(o.neg_a);
  }
};

RootSignature classify_roots(const RatPoly& p);
/// Signature of the -a_i of a factor multiset (finite a_i only).
RootSignature classify_neg_a(const FactorMultiset& f);

struct Analysis {
  FactorMultiset factors;
  SignVector8 sig;
};
Analysis analyze(const RatPoly& p, int n, Mode mode);
SignVector8 signature_pair(const RatPoly& p, int n, Mode mode);

/// b_j = -j/(n-j) (polynomial) or -j (exponential).
Rational special_value(int j, int n, Mode mode);

struct Violation {
  std::string clause;
  long observed = 0;
  long required = 0;
  std::string detail;
};

struct NecessaryReport {
  bool pass = true;
  std::vector<Violation> violations;
};

/// Clauses 1a, 1b, 2a, 2b of the necessary conditions plus the sign clause:
/// (-1)^m equals (-1)^(number of real a_i below b_k), with multiplicity.
NecessaryReport check_necessary(const SignVector8& sig, const FactorMultiset& factors, int n, Mode mode);

struct CaseSpec {
  int case_id = 1;
  int n = 2;
  int q = 0, q1 = 0, qC = 0;
  int k = 0, k1 = 0, kC = 0;
  int m = 0, r = 0, s = 0;
  int delta = 0;
  bool construction_unsupported = false;

  [[nodiscard]] SignVector8 expected() const;
  /// Throws DomainError naming the first violated constraint.
  void validate() const;
  [[nodiscard]] std::string label() const;
  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

/// All admissible tuples, deduplicated by expected signature, in
/// lexicographic tuple order. `strict` restricts Cases 1 and 3 to k = 1.
std::vector<CaseSpec> enumerate_cases(int n, bool strict = false);

struct VerifyResult {
  bool pass = false;
  std::vector<std::string> problems;
  Analysis analysis;
};

VerifyResult verify_realization(const RatPoly& p, const CaseSpec& spec, int n, Mode mode);

}  // namespace szego
