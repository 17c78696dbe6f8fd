#pragma once

// Constructive realization of admissible case tuples: base compositions,
// conjugate-couple factors, and a verified deterministic search.

#include "szego/composition.hpp"
#include "szego/signature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace szego {

/// K_0^{*l} * K_{b_1} * ... * K_{b_mu} at degree n, monic. Throws DomainError
/// unless l >= 1, l + mu <= n and the expected root structure holds exactly:
/// (mu+1)-fold root at 0, (n-mu-l)-fold root at -1, l-1 simple roots in (-1, 0).
RatPoly base_composition_pol(int l, int mu, int n);
/// e^x Y with Y = (x d/dx + x)^{l-1} x^{mu+1}: (mu+1)-fold root at 0 and l-1
/// simple negative roots, asserted exactly.
ExpForm base_composition_exp(int l, int mu);

/// K_{1+eps} * K_{1+conj(eps)} at degree n for eps in 0 < 2 Re < Im.
RatPoly couple_factor_pol(const GaussRational& eps, int n);
/// Y with e^x (1 + eps x) * e^x (1 + conj(eps) x) = e^x Y, eps nonreal.
RatPoly couple_factor_exp(const GaussRational& eps);

/// The couple parameter of ordinal i at round magnitude s: s^(i+1) (1/8 + u/4 + I), I = sqrt(-1).
/// For u in [0, 1) it lies in the sector 0 < 2 Re < Im.
GaussRational couple_epsilon(const Rational& s, int i, const Rational& u);

enum class SlotKind { keep_zero, b_fixed, positive, complex_pair, couple, b_shift };

std::string to_string(SlotKind kind);

/// One factor template. Pairs (complex_pair, couple) stand for two a_i.
struct Slot {
  SlotKind kind = SlotKind::keep_zero;
  int index = 0;        // b index for b_fixed / b_shift, ordinal otherwise
  GaussRational value;  // the a_i (upper conjugate for pairs); the unshifted b_j for b_shift
};

struct PerturbationPlan {
  int base_l = 0;
  int base_mu = 0;
  std::vector<Slot> slots;
  RatPoly target;       // prescribed cluster of roots near 0
  RatPoly free_factor;  // solved monic factor whose roots are the b-shifted a_i
  Rational magnitude;
  std::uint64_t seed = 0;

  [[nodiscard]] int slot_count() const;
};

struct SearchConfig {
  std::uint64_t seed = 1;
  int rounds = 64;
  int resamples = 32;
  bool parallel = true;
};

struct SearchTrace {
  int round = -1;
  int index = -1;
  long candidates = 0;
  Rational magnitude;
  bool fallback = false;
  std::string best_failure;
};

struct RealizationCertificate {
  CaseSpec spec;
  Mode mode = Mode::polynomial;
  int n = 0;
  RatPoly object;
  FactorMultiset factors;
  SignVector8 signature;
  PerturbationPlan plan;
  SearchTrace trace;
};

/// Thrown when the search budget is exhausted or an odd-delta spec stays
/// unrealized.
class RealizationError : public DomainError {
 public:
  RealizationError(const std::string& what, bool unsupported, SearchTrace trace)
      : DomainError(what), unsupported_(unsupported), trace_(std::move(trace)) {}
  [[nodiscard]] bool unsupported() const { return unsupported_; }
  [[nodiscard]] const SearchTrace& trace() const { return trace_; }

 private:
  bool unsupported_;
  SearchTrace trace_;
};

/// Builds and verifies one candidate of the round/index schedule; nullopt on
/// rejection. Exposed for the determinism and benchmark checks.
std::optional<RealizationCertificate> try_candidate(const CaseSpec& spec, Mode mode, const SearchConfig& cfg, int round,
                                                    int index, std::string* why = nullptr);

RealizationCertificate realize_case(const CaseSpec& spec, Mode mode, const SearchConfig& cfg = {});
/// Re-derives everything from cert.object alone.
VerifyResult reverify(const RealizationCertificate& cert);

enum class RealizeStatus { realized, failed, unsupported };
std::string to_string(RealizeStatus s);

struct RealizeOutcome {
  CaseSpec spec;
  RealizeStatus status = RealizeStatus::failed;
  std::optional<RealizationCertificate> certificate;
  std::string message;
  long candidates = 0;
};

struct RealizeSummary {
  int n = 0;
  Mode mode = Mode::polynomial;
  std::vector<RealizeOutcome> outcomes;
  int realized = 0;
  int failed = 0;
  int unsupported = 0;
  int fallback_realized = 0;
};

RealizeSummary realize_all(int n, Mode mode, const SearchConfig& cfg = {});

}  // namespace szego
