#pragma once

// Mass-concentration certificates.
//
// A certificate is a chain of sheaf pairs (F_k, G_k) together with the
// constructible functions chi(F_k), chi(G_k) and a declared upper bound on
// d_C(F_k, G_k). Consecutive steps share their functions, so any metric
// delta on constructible functions that is controlled by d_C through some
// Phi with Phi(t) -> 0 satisfies delta(source, target) <= sum_k Phi(bound_k).
// Since the step count does not depend on epsilon, letting epsilon -> 0
// forces delta(source, target) = 0.

#include <stdexcept>
#include <string>
#include <vector>

#include "eulercert/distance.hpp"
#include "eulercert/flags.hpp"

namespace eulercert {

struct Settings {
  MetricConfig metric;
  EqualityOptions equality;
};

struct CertificateStep {
  SheafSum f;
  SheafSum g;
  Rational declared_bound;
  ConstructibleFunction chi_f;
  ConstructibleFunction chi_g;

  CertificateStep reversed() const { return {g, f, declared_bound, chi_g, chi_f}; }
};

struct Certificate {
  Rational epsilon;
  ConstructibleFunction source;
  ConstructibleFunction target;
  std::vector<CertificateStep> steps;
};

class IntegralMismatch : public std::invalid_argument {
 public:
  IntegralMismatch(Coefficient lhs, Coefficient rhs);
  Coefficient lhs, rhs;
};

// Number of homothety steps for a support of the given reach so that the
// flag's vanishing bound reach / (2n) stays below epsilon.
int flag_steps(const Real& reach, const Rational& epsilon);

// One step from phi to sum_a C_a 1_{x_a}: F is the direct sum over terms of
// the graded flag sheaves S(X_a)^{|C_a|}[(1 - sgn C_a)/2], G the matching
// skyscrapers. `basepoints` follow the terms of normalize(phi). The declared
// bound is epsilon (0 when the recomputed bound is exactly 0).
CertificateStep concentrate_basepoints(const ConstructibleFunction& phi, const std::vector<Point>& basepoints,
                                       const Rational& epsilon, const Settings& settings);

// Three steps from phi to (integral phi) 1_{x}, through the segments
// [x_a, x] joining each term's vertex centroid x_a to x.
Certificate concentrate_to_point(const ConstructibleFunction& phi, const Point& x, const Rational& epsilon,
                                 const Settings& settings);

// Six steps from phi to psi through (integral) 1_{0}. Throws IntegralMismatch
// when the Euler integrals differ (then no finite chain exists).
Certificate link(const ConstructibleFunction& phi, const ConstructibleFunction& psi, const Rational& epsilon,
                 const Settings& settings);

Certificate reversed(const Certificate& c);

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Re-derives every claim of the certificate from its embedded geometry.
VerifyReport verify(const Certificate& c, const Settings& settings);
// Same checks, steps checked one after another.
VerifyReport verify_serial(const Certificate& c, const Settings& settings);

enum class MetricKind { L1, Sup, IntegralGap };

MetricKind parse_metric(const std::string& name);

// L1: integral of |phi - psi| (Lebesgue); Sup: max |phi - psi|; IntegralGap:
// |integral phi - integral psi|. L1 and Sup need dimension <= 2.
Real metric_eval(MetricKind kind, const ConstructibleFunction& phi, const ConstructibleFunction& psi);

struct ProbeRow {
  Rational epsilon;
  Rational dc_bound;  // largest declared step bound of the certificate
  Real delta;         // metric between the certificate's endpoints
};

std::vector<ProbeRow> probe_metric(MetricKind kind, const ConstructibleFunction& phi, const Point& x,
                                   const std::vector<Rational>& schedule, const Settings& settings);

std::string probe_csv(const std::vector<ProbeRow>& rows);

}  // namespace eulercert
