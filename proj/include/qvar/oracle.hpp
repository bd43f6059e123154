#pragma once

#include <string>
#include <vector>

#include "qvar/model.hpp"
#include "qvar/order.hpp"
#include "qvar/spaces.hpp"

// Brute-force ground truth. Everything here unfolds definitions with direct
// loops over the raw data and never calls into the solvers.
namespace qvar::oracle {

/// z with no y != z satisfying φ(y) + d(y,z) <= φ(z) for all d.
PointList enumerate_minimal(const FQuasiGauge& gauge, const Objective& phi);

/// z with f(z) + d(z,x0) <= f(x0) for all d, and for every x != z some d with
/// f(z) < f(x) + d(x,z).
PointList enumerate_ekeland(const FQuasiGauge& gauge, const Objective& f, PointIndex x0);

/// z with f(z) = inf f(X).
PointList enumerate_takahashi(const Objective& f);

/// z ∈ F(z) (weak) or F(z) = {z} (strong).
PointList enumerate_caristi_fixed(const SetValuedMap& F, CaristiVariant variant);

/// z with F(x0,z) + d(z,x0) <= 0 for all d, and for every x != z some d with
/// F(z,x) + d(x,z) > 0.
PointList enumerate_oettli_thera(const FQuasiGauge& gauge, const Bivariate& F, PointIndex x0);

/// The data a certificate refers to by name.
struct CertificateContext {
  const FQuasiGauge* gauge = nullptr;
  const Objective* objective = nullptr;
  const SetValuedMap* map = nullptr;
  const Bivariate* bivariate = nullptr;
};

struct VerifyResult {
  bool pass = false;
  std::vector<std::string> failures;
  std::size_t inequalities = 0;
};

/// Re-evaluates every inequality of the certificate from the raw data, checks
/// that the lists are complete and that the principle's own conclusion holds.
/// Throws InvalidArgument when a required object is missing.
VerifyResult verify_certificate(const CertificateContext& context, const Certificate& cert);

}  // namespace qvar::oracle
