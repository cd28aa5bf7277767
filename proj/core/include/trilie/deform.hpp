#pragma once

#include "trilie/cochain.hpp"
#include "trilie/report.hpp"
#include "trilie/twistop.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace trilie {

/// T_t = T + T_1 t + ... + T_k t^k.
struct DeformationFamily {
  TwistedOperator base;
  std::vector<LinearMap> terms;  // T_1 .. T_k

  [[nodiscard]] std::size_t order() const { return terms.size(); }
  /// T_i with T_0 = base map and T_i = 0 beyond the order.
  [[nodiscard]] LinearMap term(std::size_t i) const;
  /// Throws ShapeMismatch.
  void require_shapes() const;

  friend bool operator==(const DeformationFamily&, const DeformationFamily&) = default;
};

/// phi_t = Id + t ad_X + sum_{i>=2} phi_i t^i,
/// psi_t = Id + t (rho(X) + theta(X, T-)) + sum_{i>=2} psi_i t^i.
struct EquivalencePair {
  ZeroCochain x;
  std::vector<LinearMap> higher_phi;  // phi_2, phi_3, ...
  std::vector<LinearMap> higher_psi;  // psi_2, psi_3, ...

  friend bool operator==(const EquivalencePair&, const EquivalencePair&) = default;
};

/// Largest t-degree with nonvacuous content in the coefficient system:
/// max(3(k+1), 4k).
std::size_t max_order(std::size_t k);

/// Degree-s coefficient of
/// [T_t u, T_t v, T_t w] = T_t(rho(T_t u, T_t v)w + rho(T_t v, T_t w)u + rho(T_t w, T_t u)v + theta(T_t u, T_t v, T_t w))
/// on u<v<w.
Report order_conditions(const DeformationFamily& fam, std::size_t s);

/// The four conditions for T + t T_1 exactly as usually displayed
/// (identities printed_1 .. printed_4), evaluated literally.
Report printed_infinitesimal_conditions(const TwistedOperator& base, const LinearMap& t1);

/// Compares each displayed condition with the derived coefficient of the same
/// degree; a violation marks a tuple where the two residuals differ.
Report infinitesimal_cross_check(const TwistedOperator& base, const LinearMap& t1);

/// order_conditions for s = 1..4 on the one-term family. Disagreements found by
/// infinitesimal_cross_check are attached as notes.
Report infinitesimal_check(const TwistedOperator& base, const LinearMap& t1);

/// Canonical representative of the class of t1 modulo image(delta).
/// Throws ValidationFailure when t1 is not closed.
LinearMap one_cocycle_class(const TwistedOperator& base, const LinearMap& t1);

/// ad_X = [X, -] on g.
LinearMap ad_bivector(const ThreeLieAlgebra& g, const ZeroCochain& x);
/// rho(X) + theta(X, T-) on V.
LinearMap psi_linear_term(const TwistedOperator& op, const ZeroCochain& x);

/// Coefficient-wise morphism conditions between two families with the same
/// context, for polynomial phi_t, psi_t (index i is the t^i coefficient).
/// Checks degrees 0..truncation; identities are labelled like
/// "phi_morphism[t^2]".
Report morphism_coefficients(const DeformationFamily& fam, const DeformationFamily& fam2,
                             const std::vector<LinearMap>& phi, const std::vector<LinearMap>& psi,
                             std::size_t truncation);

/// Displayed equivalence conditions for infinitesimal deformations, literally.
Report printed_equivalence_conditions(const TwistedOperator& base, const LinearMap& t1, const LinearMap& t1_prime,
                                      const ZeroCochain& x);

/// All morphism coefficients and displayed conditions; when they hold, also
/// checks T_1 - T_1' = D(X) (identity "class_relation").
Report equivalence_check_infinitesimal(const TwistedOperator& base, const LinearMap& t1, const LinearMap& t1_prime,
                                       const ZeroCochain& x);

struct FormalResult {
  Report report;
  /// Coefficients of the deformed bracket on V, degree 0 upwards.
  std::vector<ThreeLieAlgebra> brackets;
  /// Filippov identity for the deformed bracket, coefficient-wise.
  Report bracket_report;
};

/// order_conditions for every s = 0..max_order(k).
FormalResult formal_check(const DeformationFamily& fam);

/// Default truncation: max(3(k+1), 3p, p+k) with p the degree of (phi_t, psi_t).
std::size_t default_equivalence_truncation(const DeformationFamily& fam, const DeformationFamily& fam2,
                                           const EquivalencePair& pair);

Report equivalence_check_formal(const DeformationFamily& fam, const DeformationFamily& fam2, const EquivalencePair& pair,
                                std::optional<std::size_t> truncation = std::nullopt);

}  // namespace trilie
