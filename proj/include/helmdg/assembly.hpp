#pragma once

#include <functional>
#include <vector>

#include "helmdg/mesh.hpp"
#include "helmdg/sparse.hpp"

namespace helmdg {

struct PenaltyValues {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  double beta1 = 0.0;
};

/// Default penalties: γ1 = 0.1, γ0 = (k² h_e)^{2/3} γ1^{1/3}, β1 = 1.
/// Throws std::invalid_argument unless k > 0 and h_e > 0.
PenaltyValues penalty_defaults(double k, double h_e);

/// Per-edge penalty rule. γ1 and β1 are constants; γ0 is produced from the
/// edge length by `gamma0_of`.
struct PenaltyParams {
  double gamma1 = 0.1;
  double beta1 = 1.0;
  std::function<double(double h_e)> gamma0_of;

  /// The default rule bound to wave number k.
  static PenaltyParams defaults(double k);
  /// Constant γ0 on every edge.
  static PenaltyParams constant(double gamma0, double gamma1, double beta1);

  /// Throws std::invalid_argument if any produced value is not strictly positive.
  PenaltyValues at(double h_e) const;
};

using VolumeSource = std::function<Complex(Point2 x)>;
/// Boundary data may depend on the outward normal (e.g. ∂/∂ν of a plane wave).
using BoundarySource = std::function<Complex(Point2 x, Point2 normal)>;

struct ProblemParams {
  double k = 5.0;
  int p = 1;
  PenaltyParams penalties = PenaltyParams::defaults(5.0);
  VolumeSource f;
  BoundarySource g;

  /// k, p and the default penalty rule; no sources.
  static ProblemParams defaults(double k, int p);
};

/// f = 0 and g = (∂/∂ν + ik) e^{ik x·d} on Γ1 for the plane wave travelling
/// in direction `direction` (unit vector).
void set_planewave_sources(ProblemParams& params, Point2 direction = {1.0, 0.0});

/// Individual pieces of the sesquilinear form, each assembled with unit
/// weight (penalty weights γ0/h_e, γ1 h_e, β1/h_e are part of the jump terms).
enum class FormTerm {
  Gradient,      // Σ_K (∇u, ∇v)_K
  Consistency,   // −Σ_{E^ID} ⟨{∂u/∂ν}, [v]⟩ + ⟨[u], {∂v/∂ν}⟩
  Mass,          // (u, v)_D
  RobinMass,     // ⟨u, v⟩_Γ1
  JumpValue,     // J0
  JumpNormal,    // J1
  JumpTangent,   // L1
};

/// Global matrix A, [A]_{ij} = a_h(φ_j, φ_i), with element-major DOFs
/// (triangle t owns rows t·n_basis .. t·n_basis + n_basis - 1).
/// Local blocks are computed in parallel and summed in a fixed order, so the
/// result is bit-identical to assemble_serial().
SparseComplexMatrix assemble(const Mesh& mesh, const ProblemParams& params);

/// Single-threaded reference for assemble().
SparseComplexMatrix assemble_serial(const Mesh& mesh, const ProblemParams& params);

/// One term of the form (real valued, stored as complex). A equals
/// Gradient + Consistency − k²·Mass + i(k·RobinMass + JumpValue + JumpNormal + JumpTangent).
SparseComplexMatrix assemble_term(const Mesh& mesh, const ProblemParams& params, FormTerm term);

/// Assembly with explicit quadrature exactness (volume and edge); the
/// default is 2p + 2 for both.
SparseComplexMatrix assemble_with_quadrature(const Mesh& mesh, const ProblemParams& params,
                                             int element_exactness, int edge_exactness);

struct RhsVector {
  std::vector<Complex> values;
  /// Set when neither f nor g was supplied; values are then all zero.
  bool sources_missing = false;
};

/// b_i = (f, φ_i)_D + ⟨g, φ_i⟩_Γ1.
RhsVector assemble_rhs(const Mesh& mesh, const ProblemParams& params);

}  // namespace helmdg
