#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "compmat/matrix.hpp"

namespace compmat {

/// LCP(q, A): find w, z ≥ 0 with w = q + Az and wᵀz = 0.
class LCPInstance {
 public:
  LCPInstance(Matrix a, Vector q);

  const Matrix& A() const { return a_; }
  const Vector& q() const { return q_; }
  std::size_t n() const { return q_.size(); }

 private:
  Matrix a_;
  Vector q_;
};

struct Solution {
  Vector w;
  Vector z;
  friend bool operator==(const Solution&, const Solution&) = default;
};

/// w = q + Az, w ≥ 0, z ≥ 0, w_i z_i = 0, all exact.
bool is_solution(const LCPInstance& inst, const Solution& sol);
/// Builds (q + Az, z) without checking feasibility.
Solution solution_from_z(const LCPInstance& inst, const Vector& z);

/// ψ(z) = z ∘ (Az).
Vector psi(const Matrix& a, const Vector& z);

/// f_A(z) = z⁺ − A z⁻.
Vector f_map(const Matrix& a, const Vector& z);

/// The u with f_A(u) = q for a solution (w, z): u_i = w_i where z_i = 0,
/// u_i = −z_i otherwise.
Vector f_preimage(const Solution& sol);

struct LemkeResult {
  enum class Status { Solved, RayTermination };
  Status status = Status::RayTermination;
  std::optional<Solution> solution;
  std::size_t pivots = 0;
};

/// Complementary pivoting with covering vector e and lexicographic ratio
/// test on [B⁻¹q | B⁻¹]. Returns z = 0 without pivoting when q ≥ 0.
LemkeResult lemke_solve(const LCPInstance& inst);

/// One maximal piece of SOL(q, A): the polyhedron
///   P_σ = {z : z_σ̄ = 0, z_σ ≥ 0, (q + Az)_σ = 0, (q + Az)_σ̄ ≥ 0},
/// kept only when no other P_τ strictly contains it.
struct SolutionPiece {
  IndexSet support;
  /// A vertex of the piece.
  Solution particular;
  /// A point in the relative interior of the piece.
  Solution relative_interior;
  /// Directions d spanning the piece's affine hull, each primitive integer,
  /// such that particular.z + Σ t_k d_k stays in the piece for small t_k ≥ 0.
  std::vector<Vector> ray_basis;
  /// True iff w is identical across the whole piece.
  bool w_constant = true;

  std::size_t dimension() const { return ray_basis.size(); }
};

/// z lies in the piece (z is a solution supported in σ with w_σ = 0).
bool piece_contains(const LCPInstance& inst, const SolutionPiece& piece, const Vector& z);

/// Every maximal piece, ordered by support (cardinality, then lexicographic).
/// The union of the pieces is SOL(q, A). Throws CapExceeded above the cap.
std::vector<SolutionPiece> enumerate_solutions(const LCPInstance& inst);

struct WSolutionSet {
  bool finite = true;
  /// Distinct w values, in piece order. Meaningful iff finite.
  std::vector<Vector> w_values;
  /// A piece along which w varies. Present iff not finite.
  std::optional<SolutionPiece> infinite_witness;
};

WSolutionSet w_solution_set(const LCPInstance& inst);

struct ViolatingPair {
  Vector w_alpha;
  Vector z_beta;
};

struct WUniquenessVerdict {
  IndexSet alpha;  // {i : w*_i > 0}
  IndexSet beta;   // {i : w*_i = 0}
  bool certificate_holds = false;
  std::optional<ViolatingPair> violating_pair;
};

/// Decides whether (w_α, z_β) = (0, 0) is the only solution of
///   A'_αα w_α + A'_αβ z_β = 0,  A'_βα w_α + A'_ββ z_β = 0,  w_α > 0,  z_β > 0
/// with A' the principal pivot transform on α. Throws InvalidSolution when
/// `sol` is not a solution and SingularPivot when A_αα is singular.
WUniquenessVerdict check_local_w_uniqueness(const LCPInstance& inst, const Solution& sol);

struct ConverseCheck {
  IndexSet alpha;
  IndexSet beta;
  /// (z_α, z_β) = 0 is the only solution of A_βα z_α + A_ββ z_β = 0.
  bool trivial_kernel = true;
  std::optional<Vector> witness;
};

/// Kernel test on the block row [A_βα A_ββ] with z_α = 0 imposed, as at a
/// solution with w*_α > 0; this reduces to ker A_ββ. β = ∅ is trivially true.
/// Throws InvalidSolution when `sol` is not a solution.
ConverseCheck check_w_uniqueness_converse(const LCPInstance& inst, const Solution& sol);

}  // namespace compmat
