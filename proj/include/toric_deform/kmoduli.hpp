#pragma once

#include <cstddef>

#include "toric_deform/errors.hpp"
#include "toric_deform/lattice.hpp"
#include "toric_deform/minkowski.hpp"
#include "toric_deform/polytope3.hpp"
#include "toric_deform/rational.hpp"

namespace toric_deform::fano {

/// Lower bounds only; exact branch counts are not claimed.
struct BranchBounds {
  BigInt decomposition_count;
  BigInt stack_lower;
  BigInt space_lower;
  BigInt aut_divisor;
};

/// The Segre product of graded algebras with a and b minimal primes has a*b.
inline BigInt segre_minimal_prime_count(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) throw InvalidArgument("minimal prime counts must be positive");
  return a * b;
}

/// D maximal decompositions of F give D^2 local branches of the stack and,
/// after dividing by the automorphism group, at least max(1, D^2 / aut).
inline BranchBounds kmoduli_branch_bounds(const geometry::LatticePolygon& f, const BigInt& aut_divisor = 4,
                                          std::size_t cap = geometry::kDefaultCopyCap) {
  if (!geometry::is_unit_edge(f)) throw NotUnitEdge();
  if (aut_divisor < 1) throw InvalidArgument("aut divisor must be at least 1");
  BranchBounds b;
  b.decomposition_count = BigInt(static_cast<unsigned long>(geometry::enumerate_maximal_decompositions(f, cap).size()));
  b.aut_divisor = aut_divisor;
  b.stack_lower = segre_minimal_prime_count(b.decomposition_count, b.decomposition_count);
  BigInt q = b.stack_lower / aut_divisor;
  b.space_lower = q < 1 ? BigInt(1) : q;
  return b;
}

struct FamilyBranchReport {
  unsigned r = 0;
  geometry::LatticePolygon polygon;
  std::size_t vertex_count = 0;
  bool unit_edges = false;
  bool centrally_symmetric = false;
  BranchBounds bounds;
  /// 2^(r+1), 2^(2r+2), 2^(2r).
  BigInt d_target, stack_target, space_target;
  LatticePolytope3 p_f;
  bool fano = false;
  bool prism = false;
  bool reflexive = false;

  bool vertex_count_ok() const { return vertex_count == 6 * static_cast<std::size_t>(r) + 6; }
  bool bounds_ok() const {
    return bounds.decomposition_count >= d_target && bounds.stack_lower >= stack_target &&
           bounds.space_lower >= space_target;
  }
  bool all_ok() const { return vertex_count_ok() && unit_edges && centrally_symmetric && bounds_ok() && fano && prism; }
};

inline FamilyBranchReport family_branch_report(unsigned r, const BigInt& aut_divisor = 4,
                                               std::size_t cap = geometry::kDefaultCopyCap) {
  if (6 * static_cast<std::size_t>(r) + 6 > cap) throw EnumerationCapExceeded(6 * static_cast<std::size_t>(r) + 6, cap);
  auto f = geometry::build_hexagon_family(r);
  auto p = build_P_F(f);
  BigInt one = 1;
  FamilyBranchReport rep{r,
                         f,
                         f.size(),
                         geometry::is_unit_edge(f),
                         geometry::is_centrally_symmetric(f),
                         kmoduli_branch_bounds(f, aut_divisor, cap),
                         BigInt(one << (r + 1)),
                         BigInt(one << (2 * r + 2)),
                         BigInt(one << (2 * r)),
                         p,
                         is_fano(p),
                         is_prism_over(p, f),
                         is_reflexive(p)};
  return rep;
}

}  // namespace toric_deform::fano
