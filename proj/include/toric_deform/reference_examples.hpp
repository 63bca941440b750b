#pragma once

// Worked examples with known answers, runnable as a pass/fail ledger.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "toric_deform/altmann.hpp"
#include "toric_deform/graded.hpp"
#include "toric_deform/groebner.hpp"
#include "toric_deform/hulls.hpp"
#include "toric_deform/kmoduli.hpp"
#include "toric_deform/lattice.hpp"
#include "toric_deform/minkowski.hpp"
#include "toric_deform/polytope3.hpp"

namespace toric_deform::reference {

using geometry::LatticePolygon;
using geometry::LatticeVector2;

inline LatticePolygon polygon(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<LatticeVector2> v;
  for (const auto& [x, y] : pts) v.emplace_back(x, y);
  return LatticePolygon::from_points(std::move(v));
}

inline LatticePolygon unit_triangle() { return polygon({{0, 0}, {1, 0}, {0, 1}}); }
/// Hull C[x]/(x^2).
inline LatticePolygon square_zero_quadrilateral() { return polygon({{1, 1}, {-1, 0}, {-1, -1}, {0, -1}}); }
/// Hull C[[x,y]]/(x^2, xy).
inline LatticePolygon embedded_point_pentagon() { return polygon({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}}); }
/// Hull C[x,y,z]/(xy, xz).
inline LatticePolygon hexagon_h() { return geometry::hexagon_h(); }
/// Minkowski indecomposable; hull C[x,y]/(x^2, y^2).
inline LatticePolygon indecomposable_pentagon() { return polygon({{0, 0}, {1, 0}, {1, 1}, {0, 2}, {-2, 1}}); }
/// Hull C[x,y]/(x^2, xy, y^3).
inline LatticePolygon strange_pentagon() { return polygon({{0, 0}, {1, 0}, {2, 2}, {0, 3}, {-3, 2}}); }
/// Hexagon with two one-dimensional components.
inline LatticePolygon skew_hexagon() { return polygon({{0, 0}, {1, 0}, {1, 1}, {0, 2}, {-2, 3}, {-1, 1}}); }

/// Edge columns of the skew hexagon in the order p, q, x, y, z, closing edge.
inline std::vector<LatticeVector2> skew_hexagon_columns() {
  return {{1, 0}, {0, 1}, {-1, 1}, {-2, 1}, {1, -2}, {1, -1}};
}

inline algebra::Ideal skew_hexagon_k(const algebra::RingPtr& uvw) {
  return algebra::Ideal::parse(uvw, {"u*v", "u*w+v*w", "u^3", "v^2*w"});
}

/// I_F of the skew hexagon in p, q, x, y, z pushed to k[u,v,w] by the
/// coordinate change x = 4u+4v, y = u+w, z = 3u+4v+w.
inline algebra::Ideal skew_hexagon_image(const algebra::RingPtr& uvw) {
  auto p = hulls::altmann_from_edges(skew_hexagon_columns(), 5, 4,
                                     std::vector<std::string>{"p", "q", "x", "y", "z", "t"});
  auto s = algebra::LinearSubstitution::from_text(p.ring, uvw,
                                                  {{"p", "(4*u+4*v) + 2*(u+w) - (3*u+4*v+w)"},
                                                   {"q", "-(4*u+4*v) - (u+w) + 2*(3*u+4*v+w)"},
                                                   {"x", "4*u+4*v"},
                                                   {"y", "u+w"},
                                                   {"z", "3*u+4*v+w"}});
  return algebra::linear_substitute(p.ideal(), s);
}

struct LedgerEntry {
  std::string id;
  std::string anchor;
  std::function<bool()> check;
};

struct LedgerResult {
  std::string id;
  std::string anchor;
  bool passed = false;
  std::string error;
};

inline std::vector<LedgerEntry> ledger() {
  using namespace geometry;
  using namespace hulls;
  using namespace fano;
  auto uvw = [] { return algebra::make_ring({"u", "v", "w"}); };
  auto edge_set = [](const LatticePolygon& f) {
    auto e = edge_vectors(f).edges;
    return std::set<LatticeVector2>(e.begin(), e.end());
  };
  auto hilbert_prefix = [](const LatticePolygon& f, std::vector<long> want) {
    auto h = altmann_hilbert(f, static_cast<unsigned>(want.size() - 1));
    for (std::size_t d = 0; d < want.size(); ++d)
      if (h[d] != want[d]) return false;
    return true;
  };
  std::vector<LedgerEntry> l;
  auto add = [&](std::string id, std::string anchor, std::function<bool()> f) {
    l.push_back({std::move(id), std::move(anchor), std::move(f)});
  };

  add("skew-hexagon-ideal-equal", "skew hexagon: I_F after the coordinate change equals K",
      [=] { auto r = uvw(); return algebra::ideal_equal(skew_hexagon_image(r), skew_hexagon_k(r)); });
  add("skew-hexagon-primary-components", "skew hexagon: (u+v, v^2) ∩ (u, w) ∩ (u^3, v, w) = K", [=] {
    auto r = uvw();
    auto a = algebra::Ideal::parse(r, {"u+v", "v^2"});
    auto b = algebra::Ideal::parse(r, {"u", "w"});
    auto c = algebra::Ideal::parse(r, {"u^3", "v", "w"});
    return algebra::ideal_equal(algebra::ideal_intersect(algebra::ideal_intersect(a, b), c), skew_hexagon_k(r));
  });
  add("skew-hexagon-substitution", "skew hexagon: linear substitution of I_F lands in K", [=] {
    auto r = uvw();
    auto gb = algebra::buchberger(skew_hexagon_k(r));
    const auto image = skew_hexagon_image(r);
    for (const auto& g : image.generators())
      if (!algebra::is_member(g, gb)) return false;
    return true;
  });
  add("drop-edge-binomial-expansion", "drop-edge map sends alpha_k to sum C(k,l)(-y_1)^(k-l) alpha_l", [] {
    const auto edges = edge_vectors(skew_hexagon()).edges;
    auto from = altmann_from_edges(edges, 0, 5);
    auto to = altmann_from_edges(edges, 5, 5);
    auto phi = drop_edge_map(from, to);
    const auto y1 = algebra::Polynomial::variable(to.ring, "x1");
    for (unsigned k = 1; k <= 5; ++k) {
      algebra::Polynomial rhs(to.ring);
      for (unsigned l = 1; l <= k; ++l)
        rhs += algebra::Polynomial::constant(to.ring, BigRational(binomial(k, l))) * (-y1).pow(k - l) * to.alpha[l - 1];
      if (!(algebra::linear_substitute(from.alpha[k - 1], phi) == rhs)) return false;
    }
    return true;
  });
  add("pentagon-quadrics-independent", "pentagon: the two quadrics of J span a 2-dimensional J_2", [] {
    return algebra::graded_piece_dimension(reduce_linear_part(build_altmann_ideal(indecomposable_pentagon())).ideal, 2) ==
           2;
  });
  add("two-quadrics-monomial", "two quadrics: x^2, y^2 contain (x,y)^3", [] {
    auto r = algebra::make_ring({"x", "y"});
    return algebra::contains_cube_of_maximal_ideal(algebra::Polynomial::parse(r, "x^2"),
                                                   algebra::Polynomial::parse(r, "y^2"));
  });
  add("indecomposable-pentagon-coprime", "indecomposable pentagon: 2xy+y^2 and x^2-xy are coprime", [] {
    auto r = algebra::make_ring({"x", "y"});
    return algebra::contains_cube_of_maximal_ideal(algebra::Polynomial::parse(r, "2*x*y + y^2"),
                                                   algebra::Polynomial::parse(r, "x^2 - x*y"));
  });
  add("square-zero-quadrilateral-vertices", "quadrilateral with vertices (1,1),(-1,0),(-1,-1),(0,-1)",
      [] { return square_zero_quadrilateral().size() == 4; });
  add("hexagon-h-edges", "hexagon H: edges (1,0),(0,1),(-1,0),(-1,-1),(0,-1),(1,1)", [=] {
    auto e = edge_set(hexagon_h());
    return e == std::set<LatticeVector2>{{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 1}};
  });
  add("skew-hexagon-edges", "skew hexagon: columns (1,0),(0,1),(-1,1),(-2,1),(1,-2) close with (1,-1)", [=] {
    auto cols = skew_hexagon_columns();
    return edge_set(skew_hexagon()) == std::set<LatticeVector2>(cols.begin(), cols.end());
  });
  add("family-r1-unit-edge", "H + LH has unit edges", [] { return is_unit_edge(build_hexagon_family(1)); });
  add("two-triangles-sum-to-hexagon", "a sum of two triangles is H up to GL2(Z)", [] {
    auto s = minkowski_sum(polygon({{0, 0}, {1, 0}, {0, 1}}), polygon({{0, 0}, {-1, 0}, {0, -1}}));
    return s.size() == 6 && apply_unimodular(UnimodularMap(1, -1, 0, 1), hexagon_h()) == s;
  });
  add("hexagon-h-two-decompositions", "H has two maximal Minkowski decompositions", [] {
    auto d = enumerate_maximal_decompositions(hexagon_h());
    return d.size() == 2 && std::set<std::size_t>{d[0].summands.size(), d[1].summands.size()} ==
                                std::set<std::size_t>{2, 3};
  });
  add("family-r1-shape", "family r=1: 12 vertices, unit edges", [] {
    auto f = build_hexagon_family(1);
    return f.size() == 12 && is_unit_edge(f);
  });
  add("family-r2-shape", "family r=2: 18 vertices, at least 8 decompositions", [] {
    auto f = build_hexagon_family(2);
    return f.size() == 18 && enumerate_maximal_decompositions(f).size() >= 8;
  });
  add("iterates-disjoint", "L^m and L^n direction sets are disjoint for m != n <= 10", [] {
    auto r = check_iterate_disjointness(10);
    return r.disjoint && r.l_is_identity_mod_2;
  });
  add("triangle-algebra", "triangle: I_F generated by x1, x2, so A_F = C",
      [=] { return hilbert_prefix(unit_triangle(), {1, 0, 0, 0}); });
  add("square-zero-quadrilateral-algebra", "quadrilateral: A_F = C[x]/(x^2)",
      [=] { return hilbert_prefix(square_zero_quadrilateral(), {1, 1, 0, 0, 0}); });
  add("hexagon-h-algebra", "hexagon H: A_F = C[x,y,z]/(xy, xz)",
      [=] { return hilbert_prefix(hexagon_h(), {1, 3, 4, 5, 6}); });
  add("embedded-point-pentagon-case", "pentagon (1,0),(0,1),(-1,1),(-1,0),(0,-1): hull C[[x,y]]/(x^2, xy)",
      [] { return classify(embedded_point_pentagon()).tag == CaseTag::Case2c; });
  add("indecomposable-pentagon-case", "indecomposable pentagon: hull C[x,y]/(x^2, y^2)",
      [] { return classify(indecomposable_pentagon()).tag == CaseTag::Case2a; });
  add("strange-pentagon-case", "strange pentagon: hull C[x,y]/(x^2, xy, y^3)",
      [] { return classify(strange_pentagon()).tag == CaseTag::Case2b; });
  add("skew-hexagon-report", "skew hexagon: two 1-dimensional components, embedding dimension 3, H(2) = 4", [] {
    auto r = hull_report(skew_hexagon());
    return r.components.size() == 2 && r.components[0].dimension == 1 && r.components[1].dimension == 1 &&
           r.embedding_dimension == 3 && r.hilbert[1] == 3 && r.hilbert[2] == 4;
  });
  add("family-r1-report", "family r=1: embedding dimension 9, at least 4 components", [] {
    auto r = hull_report(build_hexagon_family(1), 2);
    return r.embedding_dimension == 9 && r.components.size() >= 4;
  });
  add("obstruction-d2", "(d^2+d-4)/2 at d=2 is 1", [] { return verify_murphy_obstruction(2).required_h2 == 1; });
  add("obstruction-d3", "(d^2+d-4)/2 at d=3 is 4", [] { return verify_murphy_obstruction(3).required_h2 == 4; });
  add("hj-3-2", "[2,2] = 3/2", [] { return hj_expansion(3, 2) == std::vector<BigInt>{2, 2}; });
  add("hj-5-2", "[3,2] = 5/2", [] { return hj_expansion(5, 2) == std::vector<BigInt>{3, 2}; });
  add("hj-5-3", "[2,3] = 5/3", [] { return hj_expansion(5, 3) == std::vector<BigInt>{2, 3}; });
  add("cyclic-3-2", "1/3(1,2), the A2 singularity: hull C[[x,y]]", [] { return cyclic_quotient_t1(3, 2) == 2; });
  add("cyclic-5-3", "1/5(1,3): hull C[[x,y,z]]", [] { return cyclic_quotient_t1(5, 3) == 3; });
  add("cyclic-5-2", "1/5(1,2) is isomorphic to 1/5(1,3)", [] { return cyclic_quotient_t1(5, 2) == 3; });
  add("rigid-dim4", "isolated Q-Gorenstein toric singularities of dimension >= 4 are rigid",
      [] { return rigidity_oracle(4, true); });
  add("rigid-non-gorenstein-3fold", "non-Gorenstein toric 3-fold singularities are rigid",
      [] { return rigidity_oracle(3, false); });
  add("hexagon-prism", "P is a prism over the centrally symmetric hexagon", [] {
    auto p = build_P_F(hexagon_h());
    for (const auto& v : p.vertices())
      if (v.z != 1 && v.z != -1) return false;
    return is_prism_over(p, hexagon_h());
  });
  add("triangle-fano", "P_F of a triangle is a Fano polytope", [] { return is_fano(build_P_F(unit_triangle())); });
  add("hexagon-prism-symmetric", "H centrally symmetric, so P is a prism", [] {
    return is_centrally_symmetric(hexagon_h()) && is_prism_over(build_P_F(hexagon_h()), hexagon_h());
  });
  add("segre-2-2", "Segre product of two algebras with 2 minimal primes has 4",
      [] { return segre_minimal_prime_count(2, 2) == 4; });
  add("segre-4-4", "Segre product at r=1: 16 minimal primes", [] { return segre_minimal_prime_count(4, 4) == 16; });
  add("bounds-hexagon", "H: 4 stack branches, 1 space branch", [] {
    auto b = kmoduli_branch_bounds(hexagon_h());
    return b.decomposition_count == 2 && b.stack_lower == 4 && b.space_lower == 1;
  });
  add("bounds-family-r1", "family r=1: at least 16 stack branches and 4 space branches", [] {
    auto b = kmoduli_branch_bounds(build_hexagon_family(1));
    return b.decomposition_count >= 4 && b.stack_lower >= 16 && b.space_lower >= 4;
  });
  for (unsigned r = 0; r <= 2; ++r)
    add("family-report-r" + std::to_string(r), "family r=" + std::to_string(r) + ": 2^(r+1), 2^(2r+2), 2^(2r) bounds",
        [r] {
          auto rep = family_branch_report(r);
          return rep.all_ok() && (r != 0 || (rep.bounds.decomposition_count == 2 && rep.bounds.stack_lower == 4 &&
                                             rep.bounds.space_lower == 1));
        });
  add("cli-classify-strange", "classify the strange pentagon: Case2b",
      [] { return classify(strange_pentagon()).to_string() == "Case2b"; });
  add("cli-family-r1", "family r=1: stack lower bound at least 16",
      [] { return family_branch_report(1).bounds.stack_lower >= 16; });
  add("cli-cyclic-5-3", "cyclic quotient 1/5(1,3): 3", [] {
    return cyclic_quotient_t1(5, 3) == 3 && classify_cyclic_quotient(5, 3).embedding_dimension == 3;
  });
  return l;
}

inline std::vector<LedgerResult> run_ledger() {
  std::vector<LedgerResult> out;
  for (const auto& e : ledger()) {
    LedgerResult r{e.id, e.anchor, false, {}};
    try {
      r.passed = e.check();
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace toric_deform::reference
