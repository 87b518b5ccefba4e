#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "toric/cellcomplex.hpp"

using namespace toric;

namespace {

std::vector<Int> ints(std::vector<int> v) {
  std::vector<Int> out;
  for (int x : v) out.push_back(x);
  return out;
}

std::set<Cone> masked_cells(const CellComplexP& p, const SubcomplexMask& m) {
  std::set<Cone> out;
  for (size_t i = 0; i < p.cells.size(); ++i)
    if (m[i]) out.insert(p.cells[i]);
  return out;
}

bool is_point_cohomology(const std::vector<Int>& h, int at) {
  for (size_t d = 0; d < h.size(); ++d)
    if (h[d] != (int(d) == at ? 1 : 0)) return false;
  return true;
}

Fan octagon() {
  // the del Pezzo-like surface whose rays step around all eight half-axes
  // and diagonals
  Fan f;
  f.n = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1},
            {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  f.max_cones = {{0, 4}, {1, 4}, {1, 5}, {2, 5},
                 {2, 6}, {3, 6}, {3, 7}, {0, 7}};
  return f;
}

}  // namespace

TEST_CASE("building the complex") {
  SUBCASE("f-vectors of the standard surfaces") {
    CHECK(f_vector(build_P(projective_space(2))) == ints({3, 3, 1}));
    CHECK(f_vector(build_P(hirzebruch(1))) == ints({4, 4, 1}));
    CHECK(f_vector(build_P(octagon())) == ints({8, 8, 1}));
    CHECK(f_vector(build_P(projective_space(3))) == ints({4, 6, 4, 1}));
  }
  SUBCASE("cells are graded and indexed") {
    CellComplexP p = build_P(hirzebruch(1));
    CHECK(p.cells.size() == 9);
    CHECK(p.cell_dim[0] == 0);
    CHECK(p.cells[p.cell_index({})] == Cone{});
    CHECK(p.cell_dim[p.cell_index({})] == 2);
    CHECK(p.cell_dim[p.cell_index({1})] == 1);
    CHECK(p.cell_index({1, 3}) == -1);  // not a cone of this fan
  }
  SUBCASE("non-simplicial fans are rejected") {
    Fan f;
    f.n = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.max_cones = {{0, 1, 2}};
    CHECK_THROWS_AS(build_P(f), NotSimplicialError);
  }
  SUBCASE("threefold edge cells") {
    Fan f = star_subdivision(product_fan(hirzebruch(1), projective_space(1)),
                             {1, 4});
    CellComplexP p = build_P(f);
    CHECK(f_vector(p) == ints({10, 15, 7, 1}));
    std::set<Cone> edges;
    for (size_t i = 0; i < p.cells.size(); ++i)
      if (p.cell_dim[i] == 1) edges.insert(p.cells[i]);
    CHECK(edges == std::set<Cone>{{0, 1}, {0, 5}, {1, 5}, {1, 2}, {2, 5},
                                  {2, 3}, {3, 5}, {0, 3}, {3, 4}, {2, 4},
                                  {0, 4}, {0, 6}, {1, 6}, {2, 6}, {4, 6}});
  }
}

TEST_CASE("cover axioms") {
  for (Fan f : {projective_space(2), hirzebruch(1), octagon(),
                star_subdivision(product_fan(hirzebruch(1),
                                             projective_space(1)),
                                 {1, 4})}) {
    CoverReport rep = verify_cover_axioms(build_P(f), f);
    CHECK(rep.p1);
    CHECK(rep.p2);
    CHECK(rep.d2_zero);
    CHECK(rep.p3_violations.empty());
    CHECK(rep.p4_violations.empty());
    CHECK(rep.pass);
  }
  SUBCASE("a tampered sign is caught") {
    Fan f = projective_space(2);
    CellComplexP p = build_P(f);
    // corrupt one orientation
    p.incidence[0][0].second = -p.incidence[0][0].second;
    CoverReport rep = verify_cover_axioms(p, f);
    CHECK_FALSE(rep.d2_zero);
    CHECK_FALSE(rep.p4_violations.empty());
    CHECK_FALSE(rep.pass);
  }
}

TEST_CASE("star subcomplexes are contractible") {
  Fan f = hirzebruch(1);
  CellComplexP p = build_P(f);
  for (const Cone& gamma : all_cones(f)) {
    auto h = subcomplex_cohomology(p, p_x_subcomplex(p, gamma));
    CHECK(is_point_cohomology(h, 0));
  }
  // the star of a maximal cone is that single vertex
  auto m = p_x_subcomplex(p, {0, 1});
  CHECK(masked_cells(p, m) == std::set<Cone>{{0, 1}});
}

TEST_CASE("fibre subcomplexes") {
  SUBCASE("ruling of the Hirzebruch surface") {
    ToricMorphism phi;
    phi.source = hirzebruch(1);
    phi.target = projective_space(1);
    phi.map = IntMatrix::from_rows({{1, 0}});
    CellComplexP p = build_P(phi.source);

    auto over_pt = fibre_subcomplex(p, phi, {1});
    CHECK(masked_cells(p, over_pt) == std::set<Cone>{{1, 2}, {2, 3}, {2}});
    CHECK(is_point_cohomology(subcomplex_cohomology(p, over_pt), 0));

    // over the zero cone the fibre cells sit in shifted degrees: point
    // cohomology appears at index (target rank) - (cone dim) = 1
    auto over_torus = fibre_subcomplex(p, phi, {});
    CHECK(masked_cells(p, over_torus) == std::set<Cone>{{1}, {3}, {}});
    CHECK(is_point_cohomology(subcomplex_cohomology(p, over_torus), 1));
  }
  SUBCASE("octagon over the line") {
    ToricMorphism phi;
    phi.source = octagon();
    phi.target = projective_space(1);
    phi.map = IntMatrix::from_rows({{1, 0}});
    CellComplexP p = build_P(phi.source);
    auto over_plus = fibre_subcomplex(p, phi, {0});
    CHECK(masked_cells(p, over_plus) ==
          std::set<Cone>{{0, 4}, {1, 4}, {3, 7}, {0, 7}, {0}, {4}, {7}});
    CHECK(is_point_cohomology(subcomplex_cohomology(p, over_plus), 0));
  }
  SUBCASE("threefold fibres match the by-hand cell lists") {
    ToricMorphism phi;
    phi.source =
        star_subdivision(product_fan(hirzebruch(1), projective_space(1)),
                         {1, 4});
    phi.target = hirzebruch(1);
    phi.map = IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
    CellComplexP p = build_P(phi.source);

    auto over_12 = fibre_subcomplex(p, phi, {1, 2});
    CHECK(masked_cells(p, over_12) ==
          std::set<Cone>{{1, 2, 5}, {1, 2, 6}, {2, 4, 6}, {1, 2}, {2, 6}});
    CHECK(is_point_cohomology(subcomplex_cohomology(p, over_12), 0));

    auto over_01 = fibre_subcomplex(p, phi, {0, 1});
    CHECK(masked_cells(p, over_01) ==
          std::set<Cone>{{0, 1, 5}, {0, 1, 6}, {0, 4, 6}, {0, 1}, {0, 6}});
    CHECK(is_point_cohomology(subcomplex_cohomology(p, over_01), 0));

    // over an edge of the base the shift is 2 - 1 = 1
    for (const Cone& tau : std::vector<Cone>{{0}, {1}, {2}, {3}}) {
      auto mask = fibre_subcomplex(p, phi, tau);
      CHECK(is_point_cohomology(subcomplex_cohomology(p, mask), 1));
    }
    // over the zero cone the shift is 2
    auto mask = fibre_subcomplex(p, phi, {});
    CHECK(is_point_cohomology(subcomplex_cohomology(p, mask), 2));
  }
}

TEST_CASE("graded pieces of line bundle cohomology") {
  SUBCASE("Hirzebruch surface with an ample-direction twist") {
    Fan f = hirzebruch(1);
    CellComplexP p = build_P(f);
    IntVec d{0, 5, 0, 0};
    CHECK(graded_cech_at(p, f, d, {0, 0}) == ints({1, 0, 0}));
    CHECK(graded_cech_at(p, f, d, {-1, -2}) == ints({0, 1, 0}));
    CHECK(graded_cech_at(p, f, d, {-1, -1}) == ints({0, 0, 0}));
  }
  SUBCASE("top cohomology of the plane's canonical-degree twist") {
    Fan f = projective_space(2);
    CellComplexP p = build_P(f);
    IntVec d{-3, 0, 0};
    CHECK(graded_cech_at(p, f, d, {2, -1}) == ints({0, 0, 1}));
    CHECK(graded_cech_at(p, f, d, {1, -1}) == ints({0, 0, 0}));
    CHECK(graded_cech_at(p, f, d, {0, 0}) == ints({0, 0, 0}));
  }
  SUBCASE("global sections of the plane's line class") {
    Fan f = projective_space(2);
    CellComplexP p = build_P(f);
    IntVec d{1, 0, 0};
    // three monomial sections: m in {(0,0), (-1,0), (0,-1)}
    int sections = 0;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        auto h = graded_cech_at(p, f, d, {Int(a), Int(b)});
        CHECK(h[1] == 0);
        CHECK(h[2] == 0);
        sections += int(h[0]);
      }
    CHECK(sections == 3);
  }
}
