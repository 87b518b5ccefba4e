#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/morphism.hpp"

using namespace toric;

namespace {

ToricMorphism blowdown_to_plane() {
  // the first Hirzebruch surface contracting onto the projective plane
  ToricMorphism phi;
  phi.source = hirzebruch(1);
  phi.target = projective_space(2);
  phi.map = IntMatrix::from_rows({{0, -1}, {1, 0}});
  return phi;
}

ToricMorphism ruling_to_line() {
  // the P^1-bundle projection of the first Hirzebruch surface
  ToricMorphism phi;
  phi.source = hirzebruch(1);
  phi.target = projective_space(1);
  phi.map = IntMatrix::from_rows({{1, 0}});
  return phi;
}

}  // namespace

TEST_CASE("validate_morphism") {
  SUBCASE("blowdown is a proper fibration") {
    MorphismReport rep = validate_morphism(blowdown_to_plane());
    CHECK(rep.lattice_ok);
    CHECK(rep.maps_cones);
    CHECK(rep.proper);
    CHECK(rep.surjective);
    CHECK(rep.fibration);
  }
  SUBCASE("ruling is a proper fibration") {
    MorphismReport rep = validate_morphism(ruling_to_line());
    CHECK(rep.proper);
    CHECK(rep.fibration);
  }
  SUBCASE("incompatible lattice map is flagged") {
    ToricMorphism phi = ruling_to_line();
    phi.map = IntMatrix::from_rows({{0, 1}});  // second coordinate: cone {2,3}
                                               // maps onto all of R
    MorphismReport rep = validate_morphism(phi);
    CHECK(rep.lattice_ok);
    CHECK_FALSE(rep.maps_cones);
    CHECK_FALSE(rep.proper);
  }
  SUBCASE("wrong matrix shape") {
    ToricMorphism phi = ruling_to_line();
    phi.map = IntMatrix::identity(2);
    CHECK_FALSE(validate_morphism(phi).lattice_ok);
  }
  SUBCASE("incomplete fans are compatible but not proper") {
    ToricMorphism phi;
    phi.source.n = 2;
    phi.source.rays = {{1, 0}, {0, 1}};
    phi.source.max_cones = {{0, 1}};
    phi.target.n = 1;
    phi.target.rays = {{1}};
    phi.target.max_cones = {{0}};
    phi.map = IntMatrix::from_rows({{1, 0}});
    MorphismReport rep = validate_morphism(phi);
    CHECK(rep.maps_cones);
    CHECK_FALSE(rep.proper);
    CHECK_FALSE(rep.notes.empty());
  }
  SUBCASE("multiplication by two is surjective but not a fibration") {
    ToricMorphism phi;
    phi.source = projective_space(1);
    phi.target = projective_space(1);
    phi.map = IntMatrix::from_rows({{2}});
    MorphismReport rep = validate_morphism(phi);
    CHECK(rep.surjective);
    CHECK_FALSE(rep.fibration);
  }
}

TEST_CASE("rays_into_cone") {
  ToricMorphism phi = ruling_to_line();
  CHECK(rays_into_cone(phi, {0}) == std::vector<int>{0, 1, 3});
  CHECK(rays_into_cone(phi, {1}) == std::vector<int>{1, 2, 3});
  // the zero cone collects the rays contracted by the morphism
  CHECK(rays_into_cone(phi, {}) == std::vector<int>{1, 3});
}

TEST_CASE("pullback of divisors") {
  SUBCASE("ruling pulls a point back to a fibre") {
    ToricMorphism phi = ruling_to_line();
    CHECK(pullback_divisor(phi, {1, 0}) == IntVec{1, 0, 0, 0});
    CHECK(pullback_divisor(phi, {0, 1}) == IntVec{0, 0, 1, 0});
  }
  SUBCASE("blowdown pullback matrix") {
    ToricMorphism phi = blowdown_to_plane();
    IntMatrix pb = pullback_matrix(phi);
    CHECK(pb == IntMatrix::from_rows({{0, 1, 0},
                                      {0, 1, 1},
                                      {0, 0, 1},
                                      {1, 0, 0}}));
    // the three line divisors on the plane are linearly equivalent, so
    // their pullbacks must share one divisor class upstairs
    ClassGroup cg = class_group(phi.source);
    IntVec c0 = divisor_class(cg, pb.col(0));
    CHECK(c0 == divisor_class(cg, pb.col(1)));
    CHECK(c0 == divisor_class(cg, pb.col(2)));
  }
  SUBCASE("pullback of a principal divisor is principal") {
    ToricMorphism phi = blowdown_to_plane();
    // div(m) on the target pulls back to div(map^T m) on the source
    IntVec m{2, -3};
    IntVec down = div_char(phi.target, m);
    IntVec up = pullback_divisor(phi, down);
    IntVec mt = mul(phi.map.transpose(), m);
    CHECK(up == div_char(phi.source, mt));
  }
  SUBCASE("threefold fibration matches by-hand ray bookkeeping") {
    ToricMorphism phi;
    phi.source =
        star_subdivision(product_fan(hirzebruch(1), projective_space(1)),
                         {1, 4});
    phi.target = hirzebruch(1);
    phi.map = IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
    MorphismReport rep = validate_morphism(phi);
    CHECK(rep.proper);
    CHECK(rep.fibration);
    CHECK(rays_into_cone(phi, {1, 2}) == std::vector<int>{1, 2, 4, 5, 6});
    CHECK(rays_into_cone(phi, {}) == std::vector<int>{4, 5});
  }
}
