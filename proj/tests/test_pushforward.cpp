#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "toric/pushforward.hpp"

using namespace toric;

namespace {

std::vector<Int> ints(std::vector<int> v) {
  std::vector<Int> out;
  for (int x : v) out.push_back(x);
  return out;
}

ToricMorphism blowdown_to_plane() {
  ToricMorphism phi;
  phi.source = hirzebruch(1);
  phi.target = projective_space(2);
  phi.map = IntMatrix::from_rows({{0, -1}, {1, 0}});
  return phi;
}

ToricMorphism ruling_to_line() {
  ToricMorphism phi;
  phi.source = hirzebruch(1);
  phi.target = projective_space(1);
  phi.map = IntMatrix::from_rows({{1, 0}});
  return phi;
}

ToricMorphism threefold_to_surface() {
  ToricMorphism phi;
  phi.source = star_subdivision(
      product_fan(hirzebruch(1), projective_space(1)), {1, 4});
  phi.target = hirzebruch(1);
  phi.map = IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
  return phi;
}

int cell_index(const CellComplexP& p, const Cone& c) {
  for (std::size_t k = 0; k < p.cells.size(); ++k)
    if (p.cells[k] == c) return int(k);
  REQUIRE(false);
  return -1;
}

// Compact label of an ideal for multiset comparisons: zero, unit, or a
// single power of the second target variable.
std::string label(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  if (ideal.is_unit()) return "S";
  if (ideal.gens.size() == 1) {
    const IntVec& g = ideal.gens[0];
    bool pure = true;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (k != 1 && g[k] != 0) pure = false;
    if (pure) return "y1^" + g[1].str();
  }
  return "other";
}

using DimMultisets = std::vector<std::map<std::string, int>>;

DimMultisets labels_by_dim(const IdealComplex& ic, const MuBlock& b) {
  DimMultisets out(std::size_t(ic.p.n) + 1);
  for (std::size_t c = 0; c < ic.p.cells.size(); ++c)
    out[std::size_t(ic.p.cell_dim[c])][label(b.ideals[c])] += 1;
  return out;
}

}  // namespace

TEST_CASE("cell ideals of the blowdown family") {
  ToricMorphism phi = blowdown_to_plane();
  IntMatrix pb = pullback_matrix(phi);
  IntVec d_mu{-4, -3, -4, 8};

  CHECK(cell_ideal(pb, d_mu, {1}, 3).gens ==
        std::vector<IntVec>{
            {0, 0, 3}, {0, 1, 2}, {0, 2, 1}, {0, 3, 0}});
  CHECK(cell_ideal(pb, d_mu, {3}, 3).is_unit());
  CHECK(cell_ideal(pb, d_mu, {0}, 3).gens == std::vector<IntVec>{{0, 4, 0}});
  CHECK(cell_ideal(pb, d_mu, {2}, 3).gens == std::vector<IntVec>{{0, 0, 4}});
  CHECK(cell_ideal(pb, d_mu, {0, 1}, 3).gens ==
        std::vector<IntVec>{{0, 4, 0}});
  CHECK(cell_ideal(pb, d_mu, {1, 2}, 3).gens ==
        std::vector<IntVec>{{0, 0, 4}});
  CHECK(cell_ideal(pb, d_mu, {2, 3}, 3).gens ==
        std::vector<IntVec>{{0, 0, 4}});
  CHECK(cell_ideal(pb, d_mu, {0, 3}, 3).gens ==
        std::vector<IntVec>{{0, 4, 0}});
  CHECK(cell_ideal(pb, d_mu, {}, 3).is_unit());

  SUBCASE("negative pullback data is rejected") {
    CHECK_THROWS_AS(cell_ideal(IntMatrix::from_rows({{-1}}), {0}, {0}, 1),
                    NotMonotoneError);
  }
}

TEST_CASE("ruling family: complex shape and fine cohomology") {
  IdealComplex ic = build_complex(ruling_to_line(), {0, -2, 0, 0}, 1);
  REQUIRE(ic.blocks.size() == 1);
  const MuBlock& b = ic.blocks[0];
  CHECK(b.mu == IntVec{1});
  CHECK(b.d_mu == IntVec{0, -1, 0, -1});
  CHECK(b.e_class == IntVec{1});

  SUBCASE("vertices die, two edges and the top cell survive") {
    for (const Cone& v : {Cone{0, 1}, Cone{0, 3}, Cone{1, 2}, Cone{2, 3}})
      CHECK(b.ideals[std::size_t(cell_index(ic.p, v))].is_zero());
    CHECK(b.ideals[std::size_t(cell_index(ic.p, {0}))].is_unit());
    CHECK(b.ideals[std::size_t(cell_index(ic.p, {1}))].is_zero());
    CHECK(b.ideals[std::size_t(cell_index(ic.p, {2}))].is_unit());
    CHECK(b.ideals[std::size_t(cell_index(ic.p, {3}))].is_zero());
    CHECK(b.ideals[std::size_t(cell_index(ic.p, {}))].is_unit());
  }
  SUBCASE("every fine degree carries one dimension of cohomology") {
    CHECK(fine_cohomology(ic, b, {0, 0}) == ints({0, 1, 0}));
    CHECK(fine_cohomology(ic, b, {3, 1}) == ints({0, 1, 0}));
  }
  SUBCASE("ideal membership agrees with the score mask") {
    for (int f0 = 0; f0 <= 3; ++f0) {
      for (int f1 = 0; f1 <= 3; ++f1) {
        IntVec f{f0, f1};
        IntVec score = add(mul(ic.pullback, f), b.d_mu);
        for (std::size_t c = 0; c < ic.p.cells.size(); ++c) {
          bool by_score = true;
          for (int r : ic.p.cells[c])
            if (score[std::size_t(r)] < 0) by_score = false;
          CHECK(b.ideals[c].contains(f) == by_score);
        }
      }
    }
  }
  SUBCASE("Hilbert function of the presented module") {
    ClassGroup cg = ic.cg;
    std::vector<int> expected{0, 1, 2, 3, 4, 5, 6};
    for (int d = -2; d <= 4; ++d) {
      IntVec cls = divisor_class(cg, {Int(d), 0});
      CHECK(hilbert_at(ic, cls) == Int(expected[std::size_t(d + 2)]));
    }
  }
  SUBCASE("a single generator in fine degree zero") {
    auto gens = minimal_generators(ic, b, 4);
    CHECK(gens ==
          std::vector<std::pair<IntVec, Int>>{{IntVec{0, 0}, Int(1)}});
  }
}

TEST_CASE("monomials of a class") {
  SUBCASE("plane") {
    Fan p2 = projective_space(2);
    ClassGroup cg = class_group(p2);
    auto deg = [&](int d) { return divisor_class(cg, {Int(d), 0, 0}); };
    CHECK(monomials_of_class(p2, cg, deg(0)) ==
          std::vector<IntVec>{{0, 0, 0}});
    CHECK(monomials_of_class(p2, cg, deg(1)) ==
          std::vector<IntVec>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(monomials_of_class(p2, cg, deg(4)).size() == 15);
    CHECK(monomials_of_class(p2, cg, deg(-1)).empty());
  }
  SUBCASE("Hirzebruch surface vs the closed count") {
    Fan f1 = hirzebruch(1);
    ClassGroup cg = class_group(f1);
    for (int a = 0; a <= 3; ++a) {
      for (int bb = 0; bb <= 3; ++bb) {
        std::size_t expected = 0;
        for (int t = 0; t <= std::min(a, bb); ++t)
          expected += std::size_t(a - t + 1);
        IntVec cls = divisor_class(cg, {Int(a), Int(bb), 0, 0});
        CHECK(monomials_of_class(f1, cg, cls).size() == expected);
      }
    }
  }
}

TEST_CASE("blowdown family: a torsion module on the plane") {
  IdealComplex ic = build_complex(blowdown_to_plane(), {0, 5, 0, 0}, 1);
  REQUIRE(ic.blocks.size() == 1);
  const MuBlock& b = ic.blocks[0];
  CHECK(b.d_mu == IntVec{-4, -3, -4, 8});
  CHECK(b.e_class == IntVec{0});

  SUBCASE("fine cohomology pins") {
    CHECK(fine_cohomology(ic, b, {0, 0, 3}) == ints({0, 1, 0}));
    CHECK(fine_cohomology(ic, b, {0, 0, 0}) == ints({0, 0, 0}));
  }
  SUBCASE("Hilbert function saturates at the total middle cohomology") {
    std::vector<int> expected{0, 0, 0, 4, 7, 9, 10, 10, 10};
    for (int d = 0; d <= 8; ++d) {
      IntVec cls = divisor_class(ic.cg, {Int(d), 0, 0});
      CHECK(hilbert_at(ic, cls) == Int(expected[std::size_t(d)]));
    }
  }
  SUBCASE("generated by the four cubics in the exceptional variables") {
    auto gens = minimal_generators(ic, b, 6);
    CHECK(gens == std::vector<std::pair<IntVec, Int>>{{IntVec{0, 0, 3}, Int(1)},
                                                      {IntVec{0, 1, 2}, Int(1)},
                                                      {IntVec{0, 2, 1}, Int(1)},
                                                      {IntVec{0, 3, 0}, Int(1)}});
    for (const auto& [f, count] : gens)
      CHECK(fine_cohomology(ic, b, f)[1] >= count);
  }
}

TEST_CASE("threefold family over the Hirzebruch surface") {
  IdealComplex ic =
      build_complex(threefold_to_surface(), {0, 0, 0, 0, 0, -2, -2}, 1);
  REQUIRE(ic.blocks.size() == 3);
  CHECK(ic.blocks[0].mu == IntVec{-1});
  CHECK(ic.blocks[1].mu == IntVec{0});
  CHECK(ic.blocks[2].mu == IntVec{1});
  for (const auto& b : ic.blocks) CHECK(b.e_class == zero_vec(2));

  SUBCASE("ideal shapes per cell dimension") {
    DimMultisets outer = labels_by_dim(ic, ic.blocks[0]);
    DimMultisets middle = labels_by_dim(ic, ic.blocks[1]);
    DimMultisets inner = labels_by_dim(ic, ic.blocks[2]);

    DimMultisets expected_outer = {
        {{"0", 8}, {"y1^3", 2}},
        {{"S", 4}, {"y1^3", 3}, {"0", 8}},
        {{"S", 4}, {"0", 2}, {"y1^3", 1}},
        {{"S", 1}}};
    DimMultisets expected_middle = {
        {{"S", 2}, {"0", 4}, {"y1^2", 4}},
        {{"S", 7}, {"y1^2", 4}, {"0", 4}},
        {{"S", 5}, {"0", 1}, {"y1^2", 1}},
        {{"S", 1}}};
    DimMultisets expected_inner = {
        {{"S", 2}, {"0", 4}, {"y1^1", 4}},
        {{"S", 7}, {"y1^1", 4}, {"0", 4}},
        {{"S", 5}, {"0", 1}, {"y1^1", 1}},
        {{"S", 1}}};

    CHECK(middle == expected_middle);
    // The two nontrivial fibre degrees are mirror images; accept either
    // assignment of the sign.
    bool direct = (outer == expected_outer && inner == expected_inner);
    bool flipped = (outer == expected_inner && inner == expected_outer);
    CHECK((direct || flipped));
  }
  SUBCASE("Hilbert function matches the split module") {
    // The pushforward is O + O/O(-2B) + O/O(-B), where B is the class of
    // the second ray's divisor; counting monomials of a*f + b*B gives the
    // closed form below.
    auto mc = [](int a, int bb) -> Int {
      if (a < 0 || bb < 0) return 0;
      Int total = 0;
      for (int t = 0; t <= std::min(a, bb); ++t) total += a - t + 1;
      return total;
    };
    for (int a = 0; a <= 4; ++a) {
      for (int bb = 0; bb <= 4; ++bb) {
        Int expected = 3 * mc(a, bb) - mc(a, bb - 2) - mc(a, bb - 1);
        IntVec cls = divisor_class(ic.cg, {Int(a), Int(bb), 0, 0});
        CHECK(hilbert_at(ic, cls) == expected);
      }
    }
  }
  SUBCASE("each block is cyclic with generator in fine degree zero") {
    for (const auto& b : ic.blocks) {
      auto gens = minimal_generators(ic, b, 3);
      CHECK(gens ==
            std::vector<std::pair<IntVec, Int>>{{zero_vec(4), Int(1)}});
    }
  }
}
