#include "toric/fixtures.hpp"

namespace toric {

namespace {

Fixture fan_fixture(std::string name, std::string summary, Fan fan) {
  Fixture fx;
  fx.name = std::move(name);
  fx.summary = std::move(summary);
  fx.fan = std::move(fan);
  return fx;
}

Fixture morphism_fixture(std::string name, std::string summary, ToricMorphism phi,
                         IntVec divisor) {
  Fixture fx;
  fx.name = std::move(name);
  fx.summary = std::move(summary);
  fx.has_morphism = true;
  fx.fan = phi.source;
  fx.phi = std::move(phi);
  fx.divisor = std::move(divisor);
  return fx;
}

Fan octagon_fan() {
  Fan f;
  f.n = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  f.max_cones = {{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {0, 7}};
  return f;
}

std::vector<Fixture> build_all() {
  std::vector<Fixture> out;

  out.push_back(fan_fixture("p2", "projective plane", projective_space(2)));
  out.push_back(fan_fixture("f1", "first Hirzebruch surface (one-point blow-up of the plane)",
                            hirzebruch(1)));
  out.push_back(fan_fixture("p1xp1", "product of two projective lines",
                            product_fan(projective_space(1), projective_space(1))));

  {
    ToricMorphism phi;
    phi.source = hirzebruch(1);
    phi.target = projective_space(2);
    phi.map = IntMatrix::from_rows({{0, -1}, {1, 0}});
    out.push_back(morphism_fixture("b1", "blow-down of the Hirzebruch surface to the plane",
                                   std::move(phi), IntVec{0, 5, 0, 0}));
  }
  {
    ToricMorphism phi;
    phi.source = hirzebruch(1);
    phi.target = projective_space(1);
    phi.map = IntMatrix::from_rows({{1, 0}});
    out.push_back(morphism_fixture("b2", "ruling of the Hirzebruch surface over the line",
                                   std::move(phi), IntVec{0, -2, 0, 0}));
  }
  {
    ToricMorphism phi;
    phi.source = star_subdivision(product_fan(hirzebruch(1), projective_space(1)), Cone{1, 4});
    phi.target = hirzebruch(1);
    phi.map = IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
    out.push_back(morphism_fixture(
        "b3", "blown-up threefold fibred in lines over the Hirzebruch surface", std::move(phi),
        IntVec{0, 0, 0, 0, 0, -2, -2}));
  }
  {
    ToricMorphism phi;
    phi.source = octagon_fan();
    phi.target = projective_space(1);
    phi.map = IntMatrix::from_rows({{1, 0}});
    out.push_back(morphism_fixture("b4", "octagonal surface fibred in lines over the line",
                                   std::move(phi), IntVec{1, 0, 0, 0, -1, 0, -2, 1}));
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = build_all();
  return fixtures;
}

const Fixture* find_fixture(const std::string& name) {
  for (const Fixture& fx : all_fixtures())
    if (fx.name == name) return &fx;
  return nullptr;
}

}  // namespace toric
