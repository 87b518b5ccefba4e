#pragma once

#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/morphism.hpp"

namespace toric {

// A named, built-in example the CLI can run without input files.  Plain-fan
// fixtures carry only `fan`; fibration fixtures also carry the morphism (whose
// source equals `fan`) and a default divisor on the source.
struct Fixture {
  std::string name;
  std::string summary;
  bool has_morphism = false;
  Fan fan;            // the fan itself, or the fibration's source fan
  ToricMorphism phi;  // valid only when has_morphism
  IntVec divisor;     // default divisor on `fan`; empty when none is canonical
};

// All built-in fixtures, in a fixed presentation order.
const std::vector<Fixture>& all_fixtures();

// Looks a fixture up by name; returns nullptr if absent.
const Fixture* find_fixture(const std::string& name);

}  // namespace toric
