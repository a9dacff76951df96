#pragma once

#include <string>
#include <vector>

#include "cyclide/cyclide_core.hpp"
#include "cyclide/surface_io.hpp"

namespace cyclide {

// A pair of cyclides (r = 1) blended along Γ, with a box that frames both
// surfaces for meshing.
struct BlendPanel {
  std::string name;
  std::string description;
  CircleFamilyVector first;
  CircleFamilyVector second;
  Box box;
};

// The six blending examples (a)-(f).
const std::vector<BlendPanel>& blend_gallery();

}  // namespace cyclide
