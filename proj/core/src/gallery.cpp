#include "cyclide/gallery.hpp"

namespace cyclide {

namespace {

CircleFamilyVector vec(std::array<const char*, 5> u, std::array<const char*, 4> v) {
  std::array<Scalar, 5> us;
  std::array<Scalar, 4> vs;
  for (std::size_t i = 0; i < 5; ++i) us[i] = parse_scalar(u[i]);
  for (std::size_t i = 0; i < 4; ++i) vs[i] = parse_scalar(v[i]);
  return {Scalar(1), us, vs};
}

std::vector<BlendPanel> build() {
  const CircleFamilyVector torus = vec({"1", "0", "-3", "0", "9/2"}, {"-9/2", "0", "0", "0"});
  return {
      {"a", "two cyclides sharing the tangent cone with lambda = -1",
       vec({"1", "-49/30", "0", "76/15", "323/30"}, {"-1669/120", "0", "-76/15", "-323/30"}),
       vec({"1", "-2", "-5", "0", "17/2"}, {"-93/8", "5", "0", "-17/2"}), Box::cube(10)},
      {"b", "torus and cyclide sharing a tangent cylinder", torus,
       vec({"1", "0", "0", "76/15", "323/30"}, {"-361/30", "0", "0", "0"}), Box::cube(8)},
      {"c", "scaled cyclide and torus on a common cylinder",
       vec({"17/15", "0", "17/3", "0", "85/6"}, {"-85/6", "0", "0", "0"}), torus, Box::cube(7)},
      {"d", "cyclide and torus on a common cylinder", vec({"1", "0", "0", "0", "-4"}, {"8", "0", "0", "0"}),
       torus, Box::cube(6)},
      {"e", "plane-family members a = 1 and a = 9/5", vec({"1", "1", "0", "0", "0"}, {"19/8", "1", "0", "2"}),
       vec({"1", "9/5", "0", "0", "0"}, {"699/200", "1", "0", "18/5"}), Box::cube(4)},
      {"f", "Villarceau pencil members t = 0 and t = 2/5",
       vec({"1", "0", "1", "0", "12/13"}, {"2/13", "0", "-10/13", "0"}),
       vec({"7/5", "0", "1", "0", "12/13"}, {"62/65", "0", "-10/13", "0"}), Box::cube(4)},
  };
}

}  // namespace

const std::vector<BlendPanel>& blend_gallery() {
  static const std::vector<BlendPanel> panels = build();
  return panels;
}

}  // namespace cyclide
