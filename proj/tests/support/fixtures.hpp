#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cyclide/cyclide_core.hpp"

namespace cyclide::testing {

inline CircleFamilyVector vec(const std::string& r, const std::array<std::string, 5>& u,
                              const std::array<std::string, 4>& v) {
  std::array<Scalar, 5> us;
  std::array<Scalar, 4> vs;
  for (std::size_t i = 0; i < 5; ++i) us[i] = parse_scalar(u[i]);
  for (std::size_t i = 0; i < 4; ++i) vs[i] = parse_scalar(v[i]);
  return {parse_scalar(r), us, vs};
}

inline Scalar q(const std::string& text) { return parse_scalar(text); }

// Coefficient data of the six blending panels (r = 1), typed in
// independently of the library's gallery.
struct ReferencePair {
  std::string panel;
  CircleFamilyVector first;
  CircleFamilyVector second;
};

inline std::vector<ReferencePair> reference_pairs() {
  const CircleFamilyVector torus = vec("1", {"1", "0", "-3", "0", "9/2"}, {"-9/2", "0", "0", "0"});
  return {
      {"a", vec("1", {"1", "-49/30", "0", "76/15", "323/30"}, {"-1669/120", "0", "-76/15", "-323/30"}),
       vec("1", {"1", "-2", "-5", "0", "17/2"}, {"-93/8", "5", "0", "-17/2"})},
      {"b", torus, vec("1", {"1", "0", "0", "76/15", "323/30"}, {"-361/30", "0", "0", "0"})},
      {"c", vec("1", {"17/15", "0", "17/3", "0", "85/6"}, {"-85/6", "0", "0", "0"}), torus},
      {"d", vec("1", {"1", "0", "0", "0", "-4"}, {"8", "0", "0", "0"}), torus},
      {"e", vec("1", {"1", "1", "0", "0", "0"}, {"19/8", "1", "0", "2"}),
       vec("1", {"1", "9/5", "0", "0", "0"}, {"699/200", "1", "0", "18/5"})},
      {"f", vec("1", {"1", "0", "1", "0", "12/13"}, {"2/13", "0", "-10/13", "0"}),
       vec("1", {"7/5", "0", "1", "0", "12/13"}, {"62/65", "0", "-10/13", "0"})},
  };
}

}  // namespace cyclide::testing
