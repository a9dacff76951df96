#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "cyclide/cyclide_core.hpp"

namespace cyclide {

// Point of Γ from the half-angle parametrization
// t -> (0, r(1 - t²)/(1 + t²), 2rt/(1 + t²)); t = ∞ gives (0, -r, 0).
struct RationalCirclePoint {
  Scalar t;
  bool at_infinity = false;
  Point3 point;
};

RationalCirclePoint circle_point(const Scalar& r, const Scalar& t);

// t = k/n for k = -n..n, plus the point at infinity on request.
std::vector<RationalCirclePoint> sample_circle(const Scalar& r, int n, bool include_infinity = false);

struct Box {
  Point3d lo;
  Point3d hi;

  static Box cube(double half_width) {
    return {{-half_width, -half_width, -half_width}, {half_width, half_width, half_width}};
  }
  double diagonal() const;
};

struct TriangleMesh {
  std::vector<Point3d> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;

  bool empty() const { return triangles.empty(); }
};

struct NamedMesh {
  std::string name;
  TriangleMesh mesh;
};

// Marching cubes over resolution³ cells. Ambiguous faces are split by the
// sign of the bilinear saddle, so adjacent cells always agree. Work is split
// into z-slabs and merged in slab order, so the result does not depend on
// the thread count (0 = hardware concurrency). Throws PreconditionViolation
// for resolution < 8 or an inverted box, EmptySurface if the sampled values
// never change sign.
TriangleMesh mesh(const TrivariatePolynomial& f, const Box& box, int resolution, unsigned threads = 0);
TriangleMesh mesh(const CircleFamilyVector& v, const Box& box, int resolution, unsigned threads = 0);

// Newton steps along the gradient: p -= f(p) ∇f(p) / |∇f(p)|².
Point3d newton_project(const FloatPolynomial& f, Point3d p, int steps = 1);

// OBJ text with one group per mesh.
std::string to_obj(const std::vector<NamedMesh>& meshes);

// Throws DomainError(IoError) naming the path on failure.
void export_obj(const std::vector<NamedMesh>& meshes, const std::filesystem::path& path);

}  // namespace cyclide
