#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cyclide/errors.hpp"
#include "cyclide/surface_io.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace cyclide;
using namespace cyclide::testing;

namespace {

const CircleFamilyVector kTorus = vec("1", {"1", "0", "-3", "0", "9/2"}, {"-9/2", "0", "0", "0"});

double norm(const Point3d& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

}  // namespace

TEST(SampleCircle, Examples) {
  EXPECT_EQ(circle_point(1, 0).point, (Point3{0, 1, 0}));
  EXPECT_EQ(circle_point(1, 1).point, (Point3{0, 0, 1}));
  EXPECT_EQ(circle_point(13, q("1/5")).point, (Point3{0, 12, 5}));
  const auto pts = sample_circle(1, 2, true);
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_TRUE(pts.back().at_infinity);
  EXPECT_EQ(pts.back().point, (Point3{0, -1, 0}));
  EXPECT_THROW(sample_circle(1, 0), DomainError);
}

TEST(SampleCircle, ExactAndDistinct) {
  for (const Scalar& r : {Scalar(1), q("13/7")}) {
    const auto pts = sample_circle(r, 10000, true);
    std::set<std::pair<Scalar, Scalar>> seen;
    for (const auto& p : pts) {
      EXPECT_EQ(p.point[0], 0);
      EXPECT_EQ(p.point[1] * p.point[1] + p.point[2] * p.point[2], r * r);
      seen.insert({p.point[1], p.point[2]});
    }
    EXPECT_EQ(seen.size(), pts.size());
  }
}

TEST(Mesh, TorusVerticesProjectOntoSurface) {
  const TriangleMesh m = mesh(kTorus, Box::cube(3), 64);
  ASSERT_FALSE(m.empty());
  const FloatPolynomial f(expand(kTorus).to_polynomial());
  for (const Point3d& v : m.vertices) EXPECT_LE(std::abs(f(newton_project(f, v))), 1e-2);
}

TEST(Mesh, IndicesInRangeAndNoDegenerateTriangles) {
  const TriangleMesh m = mesh(kTorus, Box::cube(5), 40);
  for (const auto& t : m.triangles) {
    for (std::size_t i : t) EXPECT_LT(i, m.vertices.size());
    const Point3d& a = m.vertices[t[0]];
    const Point3d& b = m.vertices[t[1]];
    const Point3d& c = m.vertices[t[2]];
    const Point3d ab{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const Point3d ac{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    const Point3d n{ab[1] * ac[2] - ab[2] * ac[1], ab[2] * ac[0] - ab[0] * ac[2], ab[0] * ac[1] - ab[1] * ac[0]};
    EXPECT_GE(0.5 * norm(n), 1e-12);
  }
}

TEST(Mesh, ClosedSurfaceIsWatertight) {
  // The whole torus fits in the box, so every edge has exactly two triangles.
  const TriangleMesh m = mesh(kTorus, Box::cube(5), 48);
  std::map<std::pair<std::size_t, std::size_t>, int> edges;
  for (const auto& t : m.triangles) {
    for (int s = 0; s < 3; ++s) {
      std::size_t a = t[static_cast<std::size_t>(s)], b = t[static_cast<std::size_t>((s + 1) % 3)];
      if (a > b) std::swap(a, b);
      ++edges[{a, b}];
    }
  }
  const auto open = std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.second != 2; });
  // Skipped near-zero-area triangles may leave a handful of open edges.
  EXPECT_LE(static_cast<double>(open), 0.001 * static_cast<double>(edges.size()));
}

TEST(Mesh, ResidualBoundAfterProjection) {
  Rng rng(61);
  for (const auto& pair : reference_pairs()) {
    for (const auto* v : {&pair.first, &pair.second}) {
      const Box box = Box::cube(6);
      const int res = 48;
      TriangleMesh m;
      try {
        m = mesh(*v, box, res);
      } catch (const DomainError&) {
        continue;
      }
      const FloatPolynomial f(expand(*v).to_polynomial());
      std::size_t good = 0;
      for (const Point3d& p : m.vertices) {
        const Point3d x = newton_project(f, p);
        const double g = norm(f.gradient(x));
        if (g > 0 && std::abs(f(x)) / g <= box.diagonal() / res) ++good;
      }
      EXPECT_GE(static_cast<double>(good), 0.99 * static_cast<double>(m.vertices.size())) << pair.panel;
    }
  }
}

TEST(Mesh, DeterministicAcrossThreadCounts) {
  const TriangleMesh a = mesh(kTorus, Box::cube(5), 32, 1);
  const TriangleMesh b = mesh(kTorus, Box::cube(5), 32, 4);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.triangles, b.triangles);
}

TEST(Mesh, NormalsFollowGradient) {
  const TriangleMesh m = mesh(kTorus, Box::cube(5), 32);
  const FloatPolynomial f(expand(kTorus).to_polynomial());
  std::size_t agree = 0;
  for (const auto& t : m.triangles) {
    const Point3d& a = m.vertices[t[0]];
    const Point3d& b = m.vertices[t[1]];
    const Point3d& c = m.vertices[t[2]];
    const Point3d ab{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const Point3d ac{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    const Point3d n{ab[1] * ac[2] - ab[2] * ac[1], ab[2] * ac[0] - ab[0] * ac[2], ab[0] * ac[1] - ab[1] * ac[0]};
    const Point3d g = f.gradient(a);
    agree += n[0] * g[0] + n[1] * g[1] + n[2] * g[2] > 0;
  }
  EXPECT_GE(static_cast<double>(agree), 0.99 * static_cast<double>(m.triangles.size()));
}

TEST(Mesh, Errors) {
  try {
    mesh(kTorus, {{10, 10, 10}, {12, 12, 12}}, 16);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptySurface);
  }
  try {
    mesh(kTorus, Box::cube(3), 7);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolation);
  }
  EXPECT_THROW(mesh(kTorus, {{1, 0, 0}, {0, 1, 1}}, 8), DomainError);
}

TEST(Obj, EmptyListIsHeaderOnly) {
  const std::string obj = to_obj({});
  EXPECT_EQ(obj.rfind("# ", 0), 0u);
  EXPECT_EQ(std::count(obj.begin(), obj.end(), '\n'), 1);
}

TEST(Obj, TwoGroupsForPanelD) {
  const auto pair = reference_pairs()[3];
  const std::vector<NamedMesh> meshes{{"first", mesh(pair.first, Box::cube(6), 24)},
                                      {"second", mesh(pair.second, Box::cube(6), 24)}};
  const auto path = std::filesystem::temp_directory_path() / "cyclide_test_panel_d.obj";
  export_obj(meshes, path);
  std::ifstream in(path);
  std::string line;
  int groups = 0;
  std::size_t vertices = 0, faces = 0, max_index = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "g") ++groups;
    if (tag == "v") ++vertices;
    if (tag == "f") {
      ++faces;
      for (std::size_t i; ls >> i;) max_index = std::max(max_index, i);
    }
  }
  EXPECT_EQ(groups, 2);
  EXPECT_EQ(vertices, meshes[0].mesh.vertices.size() + meshes[1].mesh.vertices.size());
  EXPECT_EQ(faces, meshes[0].mesh.triangles.size() + meshes[1].mesh.triangles.size());
  EXPECT_EQ(max_index, vertices);
  std::filesystem::remove(path);
}

TEST(Obj, UnwritablePath) {
  try {
    export_obj({}, "/nonexistent-dir/x.obj");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.obj"), std::string::npos);
  }
}
