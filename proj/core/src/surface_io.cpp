#include "cyclide/surface_io.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "cyclide/errors.hpp"

namespace cyclide {

RationalCirclePoint circle_point(const Scalar& r, const Scalar& t) {
  const Scalar d = 1 + t * t;
  return {t, false, {Scalar(0), r * (1 - t * t) / d, 2 * r * t / d}};
}

std::vector<RationalCirclePoint> sample_circle(const Scalar& r, int n, bool include_infinity) {
  if (n < 1) {
    throw DomainError(ErrorKind::PreconditionViolation, "sample_circle needs n >= 1");
  }
  std::vector<RationalCirclePoint> out;
  out.reserve(static_cast<std::size_t>(2 * n + 2));
  for (int k = -n; k <= n; ++k) {
    Scalar t(k, n);
    t.canonicalize();
    out.push_back(circle_point(r, t));
  }
  if (include_infinity) out.push_back({Scalar(0), true, {Scalar(0), -r, Scalar(0)}});
  return out;
}

double Box::diagonal() const {
  return std::hypot(hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]);
}

namespace {

using EdgeKey = std::uint64_t;

Point3d sub(const Point3d& a, const Point3d& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Point3d& a, const Point3d& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point3d cross(const Point3d& a, const Point3d& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Corner c of a cell sits at offset (c & 1, (c >> 1) & 1, (c >> 2) & 1).
// Faces list their corners in cyclic order.
constexpr std::array<std::array<int, 4>, 6> kFaces{{
    {0, 2, 6, 4},  // x = 0
    {1, 3, 7, 5},  // x = 1
    {0, 1, 5, 4},  // y = 0
    {2, 3, 7, 6},  // y = 1
    {0, 1, 3, 2},  // z = 0
    {4, 5, 7, 6},  // z = 1
}};

class Grid {
 public:
  Grid(const FloatPolynomial& f, const Box& box, int n, unsigned threads)
      : f_(f), box_(box), n_(n), side_(static_cast<std::size_t>(n) + 1) {
    for (int a = 0; a < 3; ++a) step_[a] = (box.hi[a] - box.lo[a]) / n;
    values_.resize(side_ * side_ * side_);
    parallel_for(n_ + 1, threads, [&](int k) {
      for (int j = 0; j <= n_; ++j)
        for (int i = 0; i <= n_; ++i) values_[index(i, j, k)] = f_(position(i, j, k));
    });
  }

  template <typename Fn>
  static void parallel_for(int count, unsigned threads, Fn&& fn) {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int k = next++; k < count; k = next++) fn(k);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * side_ + static_cast<std::size_t>(j)) * side_ +
           static_cast<std::size_t>(i);
  }
  Point3d position(int i, int j, int k) const {
    return {box_.lo[0] + i * step_[0], box_.lo[1] + j * step_[1], box_.lo[2] + k * step_[2]};
  }
  double value(int i, int j, int k) const { return values_[index(i, j, k)]; }
  int n() const { return n_; }
  const FloatPolynomial& f() const { return f_; }

  bool has_sign_change() const {
    const bool first = values_.front() < 0;
    return std::any_of(values_.begin(), values_.end(), [&](double v) { return (v < 0) != first; });
  }

  EdgeKey key(int i, int j, int k, int axis) const { return index(i, j, k) * 3 + static_cast<EdgeKey>(axis); }

  Point3d crossing(EdgeKey key) const {
    const int axis = static_cast<int>(key % 3);
    std::size_t p = static_cast<std::size_t>(key / 3);
    const int i = static_cast<int>(p % side_);
    p /= side_;
    const int j = static_cast<int>(p % side_);
    const int k = static_cast<int>(p / side_);
    const int di = axis == 0, dj = axis == 1, dk = axis == 2;
    const double fa = value(i, j, k);
    const double fb = value(i + di, j + dj, k + dk);
    const double t = fa / (fa - fb);
    const Point3d a = position(i, j, k);
    Point3d out = a;
    out[axis] += t * step_[axis];
    return out;
  }

 private:
  const FloatPolynomial& f_;
  Box box_;
  int n_;
  std::size_t side_;
  Point3d step_{};
  std::vector<double> values_;
};

struct KeyTriangle {
  std::array<EdgeKey, 3> keys;
};

// Triangles of one z-layer of cells, as edge keys.
std::vector<KeyTriangle> polygonize_layer(const Grid& grid, int k) {
  std::vector<KeyTriangle> out;
  const int n = grid.n();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      std::array<double, 8> f;
      std::array<int, 8> ci, cj, ck;
      int inside = 0;
      for (int c = 0; c < 8; ++c) {
        ci[c] = i + (c & 1);
        cj[c] = j + ((c >> 1) & 1);
        ck[c] = k + ((c >> 2) & 1);
        f[c] = grid.value(ci[c], cj[c], ck[c]);
        inside += f[c] < 0;
      }
      if (inside == 0 || inside == 8) continue;

      auto edge_key = [&](int a, int b) {
        const int lo = std::min(a, b);
        const int axis = (a ^ b) == 1 ? 0 : ((a ^ b) == 2 ? 1 : 2);
        return grid.key(ci[lo], cj[lo], ck[lo], axis);
      };
      auto crosses = [&](int a, int b) { return (f[a] < 0) != (f[b] < 0); };

      // Each crossed edge lies on two faces, so every key ends up with two
      // neighbours and the segments close into loops.
      std::unordered_map<EdgeKey, std::array<EdgeKey, 2>> links;
      std::unordered_map<EdgeKey, int> degree;
      auto link = [&](EdgeKey a, EdgeKey b) {
        links[a][static_cast<std::size_t>(degree[a]++)] = b;
        links[b][static_cast<std::size_t>(degree[b]++)] = a;
      };
      for (const auto& face : kFaces) {
        std::array<EdgeKey, 4> e;
        int count = 0;
        for (int s = 0; s < 4; ++s) count += crosses(face[s], face[(s + 1) % 4]);
        if (count == 0) continue;
        for (int s = 0; s < 4; ++s) e[s] = edge_key(face[s], face[(s + 1) % 4]);
        // e[s] joins corners s and s+1.
        if (count == 2) {
          std::array<EdgeKey, 2> pair;
          int m = 0;
          for (int s = 0; s < 4; ++s)
            if (crosses(face[s], face[(s + 1) % 4])) pair[m++] = e[s];
          link(pair[0], pair[1]);
          continue;
        }
        const double f0 = f[face[0]], f1 = f[face[1]], f2 = f[face[2]], f3 = f[face[3]];
        const double denom = f0 + f2 - f1 - f3;
        const double saddle = denom == 0 ? 0 : (f0 * f2 - f1 * f3) / denom;
        if ((saddle < 0) == (f0 < 0)) {
          // Corners 0 and 2 connect through the face; cut off 1 and 3.
          link(e[0], e[1]);
          link(e[2], e[3]);
        } else {
          link(e[3], e[0]);
          link(e[1], e[2]);
        }
      }

      std::vector<EdgeKey> order;
      for (const auto& [start, unused] : links) order.push_back(start);
      std::sort(order.begin(), order.end());
      std::unordered_map<EdgeKey, bool> seen;
      for (EdgeKey start : order) {
        if (seen[start]) continue;
        std::vector<EdgeKey> loop;
        EdgeKey prev = start, cur = start;
        do {
          loop.push_back(cur);
          seen[cur] = true;
          const auto& nb = links[cur];
          const EdgeKey next = nb[0] != prev || loop.size() == 1 ? nb[0] : nb[1];
          prev = cur;
          cur = next;
        } while (cur != start && !seen[cur]);
        for (std::size_t s = 1; s + 1 < loop.size(); ++s) out.push_back({{loop[0], loop[s], loop[s + 1]}});
      }
    }
  }
  return out;
}

}  // namespace

TriangleMesh mesh(const TrivariatePolynomial& poly, const Box& box, int resolution, unsigned threads) {
  if (resolution < 8) {
    throw DomainError(ErrorKind::PreconditionViolation, "mesh resolution must be at least 8",
                      {{"resolution", Scalar(resolution)}});
  }
  for (int a = 0; a < 3; ++a) {
    if (!(box.lo[a] < box.hi[a])) {
      throw DomainError(ErrorKind::PreconditionViolation, "mesh box has an empty extent");
    }
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const FloatPolynomial f(poly);
  const Grid grid(f, box, resolution, threads);
  if (!grid.has_sign_change()) {
    throw DomainError(ErrorKind::EmptySurface, "no sign change of the surface equation inside the box");
  }

  std::vector<std::vector<KeyTriangle>> layers(static_cast<std::size_t>(resolution));
  Grid::parallel_for(resolution, threads,
                     [&](int k) { layers[static_cast<std::size_t>(k)] = polygonize_layer(grid, k); });

  TriangleMesh out;
  std::unordered_map<EdgeKey, std::size_t> index_of;
  for (const auto& layer : layers) {
    for (const KeyTriangle& t : layer) {
      std::array<Point3d, 3> p;
      for (int s = 0; s < 3; ++s) p[s] = grid.crossing(t.keys[s]);
      const Point3d normal = cross(sub(p[1], p[0]), sub(p[2], p[0]));
      if (0.5 * std::sqrt(dot(normal, normal)) < 1e-12) continue;
      const Point3d centroid{(p[0][0] + p[1][0] + p[2][0]) / 3, (p[0][1] + p[1][1] + p[2][1]) / 3,
                             (p[0][2] + p[1][2] + p[2][2]) / 3};
      std::array<EdgeKey, 3> keys = t.keys;
      if (dot(normal, f.gradient(centroid)) < 0) std::swap(keys[1], keys[2]);

      std::array<std::size_t, 3> tri;
      for (int s = 0; s < 3; ++s) {
        const auto [it, inserted] = index_of.try_emplace(keys[s], out.vertices.size());
        if (inserted) out.vertices.push_back(grid.crossing(keys[s]));
        tri[s] = it->second;
      }
      out.triangles.push_back(tri);
    }
  }
  return out;
}

TriangleMesh mesh(const CircleFamilyVector& v, const Box& box, int resolution, unsigned threads) {
  return mesh(expand(v).to_polynomial(), box, resolution, threads);
}

Point3d newton_project(const FloatPolynomial& f, Point3d p, int steps) {
  for (int s = 0; s < steps; ++s) {
    const Point3d g = f.gradient(p);
    const double g2 = dot(g, g);
    if (g2 == 0) break;
    const double scale = f(p) / g2;
    for (int a = 0; a < 3; ++a) p[a] -= scale * g[a];
  }
  return p;
}

std::string to_obj(const std::vector<NamedMesh>& meshes) {
  std::ostringstream os;
  os.precision(17);
  os << "# cyclide mesh export\n";
  std::size_t offset = 1;
  for (const NamedMesh& m : meshes) {
    os << "g " << m.name << '\n';
    for (const Point3d& p : m.mesh.vertices) os << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    for (const auto& t : m.mesh.triangles) {
      os << "f " << t[0] + offset << ' ' << t[1] + offset << ' ' << t[2] + offset << '\n';
    }
    offset += m.mesh.vertices.size();
  }
  return os.str();
}

void export_obj(const std::vector<NamedMesh>& meshes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << to_obj(meshes);
  out.close();
  if (!out) throw DomainError(ErrorKind::IoError, "failed writing " + path.string());
}

}  // namespace cyclide
