#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclide/blending.hpp"
#include "cyclide/circle_components.hpp"
#include "cyclide/dupin_conditions.hpp"
#include "cyclide/gallery.hpp"
#include "cyclide/invariants.hpp"
#include "cyclide/json_io.hpp"
#include "cyclide/surface_io.hpp"

namespace cyclide::cli {

namespace {

using nlohmann::json;

json vector_json(const CircleFamilyVector& v) { return json::parse(vector_to_json(v)); }

json vectors_json(const std::vector<CircleFamilyVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

json j0_json(const J0Value& j) {
  return {{"J0", to_string(j.value)}, {"class", std::string(to_string(j.smoothness))}};
}

// Scalar flags are kept as text and parsed with the strict rational parser.
class Scalars {
 public:
  void add(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option("--" + name, text_[name], help)->required();
  }
  Scalar operator[](const std::string& name) const { return parse_scalar(text_.at(name)); }

 private:
  std::map<std::string, std::string> text_;
};

Box parse_box(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) values.push_back(to_double(parse_scalar(item)));
  if (values.size() == 2) return {{values[0], values[0], values[0]}, {values[1], values[1], values[1]}};
  if (values.size() == 6) return {{values[0], values[2], values[4]}, {values[1], values[3], values[5]}};
  throw DomainError(ErrorKind::ParseError, "--bbox takes lo,hi or xlo,xhi,ylo,yhi,zlo,zhi");
}

json check_dupin(const CircleFamilyVector& v) {
  if (!is_zero(v.u(0))) return json::parse(report_to_json(quartic_dupin_conditions(to_intermediate(v))));
  return json::parse(report_to_json(cubic_dupin_conditions(expand(v))));
}

json demo_fig2(const std::filesystem::path& dir, int resolution, unsigned threads) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DomainError(ErrorKind::IoError, "cannot create " + dir.string() + ": " + ec.message());

  json panels = json::array();
  for (const BlendPanel& panel : blend_gallery()) {
    json entry{{"panel", panel.name}, {"description", panel.description}};
    json members = json::array();
    std::vector<NamedMesh> meshes;
    int index = 1;
    for (const CircleFamilyVector* v : {&panel.first, &panel.second}) {
      const std::string stem = "fig2" + panel.name + "-" + std::to_string(index++);
      write_vector_json(*v, dir / (stem + ".json"));
      const ComponentVerdict verdict = classify(*v);
      if (!is_dupin(verdict.verdict)) {
        json residuals = json::parse(verdict_to_json(verdict));
        throw DomainError(ErrorKind::ComponentMismatch,
                          "panel " + panel.name + ": " + stem + " is not Dupin: " + residuals.dump());
      }
      members.push_back({{"file", stem + ".json"},
                         {"vector", vector_json(*v)},
                         {"verdict", std::string(to_string(verdict.verdict))},
                         {"invariant", j0_json(j0(*v))}});
      meshes.push_back({stem, mesh(*v, panel.box, resolution, threads)});
    }
    const bool blended = blend_check(panel.first, panel.second);
    if (!blended) {
      const TangencyFunction a = tangency_function(panel.first);
      const TangencyFunction b = tangency_function(panel.second);
      ErrorDetails details;
      const char* names[] = {"y", "z", "1"};
      for (std::size_t i = 0; i < 3; ++i) {
        details.emplace_back(std::string("a_num_") + names[i], a.numerator[i]);
        details.emplace_back(std::string("a_den_") + names[i], a.denominator[i]);
        details.emplace_back(std::string("b_num_") + names[i], b.numerator[i]);
        details.emplace_back(std::string("b_den_") + names[i], b.denominator[i]);
      }
      throw DomainError(ErrorKind::ComponentMismatch, "panel " + panel.name + ": blend check failed", details);
    }
    const std::string obj = "fig2" + panel.name + ".obj";
    export_obj(meshes, dir / obj);
    entry["members"] = members;
    entry["blend"] = blended;
    entry["mesh"] = obj;
    panels.push_back(entry);
  }
  return {{"panels", panels}, {"out", dir.string()}};
}

bool usage_kind(ErrorKind kind) {
  return kind == ErrorKind::ParseError || kind == ErrorKind::IoError || kind == ErrorKind::InvalidVector;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for Dupin cyclides through a circle"};
  app.require_subcommand(1);

  std::function<json()> action;
  Scalars scalars;
  std::string in, in_a, in_b, out_path, bbox = "-4,4";
  int resolution = 64;
  unsigned threads = 0;

  auto with_input = [&](CLI::App* sub) { sub->add_option("--in", in, "vector JSON file")->required(); };
  auto input = [&] { return read_vector_json(in); };

  CLI::App* sub = app.add_subcommand("classify", "component verdict with witnesses");
  with_input(sub);
  sub->callback([&] { action = [&] { return json::parse(verdict_to_json(classify(input()))); }; });

  sub = app.add_subcommand("check-dupin", "necessary Dupin conditions on the expanded equation");
  with_input(sub);
  sub->callback([&] { action = [&] { return check_dupin(input()); }; });

  sub = app.add_subcommand("blend-check", "smooth blending along the circle");
  sub->add_option("--a", in_a, "first vector JSON file")->required();
  sub->add_option("--b", in_b, "second vector JSON file")->required();
  sub->callback([&] {
    action = [&] { return json{{"blend", blend_check(read_vector_json(in_a), read_vector_json(in_b))}}; };
  });

  sub = app.add_subcommand("solve-cone", "cone-family member");
  for (const char* name : {"r", "lambda", "u0", "u1", "u2", "u3"}) scalars.add(sub, name, "rational");
  sub->callback([&] {
    action = [&] {
      return json{{"vector", vector_json(cone_family_solve(scalars["r"], scalars["lambda"], scalars["u0"],
                                                           scalars["u1"], scalars["u2"], scalars["u3"]))}};
    };
  });

  sub = app.add_subcommand("solve-cylinder", "cylinder-family members");
  for (const char* name : {"r", "u0", "u2", "u3", "u4"}) scalars.add(sub, name, "rational");
  sub->callback([&] {
    action = [&] {
      return json{{"vectors", vectors_json(cylinder_family_solve(scalars["r"], scalars["u0"], scalars["u2"],
                                                                 scalars["u3"], scalars["u4"]))}};
    };
  });

  sub = app.add_subcommand("solve-plane", "plane-family member");
  for (const char* name : {"r", "u0", "u1", "v2", "v3"}) scalars.add(sub, name, "rational");
  sub->callback([&] {
    action = [&] {
      return json{{"vector", vector_json(plane_family_solve(scalars["r"], scalars["u0"], scalars["u1"],
                                                            scalars["v2"], scalars["v3"]))}};
    };
  });

  sub = app.add_subcommand("villarceau-complete", "Villarceau members with the given u");
  for (const char* name : {"r", "u0", "u1", "u2", "u3", "u4"}) scalars.add(sub, name, "rational");
  sub->callback([&] {
    action = [&] {
      const std::array<Scalar, 5> u{scalars["u0"], scalars["u1"], scalars["u2"], scalars["u3"], scalars["u4"]};
      return json{{"vectors", vectors_json(villarceau_complete(scalars["r"], u))}};
    };
  });

  sub = app.add_subcommand("pencil", "Villarceau pencil member");
  with_input(sub);
  scalars.add(sub, "t", "pencil parameter");
  sub->callback([&] { action = [&] { return json{{"vector", vector_json(villarceau_pencil(input(), scalars["t"]))}}; }; });

  sub = app.add_subcommand("recognize-torus", "torus cases of the principal component");
  with_input(sub);
  sub->callback([&] {
    action = [&] {
      const std::optional<TorusCase> c = torus_recognize(input());
      return json{{"torus", c ? json(std::string(to_string(*c))) : json(nullptr)}};
    };
  });

  sub = app.add_subcommand("invariant", "Moebius invariant J0");
  with_input(sub);
  sub->callback([&] { action = [&] { return j0_json(j0(input())); }; });

  sub = app.add_subcommand("mesh", "triangulate the surface and write OBJ");
  with_input(sub);
  sub->add_option("--bbox", bbox, "lo,hi or xlo,xhi,ylo,yhi,zlo,zhi (rationals)")->capture_default_str();
  sub->add_option("--res", resolution, "cells per axis (>= 8)")->capture_default_str();
  sub->add_option("--out", out_path, "OBJ file")->required();
  sub->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
  sub->callback([&] {
    action = [&] {
      const TriangleMesh m = mesh(input(), parse_box(bbox), resolution, threads);
      export_obj({{std::filesystem::path(in).stem().string(), m}}, out_path);
      return json{{"vertices", m.vertices.size()}, {"triangles", m.triangles.size()}, {"out", out_path}};
    };
  });

  sub = app.add_subcommand("demo-fig2", "write the six blending panels (vectors and meshes)");
  sub->add_option("--out", out_path, "output directory")->required();
  sub->add_option("--res", resolution, "cells per axis (>= 8)")->capture_default_str();
  sub->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
  sub->callback([&] { action = [&] { return demo_fig2(out_path, resolution, threads); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    out << action().dump() << '\n';
    return 0;
  } catch (const DomainError& e) {
    out << error_to_json(e) << '\n';
    err << "error: " << e.what() << '\n';
    return usage_kind(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    out << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cyclide::cli
