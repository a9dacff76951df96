#include "cyclide/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cyclide {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw DomainError(ErrorKind::ParseError, message); }

Scalar scalar_from(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": scalars must be strings such as \"3/4\"");
  return parse_scalar(j.get<std::string>());
}

template <std::size_t N>
std::array<Scalar, N> array_from(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != N) fail("\"" + key + "\" must be an array of " + std::to_string(N) + " scalars");
  std::array<Scalar, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = scalar_from(j[i], key + "[" + std::to_string(i) + "]");
  return out;
}

json strings(const auto& values) {
  json out = json::array();
  for (const Scalar& s : values) out.push_back(to_string(s));
  return out;
}

json residuals_json(const NamedResiduals& residuals) {
  json out = json::object();
  for (const auto& [name, value] : residuals) out[name] = to_string(value);
  return out;
}

json minors_json(const std::vector<Minor>& minors) {
  json out = json::object();
  for (const Minor& m : minors) out[std::to_string(m.row_a) + "," + std::to_string(m.row_b)] = to_string(m.value);
  return out;
}

}  // namespace

std::string vector_to_json(const CircleFamilyVector& v) {
  const json j{{"r", to_string(v.r())}, {"u", strings(v.u())}, {"v", strings(v.v())}};
  return j.dump();
}

CircleFamilyVector vector_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("vector JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "r" && key != "u" && key != "v") fail("unknown key \"" + key + "\"");
  }
  for (const char* key : {"r", "u", "v"}) {
    if (!j.contains(key)) fail(std::string("missing key \"") + key + "\"");
  }
  return {scalar_from(j["r"], "r"), array_from<5>(j["u"], "u"), array_from<4>(j["v"], "v")};
}

CircleFamilyVector read_vector_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return vector_from_json(buffer.str());
  } catch (const DomainError& e) {
    throw DomainError(e.kind(), path.string() + ": " + e.what(), e.details());
  }
}

void write_vector_json(const CircleFamilyVector& v, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << vector_to_json(v) << '\n';
  out.close();
  if (!out) throw DomainError(ErrorKind::IoError, "failed writing " + path.string());
}

std::string verdict_to_json(const ComponentVerdict& c) {
  const VillarceauWitness& w = c.villarceau;
  const PrincipalWitness& p = c.principal;
  const DegenerateWitness& d = c.degenerate;
  json j;
  j["verdict"] = std::string(to_string(c.verdict));
  j["dupin"] = is_dupin(c.verdict);
  j["villarceau"] = {{"r1", to_string(w.r1)},
                     {"r2", to_string(w.r2)},
                     {"r3", to_string(w.r3)},
                     {"r4", to_string(w.r4)},
                     {"gap", to_string(w.gap)},
                     {"member", w.member()},
                     {"horn_boundary", w.horn_boundary()}};
  j["principal"] = {{"T2", to_string(p.T2)},
                    {"T3", to_string(p.T3)},
                    {"T4", to_string(p.T4)},
                    {"U0", to_string(p.U0)},
                    {"minors_m", minors_json(p.minors_m)},
                    {"member", p.member()}};
  j["degenerate"] = {{"minors_l", minors_json(d.minors_l)},
                     {"rank_l", d.rank_l},
                     {"touch_residual", to_string(d.touch_residual)},
                     {"u1_zero", d.u1_zero},
                     {"v1_circle", d.v1_circle},
                     {"double_sphere", d.double_sphere}};
  return j.dump();
}

std::string report_to_json(const QuarticConditionReport& report) {
  const json j{{"kind", "quartic"}, {"all_vanish", report.all_vanish}, {"residuals", residuals_json(report.residuals())}};
  return j.dump();
}

std::string report_to_json(const CubicConditionReport& report) {
  const json j{{"kind", "cubic"}, {"all_vanish", report.all_vanish}, {"residuals", residuals_json(report.residuals())}};
  return j.dump();
}

std::string error_to_json(const DomainError& error) {
  json details = json::object();
  for (const auto& [name, value] : error.details()) details[name] = to_string(value);
  const json j{{"error", std::string(to_string(error.kind()))}, {"message", error.what()}, {"details", details}};
  return j.dump();
}

}  // namespace cyclide
