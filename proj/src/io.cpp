#include "qpslab/io.hpp"

#include <cmath>

namespace qpslab {

namespace {

void check_shape(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs rows, cols and entries");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() || j["rows"].get<long>() <= 0 ||
      j["cols"].get<long>() <= 0)
    throw std::invalid_argument("matrix rows and cols must be positive integers");
  if (!j["entries"].is_array() ||
      j["entries"].size() != j["rows"].get<std::size_t>() * j["cols"].get<std::size_t>())
    throw std::invalid_argument("matrix entry count does not match rows*cols");
}

std::string exact_part(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw std::invalid_argument("exact entries must be fraction strings or integers");
}

Exact parse_exact(const json& e) {
  if (e.is_array()) {
    if (e.size() != 2) throw std::invalid_argument("complex entries are [real, imaginary]");
    return Exact::parse(exact_part(e[0]), exact_part(e[1]));
  }
  return Exact::parse(exact_part(e), "0");
}

double float_part(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return Exact::parse(v.get<std::string>(), "0").to_complex().real();
  throw std::invalid_argument("float entries must be numbers or fraction strings");
}

Float parse_float(const json& e) {
  if (e.is_array()) {
    if (e.size() != 2) throw std::invalid_argument("complex entries are [real, imaginary]");
    return {float_part(e[0]), float_part(e[1])};
  }
  return {float_part(e), 0.0};
}

}  // namespace

json matrix_to_json(const Mat<Exact>& m) {
  json entries = json::array();
  for (const auto& x : m.data()) entries.push_back({x.real_string(), x.imag_string()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json matrix_to_json(const Mat<Float>& m) {
  json entries = json::array();
  for (const auto& x : m.data()) entries.push_back({x.real(), x.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat<Exact> exact_matrix_from_json(const json& j) {
  check_shape(j);
  std::vector<Exact> d;
  for (const auto& e : j["entries"]) d.push_back(parse_exact(e));
  return Mat<Exact>(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(), std::move(d));
}

Mat<Float> float_matrix_from_json(const json& j) {
  check_shape(j);
  std::vector<Float> d;
  for (const auto& e : j["entries"]) d.push_back(parse_float(e));
  return Mat<Float>(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(), std::move(d));
}

json group_element_to_json(const GroupElement<Exact>& g) {
  json j = matrix_to_json(g.m);
  j["group"] = g.ctx->name();
  return j;
}

std::string group_tag(const json& j) {
  if (!j.is_object()) return "";
  if (j.contains("group") && j["group"].is_string()) return j["group"].get<std::string>();
  for (const char* key : {"g", "a", "b"})
    if (j.contains(key)) {
      const std::string t = group_tag(j[key]);
      if (!t.empty()) return t;
    }
  return "";
}

GroupElement<Exact> group_element_from_json(const GroupContext& ctx, const json& j) {
  const std::string tag = group_tag(j);
  if (!tag.empty() && tag != ctx.name())
    throw std::invalid_argument("wrong group tag: expected " + ctx.name() + ", got " + tag);
  Mat<Exact> m = exact_matrix_from_json(j);
  const auto n = static_cast<std::size_t>(ctx.n());
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix size does not match " + ctx.name());
  if (determinant(m).is_zero()) throw std::invalid_argument("matrix is not invertible");
  return GroupElement<Exact>(ctx, std::move(m));
}

GSPoint<Exact> gs_point_from_json(const GroupContext& ctx, const json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("b"))
    throw std::invalid_argument("GS point JSON needs g and b");
  const std::string tag = group_tag(j);
  if (!tag.empty() && tag != ctx.name())
    throw std::invalid_argument("wrong group tag: expected " + ctx.name() + ", got " + tag);
  return make_gs_point(ctx, group_element_from_json(ctx, j["g"]).m, group_element_from_json(ctx, j["b"]).m);
}

DoublePoint<Exact> double_point_from_json(const GroupContext& ctx, const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw std::invalid_argument("double point JSON needs a and b");
  return {group_element_from_json(ctx, j["a"]).m, group_element_from_json(ctx, j["b"]).m};
}

}  // namespace qpslab
