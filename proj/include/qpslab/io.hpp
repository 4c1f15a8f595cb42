#pragma once

#include <json.hpp>

#include "qpslab/dirac.hpp"
#include "qpslab/gspringer.hpp"

namespace qpslab {

using json = nlohmann::json;

/// {"rows":r,"cols":c,"entries":[[re,im],...]} row-major; exact entries are
/// fraction strings, float entries are numbers.
json matrix_to_json(const Mat<Exact>& m);
json matrix_to_json(const Mat<Float>& m);

/// Exact parse: entries are [re, im] fraction strings, a single fraction
/// string, or an integer. Throws std::invalid_argument on malformed input.
Mat<Exact> exact_matrix_from_json(const json& j);
/// Float parse: additionally accepts plain (non-integer) numbers.
Mat<Float> float_matrix_from_json(const json& j);

/// Matrix JSON plus {"group": name}.
json group_element_to_json(const GroupElement<Exact>& g);
/// Validates the group tag (if present) against ctx and membership in G.
GroupElement<Exact> group_element_from_json(const GroupContext& ctx, const json& j);
/// The "group" tag of a group element, GS point or double point, or "" if absent.
std::string group_tag(const json& j);

template <class T>
json point_to_json(const GSPoint<T>& p) {
  return {{"g", matrix_to_json(p.g)}, {"b", matrix_to_json(p.b)}};
}
template <class T>
json point_to_json(const DoublePoint<T>& p) {
  return {{"a", matrix_to_json(p.a)}, {"b", matrix_to_json(p.b)}};
}
GSPoint<Exact> gs_point_from_json(const GroupContext& ctx, const json& j);
DoublePoint<Exact> double_point_from_json(const GroupContext& ctx, const json& j);

template <class T>
json fiber_to_json(const DiracFiber<T>& f) {
  json base = json::array();
  for (const auto& m : f.base) base.push_back(matrix_to_json(m));
  return {{"base", base}, {"tangent_dim", f.d}, {"basis", matrix_to_json(f.space.basis())}};
}

}  // namespace qpslab
