#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmf/module.hpp"

namespace hmf::io {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace detail

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) detail::fail(where, "rationals are strings of the form \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    detail::fail(where, e.what());
  }
}

inline Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

inline Poly poly_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) detail::fail(where, "a polynomial is an array of coefficients, lowest degree first");
  std::vector<Rational> c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(rational_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return Poly(std::move(c));
}

inline Json to_json(const AlgebraDescriptor& d) {
  Json out;
  out["domain"] = Json::array({d.lo.str(), d.hi.str()});
  out["regularity"] = to_string(d.regularity);
  Json v = Json::array();
  for (const auto& t : d.vanishing) v.push_back(t.str());
  out["vanishing"] = v;
  return out;
}

inline AlgebraDescriptor descriptor_from_json(const Json& j, const std::string& where) {
  const Json& dom = detail::field(j, "domain", where);
  if (!dom.is_array() || dom.size() != 2) detail::fail(where + ".domain", "expected [lo, hi]");
  AlgebraDescriptor d;
  d.lo = rational_from_json(dom[0], where + ".domain[0]");
  d.hi = rational_from_json(dom[1], where + ".domain[1]");
  const Json& jreg = detail::field(j, "regularity", where);
  if (!jreg.is_string()) detail::fail(where + ".regularity", "expected a string");
  const std::string reg = jreg.get<std::string>();
  if (reg == "continuous")
    d.regularity = Regularity::continuous;
  else if (reg == "measurable")
    d.regularity = Regularity::measurable;
  else
    detail::fail(where + ".regularity", "expected \"continuous\" or \"measurable\", got \"" + reg + "\"");
  if (auto it = j.find("vanishing"); it != j.end()) {
    if (!it->is_array()) detail::fail(where + ".vanishing", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k)
      d.vanishing.push_back(rational_from_json((*it)[k], where + ".vanishing[" + std::to_string(k) + "]"));
    std::sort(d.vanishing.begin(), d.vanishing.end());
  }
  auto problems = d.problems();
  if (!problems.empty()) detail::fail(where, problems.front());
  return d;
}

inline Json to_json(const PPoly& f) {
  Json out;
  out["descriptor"] = to_json(f.descriptor());
  Json bps = Json::array();
  for (const auto& t : f.breakpoints()) bps.push_back(t.str());
  out["breakpoints"] = bps;
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) pieces.push_back(to_json(p));
  out["pieces"] = pieces;
  return out;
}

/// Raw piecewise data and its descriptor, before membership validation.
struct RawElement {
  AlgebraDescriptor descriptor;
  PiecewiseData data;
};

inline RawElement raw_element_from_json(const Json& j, const std::string& where) {
  RawElement raw;
  raw.descriptor = descriptor_from_json(detail::field(j, "descriptor", where), where + ".descriptor");
  const Json& bps = detail::field(j, "breakpoints", where);
  const Json& pieces = detail::field(j, "pieces", where);
  if (!bps.is_array() || !pieces.is_array()) detail::fail(where, "breakpoints and pieces must be arrays");
  for (std::size_t k = 0; k < bps.size(); ++k)
    raw.data.breakpoints.push_back(rational_from_json(bps[k], where + ".breakpoints[" + std::to_string(k) + "]"));
  for (std::size_t k = 0; k < pieces.size(); ++k)
    raw.data.pieces.push_back(poly_from_json(pieces[k], where + ".pieces[" + std::to_string(k) + "]"));
  return raw;
}

inline PPoly ppoly_from_json(const Json& j, const std::string& where) {
  RawElement raw = raw_element_from_json(j, where);
  const Membership m = is_member(raw.data, raw.descriptor);
  if (!m) detail::fail(where, "not a member of " + raw.descriptor.str() + ": " + m.reasons.front());
  return PPoly(raw.descriptor, std::move(raw.data.breakpoints), std::move(raw.data.pieces));
}

inline Json to_json(const ModuleContext& ctx) {
  Json out;
  if (!ctx.is_cover()) {
    out["type"] = "free";
    out["descriptor"] = to_json(ctx.coefficient_algebra());
    return out;
  }
  const auto& c = ctx.cover_space();
  out["type"] = "cover";
  out["domain"] = Json::array({c.lo().str(), c.hi().str()});
  out["branch_point"] = c.branch_point().str();
  Json branches = Json::array();
  for (const auto& b : c.branches()) {
    Json jb;
    jb["label"] = b.label;
    jb["base"] = Json::array({b.base.lo.str(), b.base.hi.str()});
    branches.push_back(jb);
  }
  out["branches"] = branches;
  return out;
}

inline ModuleContext context_from_json(const Json& j, const std::string& where) {
  const Json& type = detail::field(j, "type", where);
  if (type == "free") return ModuleContext::free(descriptor_from_json(detail::field(j, "descriptor", where), where + ".descriptor"));
  if (type != "cover") detail::fail(where + ".type", "expected \"free\" or \"cover\"");
  const Json& dom = detail::field(j, "domain", where);
  if (!dom.is_array() || dom.size() != 2) detail::fail(where + ".domain", "expected [lo, hi]");
  std::vector<Branch> branches;
  const Json& jb = detail::field(j, "branches", where);
  if (!jb.is_array()) detail::fail(where + ".branches", "expected an array");
  for (std::size_t k = 0; k < jb.size(); ++k) {
    const std::string w = where + ".branches[" + std::to_string(k) + "]";
    const Json& label = detail::field(jb[k], "label", w);
    const Json& base = detail::field(jb[k], "base", w);
    if (!label.is_number_unsigned()) detail::fail(w + ".label", "expected a nonnegative integer");
    if (!base.is_array() || base.size() != 2) detail::fail(w + ".base", "expected [lo, hi]");
    branches.push_back({label.get<Index>(), {rational_from_json(base[0], w + ".base[0]"), rational_from_json(base[1], w + ".base[1]")}});
  }
  try {
    return ModuleContext::cover(CoverSpace(rational_from_json(dom[0], where + ".domain[0]"),
                                           rational_from_json(dom[1], where + ".domain[1]"),
                                           rational_from_json(detail::field(j, "branch_point", where), where + ".branch_point"),
                                           std::move(branches)));
  } catch (const Error& e) {
    detail::fail(where, e.what());
  }
}

inline Json to_json(const ModuleVector& x) {
  Json entries = Json::object();
  for (const auto& [i, v] : x.entries()) entries[std::to_string(i)] = to_json(v);
  Json out;
  out["entries"] = entries;
  return out;
}

inline ModuleVector vector_from_json(const Json& j, const ModuleContext& ctx, const std::string& where) {
  const Json& entries = detail::field(j, "entries", where);
  if (!entries.is_object()) detail::fail(where + ".entries", "expected an object keyed by index");
  ModuleVector x;
  for (const auto& [key, value] : entries.items()) {
    Index i = 0;
    try {
      std::size_t used = 0;
      i = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      detail::fail(where + ".entries", "index keys must be nonnegative integers, got \"" + key + "\"");
    }
    x.set(i, ppoly_from_json(value, where + ".entries." + key));
  }
  try {
    validate(ctx, x);
  } catch (const Error& e) {
    detail::fail(where, e.what());
  }
  return x;
}

inline Json to_json(const Enclosure& e) { return Json::array({e.lo.str(), e.hi.str()}); }

inline Json parse_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::fail(where, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace hmf::io
