#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rcurves/binary_form.hpp"
#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"
#include "rcurves/geometry.hpp"
#include "rcurves/multi_form.hpp"
#include "rcurves/splitting_type.hpp"

namespace rcurves::wire {

/// Wire documents preserve key insertion order so that identical inputs
/// yield byte-identical outputs.
using Json = nlohmann::ordered_json;

// --- scalars ------------------------------------------------------------

/// Rationals travel as strings "p/q" in lowest terms ("p" when integral);
/// plain JSON integers are accepted on input.
inline RationalField::Element element_from_json(const RationalField& F, const Json& j) {
  if (j.is_number_unsigned()) {
    auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
      throw ValidationError("BadNumber", "integer literal too large; pass it as a string");
    return F.from_int(static_cast<long long>(v));
  }
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  if (j.is_string()) return F.parse(j.get<std::string>());
  throw ValidationError("BadNumber", "rational coefficients are integers or \"p/q\" strings");
}

inline Json element_to_json(const RationalField& F, const RationalField::Element& e) {
  return Json(F.to_string(e));
}

/// Prime-field elements travel as integers in [0, p); any integer or a
/// decimal string is accepted on input and reduced.
inline PrimeField::Element element_from_json(const PrimeField& F, const Json& j) {
  if (j.is_number_unsigned()) {
    auto v = j.get<std::uint64_t>();
    return static_cast<PrimeField::Element>(v % F.modulus());
  }
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  if (j.is_string()) return F.parse(j.get<std::string>());
  throw ValidationError("BadNumber", "prime-field coefficients are integers");
}

inline Json element_to_json(const PrimeField&, PrimeField::Element e) { return Json(e); }

// --- binary forms -------------------------------------------------------

/// A form of degree d is its coefficient array of length d+1, descending
/// s-power: entry i is the coefficient of s^(d-i) t^i.
template <FieldContext K>
BinaryForm<K> form_from_json(const K& F, const Json& j) {
  if (!j.is_array() || j.empty())
    throw ValidationError("BadDocument", "a form is a nonempty coefficient array");
  std::vector<typename K::Element> c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(element_from_json(F, v));
  const int degree = static_cast<int>(c.size()) - 1;
  return BinaryForm<K>(degree, std::move(c));
}

template <FieldContext K>
Json form_to_json(const K& F, const BinaryForm<K>& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(element_to_json(F, c));
  return a;
}

// --- ambient spaces -----------------------------------------------------

/// Accepts {"P": n}, {"biP": [a, b]}, or the shorthand strings "P:n" and
/// "biP:a,b".
inline AmbientSpace ambient_from_json(const Json& j) {
  auto as_int = [](const Json& v, const char* what) -> int {
    if (!v.is_number_integer())
      throw ValidationError("BadDocument", std::string(what) + " must be an integer");
    return v.get<int>();
  };
  if (j.is_object()) {
    if (j.contains("P")) return AmbientSpace::projective(as_int(j.at("P"), "P"));
    if (j.contains("biP")) {
      const Json& f = j.at("biP");
      if (!f.is_array() || f.size() != 2)
        throw ValidationError("BadDocument", "biP takes two factor dimensions");
      return AmbientSpace::biprojective(as_int(f.at(0), "biP[0]"), as_int(f.at(1), "biP[1]"));
    }
    throw ValidationError("BadDocument", "ambient object needs a \"P\" or \"biP\" key");
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      if (s.rfind("P:", 0) == 0) return AmbientSpace::projective(std::stoi(s.substr(2)));
      if (s.rfind("biP:", 0) == 0) {
        auto rest = s.substr(4);
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument(s);
        return AmbientSpace::biprojective(std::stoi(rest.substr(0, comma)),
                                          std::stoi(rest.substr(comma + 1)));
      }
    } catch (const std::logic_error&) {
      throw ValidationError("BadDocument", "cannot parse ambient '" + s + "'");
    }
    throw ValidationError("BadDocument", "ambient strings look like \"P:2\" or \"biP:1,1\"");
  }
  throw ValidationError("BadDocument", "ambient must be an object or a string");
}

inline Json ambient_to_json(const AmbientSpace& space) {
  Json j = Json::object();
  if (space.is_projective())
    j["P"] = space.n;
  else
    j["biP"] = Json::array({space.a, space.b});
  return j;
}

// --- hypersurfaces ------------------------------------------------------

/// {"ambient": ..., "degree": e | [e1, e2], "terms": [{"exp": [...], "c": ...}]}.
/// The term list must be nonzero of the declared multidegree. When the
/// caller already knows the ambient space, a mismatch is rejected.
template <FieldContext K>
Hypersurface<K> hypersurface_from_json(const K& F, const Json& j,
                                       const std::optional<AmbientSpace>& expected) {
  if (!j.is_object())
    throw ValidationError("BadDocument", "a hypersurface is an object");
  if (!j.contains("ambient") || !j.contains("degree") || !j.contains("terms"))
    throw ValidationError("BadDocument", "a hypersurface needs ambient, degree and terms");
  AmbientSpace space = ambient_from_json(j.at("ambient"));
  if (expected && !(space == *expected))
    throw ValidationError("ArityMismatch",
                          "hypersurface ambient differs from the ambient given alongside it");

  const Json& jd = j.at("degree");
  std::vector<int> degrees;
  if (jd.is_number_integer()) {
    degrees.push_back(jd.get<int>());
  } else if (jd.is_array()) {
    for (const auto& v : jd) {
      if (!v.is_number_integer())
        throw ValidationError("BadDocument", "degree entries must be integers");
      degrees.push_back(v.get<int>());
    }
  } else {
    throw ValidationError("BadDocument", "degree must be an integer or an array");
  }
  if (static_cast<int>(degrees.size()) != space.blocks())
    throw ValidationError("ArityMismatch", "one degree per projective factor");

  MultiForm<K> G(space.block_sizes(), degrees);
  const Json& terms = j.at("terms");
  if (!terms.is_array())
    throw ValidationError("BadDocument", "terms must be an array");
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("c"))
      throw ValidationError("BadDocument", "each term is {\"exp\": [...], \"c\": ...}");
    const Json& je = t.at("exp");
    if (!je.is_array())
      throw ValidationError("BadDocument", "term exponents must be an array");
    std::vector<int> exp;
    exp.reserve(je.size());
    for (const auto& v : je) {
      if (!v.is_number_integer())
        throw ValidationError("BadDocument", "term exponents must be integers");
      exp.push_back(v.get<int>());
    }
    G.add_term(F, exp, element_from_json(F, t.at("c")));
  }
  return Hypersurface<K>::cut_out(space, std::move(G));
}

// --- curves -------------------------------------------------------------

/// {"blocks": [[form...], ...]} with one block per projective factor, or a
/// bare array of forms meaning a single block.
template <FieldContext K>
RationalCurve<K> curve_from_json(const K& F, const AmbientSpace& space, const Json& j) {
  const Json* blocks = nullptr;
  if (j.is_object() && j.contains("blocks")) {
    blocks = &j.at("blocks");
  } else if (j.is_array()) {
    if (space.blocks() != 1)
      throw ValidationError("ArityMismatch",
                            "a bare form array is a single block; this ambient has two");
  } else {
    throw ValidationError("BadDocument", "a map is {\"blocks\": [...]} or a bare form array");
  }

  std::vector<std::vector<BinaryForm<K>>> parsed;
  auto parse_block = [&](const Json& jb) {
    if (!jb.is_array() || jb.empty())
      throw ValidationError("BadDocument", "each map block is a nonempty array of forms");
    std::vector<BinaryForm<K>> forms;
    forms.reserve(jb.size());
    for (const auto& jf : jb) forms.push_back(form_from_json(F, jf));
    parsed.push_back(std::move(forms));
  };
  if (blocks) {
    if (!blocks->is_array())
      throw ValidationError("BadDocument", "blocks must be an array");
    for (const auto& jb : *blocks) parse_block(jb);
  } else {
    parse_block(j);
  }
  return RationalCurve<K>(F, space, std::move(parsed));
}

template <FieldContext K>
Json curve_to_json(const K& F, const RationalCurve<K>& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks()) {
    Json jb = Json::array();
    for (const auto& form : b) jb.push_back(form_to_json(F, form));
    blocks.push_back(std::move(jb));
  }
  return Json{{"blocks", std::move(blocks)}};
}

// --- splitting types ----------------------------------------------------

inline Json splitting_to_json(const SplittingType& s) {
  Json a = Json::array();
  for (int v : s.values()) a.push_back(v);
  return a;
}

}  // namespace rcurves::wire
