#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmf/module.hpp"

namespace hmf {

enum class GramClass { none, orthogonal, quasi_orthonormal, orthonormal };

inline const char* to_string(GramClass c) {
  switch (c) {
    case GramClass::none: return "none";
    case GramClass::orthogonal: return "orthogonal";
    case GramClass::quasi_orthonormal: return "quasi-orthonormal";
    case GramClass::orthonormal: return "orthonormal";
  }
  return "?";
}

/// Ordered family e_1, e_2, ... of module vectors (indices start at 1).
/// Either a finite list, or a generator with a declared support geometry:
/// the indices whose vectors can have nonzero inner product with a given
/// vector. The geometry returns nullopt when that set is infinite.
class OrthoSystem {
 public:
  using Generator = std::function<ModuleVector(Index)>;
  using Geometry = std::function<std::optional<std::vector<Index>>(const ModuleVector&)>;

  static OrthoSystem finite(ModuleContext ctx, std::vector<ModuleVector> vectors) {
    for (const auto& v : vectors) validate(ctx, v);
    auto shared = std::make_shared<const std::vector<ModuleVector>>(std::move(vectors));
    const Index n = shared->size();
    OrthoSystem s(std::move(ctx), [shared](Index i) { return (*shared)[i - 1]; }, {}, n);
    return s;
  }

  static OrthoSystem lazy(ModuleContext ctx, Generator gen, Geometry geometry, std::optional<Index> size = std::nullopt) {
    return OrthoSystem(std::move(ctx), std::move(gen), std::move(geometry), size);
  }

  const ModuleContext& context() const { return ctx_; }
  /// nullopt for an infinite system.
  std::optional<Index> size() const { return size_; }

  ModuleVector at(Index i) const {
    if (i == 0 || (size_ && i > *size_))
      throw Error(ErrorCode::IndexOutOfSystem, "index " + std::to_string(i) + " outside the system");
    return gen_(i);
  }

  /// Indices 1..n; throws if the system is shorter.
  std::vector<Index> prefix(Index n) const {
    if (size_ && n > *size_) throw Error(ErrorCode::IndexOutOfSystem, "prefix longer than the system");
    std::vector<Index> out(n);
    for (Index i = 0; i < n; ++i) out[i] = i + 1;
    return out;
  }

  /// Indices whose vectors may pair nontrivially with x; nullopt when infinite.
  std::optional<std::vector<Index>> interacting(const ModuleVector& x) const {
    if (geometry_) return geometry_(x);
    if (size_) return prefix(*size_);
    return std::nullopt;
  }

  /// Classification set only by `classified`, after exact verification.
  std::optional<GramClass> verified_class() const { return verified_; }

 private:
  friend OrthoSystem classified(const OrthoSystem& system, Index prefix_length);

  OrthoSystem with_verified_class(GramClass c) const {
    OrthoSystem s = *this;
    s.verified_ = c;
    return s;
  }

  OrthoSystem(ModuleContext ctx, Generator gen, Geometry geometry, std::optional<Index> size)
      : ctx_(std::move(ctx)), gen_(std::move(gen)), geometry_(std::move(geometry)), size_(size) {}

  ModuleContext ctx_;
  Generator gen_;
  Geometry geometry_;
  std::optional<Index> size_;
  std::optional<GramClass> verified_;
};

struct GramVerdict {
  GramClass cls = GramClass::none;
  /// First pair (i, j), i < j, with <e_i, e_j> != 0.
  std::optional<std::pair<Index, Index>> nonorthogonal_pair;
  /// First index whose inner square is not a projection.
  std::optional<Index> not_projection;
  /// First index whose inner square is not the identity.
  std::optional<Index> not_unit;
};

/// Exact classification of the subfamily {e_i : i in indices}.
inline GramVerdict gram_classify(const OrthoSystem& system, const std::vector<Index>& indices) {
  const ModuleContext& ctx = system.context();
  GramVerdict v;
  std::vector<ModuleVector> vs;
  vs.reserve(indices.size());
  for (Index i : indices) vs.push_back(system.at(i));
  for (std::size_t a = 0; a < vs.size() && !v.nonorthogonal_pair; ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!inner_product(ctx, vs[a], vs[b]).is_zero()) {
        v.nonorthogonal_pair = std::pair{indices[a], indices[b]};
        break;
      }
  if (v.nonorthogonal_pair) return v;

  const AlgebraDescriptor d = ctx.coefficient_algebra();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    const PPoly sq = inner_product(ctx, vs[a], vs[a]);
    if (!v.not_projection && !(sq * sq == sq)) v.not_projection = indices[a];
    if (!v.not_unit && (!d.unital() || !(sq == PPoly::one(d)))) v.not_unit = indices[a];
  }
  v.cls = !v.not_unit ? GramClass::orthonormal : !v.not_projection ? GramClass::quasi_orthonormal : GramClass::orthogonal;
  return v;
}

inline GramVerdict gram_classify(const OrthoSystem& system, Index prefix_length) {
  return gram_classify(system, system.prefix(prefix_length));
}

/// The system with its verified classification on the first `prefix_length` vectors recorded.
inline OrthoSystem classified(const OrthoSystem& system, Index prefix_length) {
  return system.with_verified_class(gram_classify(system, prefix_length).cls);
}

}  // namespace hmf
