#include "placeforge/ordgroup/embedding.hpp"

#include "placeforge/errors.hpp"

namespace placeforge {

namespace {

GroupElem evaluate(const std::vector<GroupElem>& elems, const IntVec& coeffs) {
  return combine(elems.front().ambient(), coeffs, elems);
}

}  // namespace

EmbeddingVerdict order_embedding_check(const std::vector<GroupElem>& sources, const std::vector<GroupElem>& images,
                                       const std::vector<IntVec>& witnesses) {
  if (sources.size() != images.size()) {
    throw DomainError("order_embedding_check: " + std::to_string(sources.size()) + " sources but " +
                      std::to_string(images.size()) + " images");
  }
  for (const auto& w : witnesses) {
    if (w.size() != sources.size()) throw DomainError("order_embedding_check: witness length mismatch");
  }
  if (sources.empty()) return {};

  RatMat rows;
  for (const auto& s : sources) {
    if (!(s.ambient() == sources.front().ambient())) throw DomainError("sources span several ambient groups");
    rows.push_back(s.expand());
  }
  for (const auto& t : images) {
    if (!(t.ambient() == images.front().ambient())) throw DomainError("images span several ambient groups");
  }
  const Integer scale = common_denominator(rows);
  for (const auto& relation : left_kernel(scale_to_integers(rows, scale), 2 * sources.front().ambient().levels())) {
    if (!evaluate(images, relation).is_zero()) return {EmbeddingVerdict::Kind::ill_defined, relation};
  }
  for (const auto& w : witnesses) {
    if (evaluate(sources, w).sign() != evaluate(images, w).sign()) return {EmbeddingVerdict::Kind::order_violated, w};
  }
  return {};
}

const char* to_string(EmbeddingVerdict::Kind kind) {
  switch (kind) {
    case EmbeddingVerdict::Kind::ok:
      return "ok";
    case EmbeddingVerdict::Kind::ill_defined:
      return "ill_defined";
    case EmbeddingVerdict::Kind::order_violated:
      return "order_violated";
  }
  return "unknown";
}

}  // namespace placeforge
