#pragma once

#include <cstddef>
#include <vector>

namespace clipsyntel {

// A point in the shared text-image space produced by an embedding backend.
// Text and image embeddings of one backend always have the same dimension,
// so cosine similarity between them measures cross-modal relevance.
struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dim() const { return values.size(); }
  bool all_finite() const;
  bool is_zero() const;

  bool operator==(const EmbeddingVector& other) const = default;
};

// Cosine similarity of two vectors with equal dimension. The denominator is
// computed as sqrt(|a|^2 * |b|^2) so integer-valued test vectors with
// perfect-square norms produce exact results.
// Throws DimensionMismatch on unequal dims, ZeroVector if either is all-zero.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

}  // namespace clipsyntel
