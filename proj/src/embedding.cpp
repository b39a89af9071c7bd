#include "clipsyntel/embedding.hpp"

#include <cmath>
#include <string>

#include "clipsyntel/error.hpp"

namespace clipsyntel {

bool EmbeddingVector::all_finite() const {
  for (const double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool EmbeddingVector::is_zero() const {
  for (const double v : values) {
    if (v != 0.0) return false;
  }
  return true;
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::dimension_mismatch, "cosine_similarity: dims " + std::to_string(a.dim()) +
                                              " vs " + std::to_string(b.dim()));
  }
  if (a.dim() == 0) {
    throw Error(Errc::dimension_mismatch, "cosine_similarity: empty vectors");
  }
  double dot = 0.0;
  double ss_a = 0.0;
  double ss_b = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    ss_a += a.values[i] * a.values[i];
    ss_b += b.values[i] * b.values[i];
  }
  if (ss_a == 0.0 || ss_b == 0.0) {
    throw Error(Errc::zero_vector, "cosine_similarity: zero-magnitude vector");
  }
  return dot / std::sqrt(ss_a * ss_b);
}

}  // namespace clipsyntel
