#pragma once

#include <string>

#include "clipsyntel/embedding.hpp"

namespace clipsyntel {

// One text-generation request.
struct LlmRequest {
  std::string prompt;
  double temperature = 0.5;
  int max_output_tokens = 256;

  // Throws InvalidRequest when the prompt is empty, temperature is outside
  // [0, 2], or the token cap is not positive.
  void validate() const;
};

struct BackendResponse {
  std::string text;  // verbatim backend output, trailing whitespace stripped
  std::string backend_id;
  bool cached = false;
};

/**
 * Multimodal embedding capability: maps text and images into one shared
 * vector space. Implementations must be safe to share across concurrent
 * pipeline workers; all calls block until complete.
 */
class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;

  virtual std::string id() const = 0;

  // Fixed dimension of this backend's space. Remote backends may return 0
  // until the first embedding establishes it.
  virtual std::size_t dim() const = 0;

  // Embeds a text snippet. Throws EmptyInput when the input is empty after
  // whitespace normalization.
  virtual EmbeddingVector embed_text(const std::string& input) = 0;

  // Embeds the image referenced by a path. Relative paths resolve against
  // the backend's configured image root.
  virtual EmbeddingVector embed_image(const std::string& image_ref) = 0;
};

/**
 * Text-generation capability. Same sharing rules as EmbeddingBackend.
 */
class LlmBackend {
 public:
  virtual ~LlmBackend() = default;

  virtual std::string id() const = 0;

  virtual BackendResponse complete(const LlmRequest& req) = 0;
};

}  // namespace clipsyntel
