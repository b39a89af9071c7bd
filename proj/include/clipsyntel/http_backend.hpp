#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <string>

#include "clipsyntel/backends.hpp"

namespace clipsyntel {

// Connection settings shared by the two HTTP backends.
struct HttpBackendConfig {
  std::string base_url;  // e.g. "http://127.0.0.1:8080"
  std::string model;
  std::string api_key;   // sent as a bearer token when non-empty
  int max_attempts = 3;
  int timeout_ms = 30000;
  int backoff_base_ms = 100;      // doubles per retry
  std::size_t expected_dim = 0;   // 0: lock to the first response's dimension
  std::filesystem::path image_root;
};

/**
 * Chat-completion client. POSTs {base_url}/v1/chat/completions with
 * {"model", "messages": [{"role": "user", "content": prompt}], "temperature"}
 * and reads choices[0].message.content.
 *
 * Failed requests retry with exponential backoff up to max_attempts; a run of
 * failures ending in HTTP 429 surfaces RateLimited, anything else
 * BackendUnavailable.
 */
class HttpLlmBackend : public LlmBackend {
 public:
  explicit HttpLlmBackend(HttpBackendConfig config);

  std::string id() const override;
  BackendResponse complete(const LlmRequest& req) override;

  std::uint64_t attempts_made() const { return attempts_.load(); }

 private:
  HttpBackendConfig config_;
  mutable std::atomic<std::uint64_t> attempts_{0};
};

/**
 * Embedding client. POSTs {base_url}/v1/embeddings with {"model", "input"}
 * for text, adding "input_type": "image" and base64 input for images, and
 * reads data[0].embedding. The dimension locks on first use so text and
 * image vectors from one backend always agree.
 */
class HttpEmbeddingBackend : public EmbeddingBackend {
 public:
  explicit HttpEmbeddingBackend(HttpBackendConfig config);

  std::string id() const override;
  std::size_t dim() const override { return locked_dim_.load(); }
  EmbeddingVector embed_text(const std::string& input) override;
  EmbeddingVector embed_image(const std::string& image_ref) override;

  std::uint64_t attempts_made() const { return attempts_.load(); }

 private:
  EmbeddingVector post_embedding(const std::string& body_json);

  HttpBackendConfig config_;
  std::atomic<std::size_t> locked_dim_{0};
  mutable std::atomic<std::uint64_t> attempts_{0};
};

std::string base64_encode(const std::string& bytes);

}  // namespace clipsyntel
