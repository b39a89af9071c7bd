#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "clipsyntel/backends.hpp"

namespace clipsyntel {

/**
 * Append-only response cache keyed by (backend_id, operation, request
 * payload). Entries persist as one JSONL file per run directory and are
 * reloaded on open, so a rerun issues no backend calls for requests it has
 * already seen. Entry updates are serialized through one mutex.
 */
class ResponseCache {
 public:
  ResponseCache() = default;  // memory-only
  explicit ResponseCache(std::filesystem::path file);

  std::optional<std::string> get(const std::string& backend_id, const std::string& op,
                                 const std::string& payload);
  void put(const std::string& backend_id, const std::string& op, const std::string& payload,
           const std::string& value);

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }
  std::size_t size() const;

 private:
  static std::string make_key(const std::string& backend_id, const std::string& op,
                              const std::string& payload);

  mutable std::mutex mutex_;
  std::map<std::string, std::string> entries_;
  std::ofstream out_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

// Embedding decorator that consults the cache before the wrapped backend.
class CachedEmbeddingBackend : public EmbeddingBackend {
 public:
  CachedEmbeddingBackend(std::shared_ptr<EmbeddingBackend> inner,
                         std::shared_ptr<ResponseCache> cache);

  std::string id() const override { return inner_->id(); }
  std::size_t dim() const override { return inner_->dim(); }
  EmbeddingVector embed_text(const std::string& input) override;
  EmbeddingVector embed_image(const std::string& image_ref) override;

 private:
  EmbeddingVector cached_embed(const std::string& op, const std::string& payload);

  std::shared_ptr<EmbeddingBackend> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

// LLM decorator; repeated identical requests come back with cached=true and
// text equal to the first response.
class CachedLlmBackend : public LlmBackend {
 public:
  CachedLlmBackend(std::shared_ptr<LlmBackend> inner, std::shared_ptr<ResponseCache> cache);

  std::string id() const override { return inner_->id(); }
  BackendResponse complete(const LlmRequest& req) override;

 private:
  std::shared_ptr<LlmBackend> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

}  // namespace clipsyntel
