#include "clipsyntel/backend_cache.hpp"

#include <utility>

#include "json.hpp"

#include "clipsyntel/error.hpp"
#include "clipsyntel/text.hpp"

namespace clipsyntel {

namespace {

std::string embedding_to_payload(const EmbeddingVector& vec) {
  return nlohmann::json(vec.values).dump();
}

EmbeddingVector embedding_from_payload(const std::string& payload) {
  EmbeddingVector vec;
  const auto doc = nlohmann::json::parse(payload);
  vec.values = doc.get<std::vector<double>>();
  return vec;
}

}  // namespace

ResponseCache::ResponseCache(std::filesystem::path file) {
  if (file.has_parent_path()) {
    std::filesystem::create_directories(file.parent_path());
  }
  std::ifstream in(file);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json entry;
    try {
      entry = nlohmann::json::parse(line);
      entries_[make_key(entry.at("backend").get<std::string>(), entry.at("op").get<std::string>(),
                        entry.at("payload").get<std::string>())] =
          entry.at("value").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse_error,
                  "cache file " + file.string() + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  in.close();
  out_.open(file, std::ios::app);
  if (!out_) {
    throw Error(Errc::invalid_config, "cannot open cache file for append: " + file.string());
  }
}

std::string ResponseCache::make_key(const std::string& backend_id, const std::string& op,
                                    const std::string& payload) {
  std::string key;
  key.reserve(backend_id.size() + op.size() + payload.size() + 2);
  key.append(backend_id).push_back('\x1f');
  key.append(op).push_back('\x1f');
  key.append(payload);
  return key;
}

std::optional<std::string> ResponseCache::get(const std::string& backend_id, const std::string& op,
                                              const std::string& payload) {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(make_key(backend_id, op, payload));
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void ResponseCache::put(const std::string& backend_id, const std::string& op,
                        const std::string& payload, const std::string& value) {
  std::lock_guard lock(mutex_);
  const std::string key = make_key(backend_id, op, payload);
  if (!entries_.emplace(key, value).second) {
    return;  // first write wins; repeated puts are no-ops
  }
  if (out_.is_open()) {
    nlohmann::ordered_json entry;
    entry["key"] = text::fnv1a64(key);
    entry["backend"] = backend_id;
    entry["op"] = op;
    entry["payload"] = payload;
    entry["value"] = value;
    out_ << entry.dump() << '\n';
    out_.flush();
  }
}

std::size_t ResponseCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

CachedEmbeddingBackend::CachedEmbeddingBackend(std::shared_ptr<EmbeddingBackend> inner,
                                               std::shared_ptr<ResponseCache> cache)
    : inner_(std::move(inner)), cache_(std::move(cache)) {}

EmbeddingVector CachedEmbeddingBackend::cached_embed(const std::string& op,
                                                     const std::string& payload) {
  if (auto hit = cache_->get(inner_->id(), op, payload)) {
    return embedding_from_payload(*hit);
  }
  const EmbeddingVector vec =
      op == "embed_text" ? inner_->embed_text(payload) : inner_->embed_image(payload);
  cache_->put(inner_->id(), op, payload, embedding_to_payload(vec));
  return vec;
}

EmbeddingVector CachedEmbeddingBackend::embed_text(const std::string& input) {
  return cached_embed("embed_text", input);
}

EmbeddingVector CachedEmbeddingBackend::embed_image(const std::string& image_ref) {
  return cached_embed("embed_image", image_ref);
}

CachedLlmBackend::CachedLlmBackend(std::shared_ptr<LlmBackend> inner,
                                   std::shared_ptr<ResponseCache> cache)
    : inner_(std::move(inner)), cache_(std::move(cache)) {}

BackendResponse CachedLlmBackend::complete(const LlmRequest& req) {
  req.validate();
  nlohmann::ordered_json payload;
  payload["prompt"] = req.prompt;
  payload["temperature"] = req.temperature;
  payload["max_output_tokens"] = req.max_output_tokens;
  const std::string payload_str = payload.dump();

  if (auto hit = cache_->get(inner_->id(), "complete", payload_str)) {
    return BackendResponse{*hit, inner_->id(), true};
  }
  BackendResponse res = inner_->complete(req);
  cache_->put(inner_->id(), "complete", payload_str, res.text);
  return res;
}

}  // namespace clipsyntel
