#include "clipsyntel/http_backend.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

#include "httplib.h"
#include "json.hpp"

#include "clipsyntel/error.hpp"
#include "clipsyntel/text.hpp"

namespace clipsyntel {

namespace {

constexpr char kBase64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

struct HttpOutcome {
  int status = 0;        // 0: transport-level failure
  std::string body;
  std::string error;
};

// POSTs JSON once; retry policy lives in post_with_retries.
HttpOutcome post_once(const HttpBackendConfig& config, const std::string& path,
                      const std::string& body) {
  httplib::Client client(config.base_url);
  client.set_connection_timeout(std::chrono::milliseconds(config.timeout_ms));
  client.set_read_timeout(std::chrono::milliseconds(config.timeout_ms));
  client.set_write_timeout(std::chrono::milliseconds(config.timeout_ms));
  httplib::Headers headers;
  if (!config.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config.api_key);
  }
  auto res = client.Post(path, headers, body, "application/json");
  if (!res) {
    return HttpOutcome{0, "", httplib::to_string(res.error())};
  }
  return HttpOutcome{res->status, res->body, ""};
}

std::string post_with_retries(const HttpBackendConfig& config, const std::string& path,
                              const std::string& body, std::atomic<std::uint64_t>& attempts) {
  const int max_attempts = config.max_attempts > 0 ? config.max_attempts : 1;
  HttpOutcome last;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    ++attempts;
    last = post_once(config, path, body);
    if (last.status == 200) {
      return last.body;
    }
    if (attempt < max_attempts) {
      const auto delay = std::chrono::milliseconds(
          static_cast<long long>(config.backoff_base_ms) << (attempt - 1));
      std::this_thread::sleep_for(delay);
    }
  }
  std::ostringstream msg;
  msg << "POST " << config.base_url << path << " failed after " << max_attempts << " attempts";
  if (last.status != 0) {
    msg << " (last status " << last.status << ")";
  } else {
    msg << " (" << last.error << ")";
  }
  throw Error(last.status == 429 ? Errc::rate_limited : Errc::backend_unavailable, msg.str());
}

nlohmann::json parse_response(const std::string& body, const std::string& what) {
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::backend_unavailable, what + ": malformed response: " + e.what());
  }
}

}  // namespace

std::string base64_encode(const std::string& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 2 < bytes.size()) {
    const unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                       (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                       static_cast<unsigned char>(bytes[i + 2]);
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
    out.push_back(kBase64Alphabet[(v >> 6) & 63]);
    out.push_back(kBase64Alphabet[v & 63]);
    i += 3;
  }
  const std::size_t rest = bytes.size() - i;
  if (rest == 1) {
    const unsigned v = static_cast<unsigned char>(bytes[i]) << 16;
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
    out.append("==");
  } else if (rest == 2) {
    const unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                       (static_cast<unsigned char>(bytes[i + 1]) << 8);
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
    out.push_back(kBase64Alphabet[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

HttpLlmBackend::HttpLlmBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (config_.base_url.empty()) {
    throw Error(Errc::invalid_config, "http llm backend needs a base_url");
  }
}

std::string HttpLlmBackend::id() const {
  return "http-llm:" + (config_.model.empty() ? config_.base_url : config_.model);
}

BackendResponse HttpLlmBackend::complete(const LlmRequest& req) {
  req.validate();
  nlohmann::ordered_json body;
  body["model"] = config_.model;
  body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", req.prompt}}});
  body["temperature"] = req.temperature;

  const std::string raw = post_with_retries(config_, "/v1/chat/completions", body.dump(), attempts_);
  const auto doc = parse_response(raw, "chat completion");
  try {
    std::string content = doc.at("choices").at(0).at("message").at("content").get<std::string>();
    return BackendResponse{text::strip_trailing_whitespace(content), id(), false};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::backend_unavailable, std::string("chat completion: unexpected schema: ") + e.what());
  }
}

HttpEmbeddingBackend::HttpEmbeddingBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (config_.base_url.empty()) {
    throw Error(Errc::invalid_config, "http embedding backend needs a base_url");
  }
  locked_dim_ = config_.expected_dim;
}

std::string HttpEmbeddingBackend::id() const {
  return "http-embedding:" + (config_.model.empty() ? config_.base_url : config_.model);
}

EmbeddingVector HttpEmbeddingBackend::post_embedding(const std::string& body_json) {
  const std::string raw = post_with_retries(config_, "/v1/embeddings", body_json, attempts_);
  const auto doc = parse_response(raw, "embedding");
  EmbeddingVector vec;
  try {
    vec.values = doc.at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::backend_unavailable, std::string("embedding: unexpected schema: ") + e.what());
  }
  if (vec.dim() == 0 || !vec.all_finite()) {
    throw Error(Errc::backend_unavailable, "embedding: empty or non-finite vector");
  }
  std::size_t expected = locked_dim_.load();
  if (expected == 0) {
    locked_dim_.compare_exchange_strong(expected, vec.dim());
    expected = locked_dim_.load();
  }
  if (vec.dim() != expected) {
    throw Error(Errc::dimension_mismatch, "embedding: backend returned dim " +
                                              std::to_string(vec.dim()) + ", expected " +
                                              std::to_string(expected));
  }
  return vec;
}

EmbeddingVector HttpEmbeddingBackend::embed_text(const std::string& input) {
  if (text::normalize_whitespace(input).empty()) {
    throw Error(Errc::empty_input, "embed_text: empty input");
  }
  nlohmann::ordered_json body;
  body["model"] = config_.model;
  body["input"] = input;
  return post_embedding(body.dump());
}

EmbeddingVector HttpEmbeddingBackend::embed_image(const std::string& image_ref) {
  if (image_ref.empty()) {
    throw Error(Errc::empty_input, "embed_image: empty image reference");
  }
  std::filesystem::path path(image_ref);
  if (path.is_relative() && !config_.image_root.empty()) {
    path = config_.image_root / path;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::file_not_found, "embed_image: " + path.string());
  }
  std::ostringstream bytes;
  bytes << in.rdbuf();
  if (bytes.str().empty()) {
    throw Error(Errc::unsupported_format, "embed_image: " + path.string() + " is empty");
  }
  nlohmann::ordered_json body;
  body["model"] = config_.model;
  body["input"] = base64_encode(bytes.str());
  body["input_type"] = "image";
  return post_embedding(body.dump());
}

}  // namespace clipsyntel
