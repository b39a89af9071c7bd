#include "clipsyntel/mock_backend.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"

#include "clipsyntel/error.hpp"
#include "clipsyntel/text.hpp"

namespace clipsyntel {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

EmbeddingVector parse_vector(const nlohmann::json& arr, const std::string& key) {
  if (!arr.is_array() || arr.empty()) {
    throw Error(Errc::invalid_config, "fixture vector for \"" + key + "\" must be a non-empty array");
  }
  EmbeddingVector vec;
  vec.values.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw Error(Errc::invalid_config, "fixture vector for \"" + key + "\" has a non-numeric entry");
    }
    vec.values.push_back(v.get<double>());
  }
  if (!vec.all_finite()) {
    throw Error(Errc::invalid_config, "fixture vector for \"" + key + "\" has a non-finite entry");
  }
  return vec;
}

void check_uniform_dim(const std::map<std::string, EmbeddingVector>& table, std::size_t& dim) {
  for (const auto& [key, vec] : table) {
    if (dim == 0) {
      dim = vec.dim();
    } else if (vec.dim() != dim) {
      throw Error(Errc::invalid_config,
                  "fixture vector for \"" + key + "\" has dim " + std::to_string(vec.dim()) +
                      ", expected " + std::to_string(dim));
    }
  }
}

}  // namespace

MockFixtures MockFixtures::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw Error(Errc::file_not_found, "fixture file " + file.string());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, "fixture file " + file.string() + ": " + e.what());
  }
  MockFixtures fixtures;
  if (doc.contains("text")) {
    for (const auto& [key, value] : doc.at("text").items()) {
      fixtures.text_vectors.emplace(key, parse_vector(value, key));
    }
  }
  if (doc.contains("image")) {
    for (const auto& [key, value] : doc.at("image").items()) {
      fixtures.image_vectors.emplace(key, parse_vector(value, key));
    }
  }
  if (doc.contains("llm")) {
    for (const auto& rule : doc.at("llm")) {
      MockLlmRule r;
      r.pattern = rule.at("pattern").get<std::string>();
      r.response = rule.at("response").get<std::string>();
      if (r.pattern.empty()) {
        throw Error(Errc::invalid_config, "llm fixture rule with empty pattern");
      }
      fixtures.llm_rules.push_back(std::move(r));
    }
  }
  return fixtures;
}

MockEmbeddingBackend::MockEmbeddingBackend(MockFixtures fixtures, Options options)
    : text_vectors_(std::move(fixtures.text_vectors)),
      image_vectors_(std::move(fixtures.image_vectors)),
      image_root_(std::move(options.image_root)) {
  std::size_t fixture_dim = 0;
  check_uniform_dim(text_vectors_, fixture_dim);
  check_uniform_dim(image_vectors_, fixture_dim);
  dim_ = fixture_dim != 0 ? fixture_dim : options.dim;
  if (dim_ == 0) {
    throw Error(Errc::invalid_config, "mock embedding dim must be >= 1");
  }
}

EmbeddingVector MockEmbeddingBackend::seeded_unit_vector(const std::string& key) const {
  std::uint64_t state = text::fnv1a64(key);
  EmbeddingVector vec;
  vec.values.resize(dim_);
  double ss = 0.0;
  do {
    for (std::size_t i = 0; i < dim_; ++i) {
      const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
      vec.values[i] = 2.0 * u - 1.0;
      ss += vec.values[i] * vec.values[i];
    }
  } while (ss == 0.0);
  const double norm = std::sqrt(ss);
  for (double& v : vec.values) v /= norm;
  return vec;
}

EmbeddingVector MockEmbeddingBackend::embed_text(const std::string& input) {
  ++calls_;
  if (text::normalize_whitespace(input).empty()) {
    throw Error(Errc::empty_input, "embed_text: empty input");
  }
  if (const auto it = text_vectors_.find(input); it != text_vectors_.end()) {
    return it->second;
  }
  return seeded_unit_vector("text\x1f" + input);
}

EmbeddingVector MockEmbeddingBackend::embed_image(const std::string& image_ref) {
  ++calls_;
  if (image_ref.empty()) {
    throw Error(Errc::empty_input, "embed_image: empty image reference");
  }
  if (const auto it = image_vectors_.find(image_ref); it != image_vectors_.end()) {
    return it->second;
  }
  std::filesystem::path path(image_ref);
  if (path.is_relative() && !image_root_.empty()) {
    path = image_root_ / path;
  }
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw Error(Errc::file_not_found, "embed_image: " + path.string());
  }
  if (std::filesystem::is_directory(path, ec)) {
    throw Error(Errc::unsupported_format, "embed_image: " + path.string() + " is a directory");
  }
  return seeded_unit_vector("image\x1f" + image_ref);
}

MockLlmBackend::MockLlmBackend(std::vector<MockLlmRule> rules, Options options)
    : rules_(std::move(rules)), options_(options) {}

BackendResponse MockLlmBackend::complete(const LlmRequest& req) {
  ++calls_;
  req.validate();

  const MockLlmRule* best = nullptr;
  for (const MockLlmRule& rule : rules_) {
    if (req.prompt.find(rule.pattern) == std::string::npos) continue;
    if (best == nullptr || rule.pattern.size() > best->pattern.size()) {
      best = &rule;
    }
  }

  std::string out;
  if (best != nullptr) {
    out = best->response;
    for (std::size_t pos = out.find("{prompt}"); pos != std::string::npos;
         pos = out.find("{prompt}", pos + req.prompt.size())) {
      out.replace(pos, 8, req.prompt);
    }
  } else if (options_.strict) {
    throw Error(Errc::no_fixture_match, "no rule matches prompt: " +
                                            req.prompt.substr(0, 80) +
                                            (req.prompt.size() > 80 ? "..." : ""));
  } else {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "Mock completion %016llx.",
                  static_cast<unsigned long long>(text::fnv1a64(req.prompt)));
    out = buf;
  }
  return BackendResponse{text::strip_trailing_whitespace(out), id(), false};
}

}  // namespace clipsyntel
