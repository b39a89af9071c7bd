#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "clipsyntel/backends.hpp"

namespace clipsyntel {

// One canned completion rule. A rule fires when `pattern` occurs anywhere in
// the prompt; when several rules fire, the longest pattern wins (ties go to
// the earlier rule). `{prompt}` inside the response expands to the full
// prompt text.
struct MockLlmRule {
  std::string pattern;
  std::string response;
};

// Fixture tables for the deterministic mock backends, loadable from one JSON
// file with optional "text", "image" and "llm" sections.
struct MockFixtures {
  std::map<std::string, EmbeddingVector> text_vectors;
  std::map<std::string, EmbeddingVector> image_vectors;
  std::vector<MockLlmRule> llm_rules;

  static MockFixtures load(const std::filesystem::path& file);
};

/**
 * Deterministic embedding backend for offline runs and tests.
 *
 * Lookup order: exact fixture key, then a pseudo-random unit vector seeded by
 * a stable 64-bit hash of the input, so unfixtured inputs still embed
 * reproducibly. Pure after construction; safe to share across threads.
 */
class MockEmbeddingBackend : public EmbeddingBackend {
 public:
  struct Options {
    std::size_t dim = 32;              // used when the fixture table is empty
    std::filesystem::path image_root;  // relative image refs resolve against this
  };

  MockEmbeddingBackend() = default;
  explicit MockEmbeddingBackend(MockFixtures fixtures, Options options = {});

  std::string id() const override { return "mock-embedding"; }
  std::size_t dim() const override { return dim_; }
  EmbeddingVector embed_text(const std::string& input) override;
  EmbeddingVector embed_image(const std::string& image_ref) override;

  std::uint64_t calls() const { return calls_.load(); }

 private:
  EmbeddingVector seeded_unit_vector(const std::string& key) const;

  std::map<std::string, EmbeddingVector> text_vectors_;
  std::map<std::string, EmbeddingVector> image_vectors_;
  std::size_t dim_ = 32;
  std::filesystem::path image_root_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

/**
 * Deterministic text-generation backend. Resolves prompts against the rule
 * table; unmatched prompts produce a deterministic fallback completion, or
 * NoFixtureMatch in strict mode.
 */
class MockLlmBackend : public LlmBackend {
 public:
  struct Options {
    bool strict = false;
  };

  MockLlmBackend() = default;
  explicit MockLlmBackend(std::vector<MockLlmRule> rules, Options options = {});

  std::string id() const override { return "mock-llm"; }
  BackendResponse complete(const LlmRequest& req) override;

  std::uint64_t calls() const { return calls_.load(); }

 private:
  std::vector<MockLlmRule> rules_;
  Options options_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace clipsyntel
