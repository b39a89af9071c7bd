#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clipsyntel/backends.hpp"
#include "clipsyntel/taxonomy.hpp"

namespace clipsyntel {

// Candidates ranked by cosine similarity to the image embedding, best first.
// Ties resolve to the disorder declared earlier in the taxonomy.
struct RankedDisorders {
  std::vector<std::pair<DisorderLabel, double>> entries;
  std::size_t k = 0;  // requested length; entries holds min(k, taxonomy size)
};

// Prompt asking the LLM for a one-sentence visual description of a disorder.
std::string describe_disease_prompt(std::string_view disorder_name);

// Builds (or completes) the per-disorder context descriptions by prompting
// the LLM once per disorder that lacks one. All-or-nothing: on backend
// failure the input taxonomy is returned unchanged by virtue of copy-in /
// copy-out semantics.
DisorderTaxonomy build_disorder_contexts(const DisorderTaxonomy& taxonomy, LlmBackend& llm,
                                         double temperature = 0.5, int max_output_tokens = 256);

// Ranks all taxonomy disorders by cosine similarity between the image vector
// and the embedded context description, returning the top k. Matches a
// brute-force full sort truncated to k.
RankedDisorders classify_topk(const EmbeddingVector& image_vec, const DisorderTaxonomy& taxonomy,
                              EmbeddingBackend& embedder, std::size_t k);

struct RerankOptions {
  std::string prompt_template;  // {QUERY} and {CANDIDATES} placeholders; empty -> default
  double temperature = 0.5;
  int max_output_tokens = 64;
  bool fallback_on_error = false;  // on backend failure return the top-1 candidate
};

// Asks the LLM to pick the final disorder from the ranked candidates given
// the patient query. The reply is matched by exact normalized name, then by
// substring; anything else falls back to the top-1 candidate with a warning.
DisorderLabel rerank_with_llm(const std::string& query, const RankedDisorders& candidates,
                              LlmBackend& llm, const RerankOptions& options = {});

}  // namespace clipsyntel
