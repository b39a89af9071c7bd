#pragma once

#include <stdexcept>
#include <string>

namespace clipsyntel {

// Every failure the library reports carries one of these codes so callers can
// branch on the condition without parsing messages.
enum class Errc {
  // backends
  empty_input,
  backend_unavailable,
  rate_limited,
  dimension_mismatch,
  file_not_found,
  unsupported_format,
  no_fixture_match,
  invalid_request,
  // dataset
  parse_error,
  duplicate_id,
  missing_field,
  image_missing,
  empty_dataset,
  // disorder identification
  contexts_missing,
  // knowledge generation
  empty_prompt_set,
  // filtration
  zero_vector,
  // summarization
  empty_query,
  empty_completion,
  // metrics
  empty_reference,
  empty_candidate,
  missing_annotations,
  empty_reference_facts,
  // evaluation / orchestration
  id_mismatch,
  missing_gold_summary,
  invalid_config,
  invalid_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace clipsyntel
