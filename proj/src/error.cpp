#include "clipsyntel/error.hpp"

namespace clipsyntel {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::backend_unavailable: return "BackendUnavailable";
    case Errc::rate_limited: return "RateLimited";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::file_not_found: return "FileNotFound";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::no_fixture_match: return "NoFixtureMatch";
    case Errc::invalid_request: return "InvalidRequest";
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::missing_field: return "MissingField";
    case Errc::image_missing: return "ImageMissing";
    case Errc::empty_dataset: return "EmptyDataset";
    case Errc::contexts_missing: return "ContextsMissing";
    case Errc::empty_prompt_set: return "EmptyPromptSet";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::empty_query: return "EmptyQuery";
    case Errc::empty_completion: return "EmptyCompletion";
    case Errc::empty_reference: return "EmptyReference";
    case Errc::empty_candidate: return "EmptyCandidate";
    case Errc::missing_annotations: return "MissingAnnotations";
    case Errc::empty_reference_facts: return "EmptyReferenceFacts";
    case Errc::id_mismatch: return "IdMismatch";
    case Errc::missing_gold_summary: return "MissingGoldSummary";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace clipsyntel
