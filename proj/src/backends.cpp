#include "clipsyntel/backends.hpp"

#include "clipsyntel/error.hpp"

namespace clipsyntel {

void LlmRequest::validate() const {
  if (prompt.empty()) {
    throw Error(Errc::invalid_request, "prompt must be non-empty");
  }
  if (!(temperature >= 0.0 && temperature <= 2.0)) {
    throw Error(Errc::invalid_request,
                "temperature " + std::to_string(temperature) + " outside [0, 2]");
  }
  if (max_output_tokens <= 0) {
    throw Error(Errc::invalid_request, "max_output_tokens must be positive");
  }
}

}  // namespace clipsyntel
