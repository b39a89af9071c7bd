#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clipsyntel/dataset.hpp"

namespace clipsyntel {

// One visually identifiable condition the classifier can predict.
struct DisorderLabel {
  std::string name;  // canonical lowercase, e.g. "swollen tonsils"
  Category category = Category::skin;

  bool operator==(const DisorderLabel&) const = default;
};

/**
 * The catalog of disorders the pipeline classifies against, in declaration
 * order (which also breaks similarity ties), plus the per-disorder context
 * descriptions produced by the description-building step.
 *
 * Immutable once contexts are built; share freely across workers.
 */
class DisorderTaxonomy {
 public:
  DisorderTaxonomy() = default;

  // Normalizes names to lowercase and rejects empty or duplicate entries.
  explicit DisorderTaxonomy(std::vector<DisorderLabel> disorders);

  // The stock catalog: 14 disorders across ENT/EYE/LIMB/SKIN. Extend via a
  // config file when more are needed.
  static DisorderTaxonomy builtin();

  // JSON config: {"disorders": [{"name", "category"}], "contexts": {...}}.
  static DisorderTaxonomy load(const std::filesystem::path& file);

  const std::vector<DisorderLabel>& disorders() const { return disorders_; }
  std::size_t size() const { return disorders_.size(); }
  bool empty() const { return disorders_.empty(); }

  const DisorderLabel* find(std::string_view name) const;

  bool has_context(std::string_view name) const;
  // Throws ContextsMissing when no description has been built for `name`.
  const std::string& context(std::string_view name) const;
  void set_context(std::string_view name, std::string description);
  bool contexts_complete() const;

 private:
  std::vector<DisorderLabel> disorders_;
  std::map<std::string, std::string, std::less<>> contexts_;
};

}  // namespace clipsyntel
