#include "clipsyntel/taxonomy.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

#include "clipsyntel/error.hpp"
#include "clipsyntel/text.hpp"

namespace clipsyntel {

DisorderTaxonomy::DisorderTaxonomy(std::vector<DisorderLabel> disorders)
    : disorders_(std::move(disorders)) {
  std::set<std::string> seen;
  for (DisorderLabel& label : disorders_) {
    label.name = text::to_lower(text::normalize_whitespace(label.name));
    if (label.name.empty()) {
      throw Error(Errc::invalid_config, "taxonomy: disorder with empty name");
    }
    if (!seen.insert(label.name).second) {
      throw Error(Errc::invalid_config, "taxonomy: duplicate disorder \"" + label.name + "\"");
    }
  }
}

DisorderTaxonomy DisorderTaxonomy::builtin() {
  return DisorderTaxonomy({
      {"lip swelling", Category::ent},
      {"mouth ulcers", Category::ent},
      {"swollen tonsils", Category::ent},
      {"swollen eyes", Category::eye},
      {"eye redness", Category::eye},
      {"itchy eyelids", Category::eye},
      {"edema", Category::limb},
      {"foot swelling", Category::limb},
      {"knee swelling", Category::limb},
      {"hand lumps", Category::limb},
      {"neck swelling", Category::limb},
      {"skin rash", Category::skin},
      {"skin irritation", Category::skin},
      {"skin growth", Category::skin},
  });
}

DisorderTaxonomy DisorderTaxonomy::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw Error(Errc::file_not_found, "taxonomy file " + file.string());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, "taxonomy file " + file.string() + ": " + e.what());
  }
  std::vector<DisorderLabel> labels;
  for (const auto& entry : doc.at("disorders")) {
    DisorderLabel label;
    label.name = entry.at("name").get<std::string>();
    const std::string cat = entry.at("category").get<std::string>();
    const auto parsed = parse_category(cat);
    if (!parsed) {
      throw Error(Errc::parse_error, "taxonomy: unknown category \"" + cat + "\"");
    }
    label.category = *parsed;
    labels.push_back(std::move(label));
  }
  DisorderTaxonomy taxonomy(std::move(labels));
  if (doc.contains("contexts")) {
    for (const auto& [name, description] : doc.at("contexts").items()) {
      taxonomy.set_context(name, description.get<std::string>());
    }
  }
  return taxonomy;
}

const DisorderLabel* DisorderTaxonomy::find(std::string_view name) const {
  const std::string needle = text::to_lower(text::normalize_whitespace(name));
  for (const DisorderLabel& label : disorders_) {
    if (label.name == needle) return &label;
  }
  return nullptr;
}

bool DisorderTaxonomy::has_context(std::string_view name) const {
  return contexts_.find(name) != contexts_.end();
}

const std::string& DisorderTaxonomy::context(std::string_view name) const {
  const auto it = contexts_.find(name);
  if (it == contexts_.end()) {
    throw Error(Errc::contexts_missing, "no context built for \"" + std::string(name) + "\"");
  }
  return it->second;
}

void DisorderTaxonomy::set_context(std::string_view name, std::string description) {
  if (find(name) == nullptr) {
    throw Error(Errc::invalid_argument, "set_context: unknown disorder \"" + std::string(name) + "\"");
  }
  contexts_[std::string(name)] = std::move(description);
}

bool DisorderTaxonomy::contexts_complete() const {
  for (const DisorderLabel& label : disorders_) {
    if (!has_context(label.name)) return false;
  }
  return true;
}

}  // namespace clipsyntel
