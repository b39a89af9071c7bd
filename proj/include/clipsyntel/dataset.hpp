#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clipsyntel {

// The four disorder groups records and taxonomy labels are organized into.
enum class Category { ent, eye, limb, skin };

std::string to_string(Category c);
std::optional<Category> parse_category(std::string_view s);  // case-insensitive

// One dataset sample: a patient query paired with an image of the condition
// and an annotated gold summary. disorder/category are present only on
// annotated records.
struct MmqsRecord {
  std::string id;
  std::string question;
  std::string image_ref;  // relative to the dataset file's directory
  std::string gold_summary;
  std::optional<std::string> disorder;
  std::optional<Category> category;

  bool operator==(const MmqsRecord&) const = default;
};

struct DatasetStats {
  std::size_t record_count = 0;
  std::size_t median_question_words = 0;  // lower median on even counts
  std::size_t median_summary_words = 0;
  std::map<Category, std::size_t> per_category_counts;
};

enum class DatasetFormat { jsonl, csv };

std::optional<DatasetFormat> parse_dataset_format(std::string_view s);

// Loads and validates records, preserving file order. Every malformed record
// produces exactly one typed error naming its line/row. With strict=true the
// referenced image files must exist on disk.
std::vector<MmqsRecord> load_dataset(const std::filesystem::path& path, DatasetFormat format,
                                     bool strict = false);

// Writes records as canonical JSONL (one object per line, UTF-8).
void save_dataset(const std::vector<MmqsRecord>& records, const std::filesystem::path& path);

DatasetStats compute_stats(const std::vector<MmqsRecord>& records);

}  // namespace clipsyntel
