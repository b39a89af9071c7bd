#include "clipsyntel/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "clipsyntel/error.hpp"
#include "clipsyntel/text.hpp"

namespace clipsyntel {

namespace {

struct RecordValidator {
  std::set<std::string> seen_ids;
  std::filesystem::path image_base;
  bool strict = false;

  void check(const MmqsRecord& record, const std::string& where) {
    if (record.id.empty()) {
      throw Error(Errc::missing_field, where + ": id");
    }
    if (!seen_ids.insert(record.id).second) {
      throw Error(Errc::duplicate_id, where + ": id \"" + record.id + "\"");
    }
    if (record.question.empty()) {
      throw Error(Errc::missing_field, where + " (id " + record.id + "): question");
    }
    if (record.gold_summary.empty()) {
      throw Error(Errc::missing_field, where + " (id " + record.id + "): summary");
    }
    if (record.image_ref.empty()) {
      throw Error(Errc::missing_field, where + " (id " + record.id + "): image_ref");
    }
    if (strict) {
      std::filesystem::path img(record.image_ref);
      if (img.is_relative()) img = image_base / img;
      std::error_code ec;
      if (!std::filesystem::exists(img, ec)) {
        throw Error(Errc::image_missing, where + " (id " + record.id + "): " + img.string());
      }
    }
  }
};

std::string get_string_field(const nlohmann::json& obj, const char* name, const std::string& where) {
  if (!obj.contains(name) || obj.at(name).is_null()) {
    throw Error(Errc::missing_field, where + ": " + name);
  }
  if (!obj.at(name).is_string()) {
    throw Error(Errc::parse_error, where + ": field " + name + " must be a string");
  }
  return obj.at(name).get<std::string>();
}

std::vector<MmqsRecord> load_jsonl(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::file_not_found, path.string());
  }
  std::vector<MmqsRecord> records;
  RecordValidator validator{{}, path.parent_path(), strict};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(lineno);
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::parse_error, where + ": " + e.what());
    }
    if (!obj.is_object()) {
      throw Error(Errc::parse_error, where + ": expected a JSON object");
    }
    MmqsRecord record;
    record.id = get_string_field(obj, "id", where);
    record.question = get_string_field(obj, "question", where);
    record.image_ref = get_string_field(obj, "image_ref", where);
    record.gold_summary = get_string_field(obj, "summary", where);
    if (obj.contains("disorder") && !obj.at("disorder").is_null()) {
      record.disorder = obj.at("disorder").get<std::string>();
    }
    if (obj.contains("category") && !obj.at("category").is_null()) {
      const auto cat = parse_category(obj.at("category").get<std::string>());
      if (!cat) {
        throw Error(Errc::parse_error,
                    where + ": unknown category \"" + obj.at("category").get<std::string>() + "\"");
      }
      record.category = *cat;
    }
    validator.check(record, where);
    records.push_back(std::move(record));
  }
  return records;
}

// Minimal RFC 4180 reader: quoted fields, doubled quotes, embedded commas
// and newlines.
std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_has_data = false;
  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_has_data = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_has_data = true;
        break;
      case '\r':
        break;
      case '\n':
        if (row_has_data || !field.empty()) {
          row.push_back(std::move(field));
          rows.push_back(std::move(row));
        }
        field.clear();
        row.clear();
        row_has_data = false;
        break;
      default:
        field.push_back(c);
        row_has_data = true;
    }
  }
  if (row_has_data || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string canonical_header(std::string_view h) {
  return text::to_lower(text::normalize_whitespace(h));
}

std::vector<MmqsRecord> load_csv(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::file_not_found, path.string());
  }
  const auto rows = read_csv(in);
  if (rows.empty()) {
    return {};
  }
  std::map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    columns[canonical_header(rows[0][i])] = i;
  }
  const auto column = [&](std::initializer_list<const char*> names) -> std::optional<std::size_t> {
    for (const char* name : names) {
      if (const auto it = columns.find(name); it != columns.end()) return it->second;
    }
    return std::nullopt;
  };
  const auto question_col = column({"question"});
  const auto summary_col = column({"summary"});
  const auto image_col = column({"relative image path", "image_ref", "image ref"});
  if (!question_col) throw Error(Errc::missing_field, "csv header: Question");
  if (!summary_col) throw Error(Errc::missing_field, "csv header: Summary");
  if (!image_col) throw Error(Errc::missing_field, "csv header: Relative Image Path");
  const auto id_col = column({"id"});
  const auto disorder_col = column({"disorder"});
  const auto category_col = column({"category"});

  std::vector<MmqsRecord> records;
  RecordValidator validator{{}, path.parent_path(), strict};
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = "row " + std::to_string(r + 1);
    const auto cell = [&](std::size_t col) -> std::string {
      if (col >= row.size()) {
        throw Error(Errc::parse_error, where + ": expected at least " + std::to_string(col + 1) +
                                           " columns, got " + std::to_string(row.size()));
      }
      return row[col];
    };
    MmqsRecord record;
    record.id = id_col ? cell(*id_col) : "row" + std::to_string(r);
    record.question = cell(*question_col);
    record.gold_summary = cell(*summary_col);
    record.image_ref = cell(*image_col);
    if (disorder_col && *disorder_col < row.size() && !row[*disorder_col].empty()) {
      record.disorder = row[*disorder_col];
    }
    if (category_col && *category_col < row.size() && !row[*category_col].empty()) {
      const auto cat = parse_category(row[*category_col]);
      if (!cat) {
        throw Error(Errc::parse_error, where + ": unknown category \"" + row[*category_col] + "\"");
      }
      record.category = *cat;
    }
    validator.check(record, where);
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

std::string to_string(Category c) {
  switch (c) {
    case Category::ent: return "ENT";
    case Category::eye: return "EYE";
    case Category::limb: return "LIMB";
    case Category::skin: return "SKIN";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view s) {
  const std::string up = text::to_lower(text::normalize_whitespace(s));
  if (up == "ent") return Category::ent;
  if (up == "eye") return Category::eye;
  if (up == "limb") return Category::limb;
  if (up == "skin") return Category::skin;
  return std::nullopt;
}

std::optional<DatasetFormat> parse_dataset_format(std::string_view s) {
  const std::string low = text::to_lower(text::normalize_whitespace(s));
  if (low == "jsonl") return DatasetFormat::jsonl;
  if (low == "csv") return DatasetFormat::csv;
  return std::nullopt;
}

std::vector<MmqsRecord> load_dataset(const std::filesystem::path& path, DatasetFormat format,
                                     bool strict) {
  return format == DatasetFormat::jsonl ? load_jsonl(path, strict) : load_csv(path, strict);
}

void save_dataset(const std::vector<MmqsRecord>& records, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::invalid_config, "cannot write dataset file: " + path.string());
  }
  for (const MmqsRecord& record : records) {
    nlohmann::ordered_json obj;
    obj["id"] = record.id;
    obj["question"] = record.question;
    obj["image_ref"] = record.image_ref;
    obj["summary"] = record.gold_summary;
    obj["disorder"] = record.disorder ? nlohmann::json(*record.disorder) : nlohmann::json(nullptr);
    obj["category"] =
        record.category ? nlohmann::json(to_string(*record.category)) : nlohmann::json(nullptr);
    out << obj.dump() << '\n';
  }
}

DatasetStats compute_stats(const std::vector<MmqsRecord>& records) {
  if (records.empty()) {
    throw Error(Errc::empty_dataset, "compute_stats needs at least one record");
  }
  DatasetStats stats;
  stats.record_count = records.size();
  std::vector<std::size_t> question_words;
  std::vector<std::size_t> summary_words;
  question_words.reserve(records.size());
  summary_words.reserve(records.size());
  for (const MmqsRecord& record : records) {
    question_words.push_back(text::count_words(record.question));
    summary_words.push_back(text::count_words(record.gold_summary));
    if (record.category) {
      ++stats.per_category_counts[*record.category];
    }
  }
  const auto lower_median = [](std::vector<std::size_t>& v) {
    const std::size_t mid = (v.size() - 1) / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    return v[mid];
  };
  stats.median_question_words = lower_median(question_words);
  stats.median_summary_words = lower_median(summary_words);
  return stats;
}

}  // namespace clipsyntel
