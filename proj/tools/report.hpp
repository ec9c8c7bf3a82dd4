#ifndef TELUGU_ENTROPY_TOOLS_REPORT_HPP
#define TELUGU_ENTROPY_TOOLS_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace telugu_entropy::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Reproducibility envelope written into every report.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::string mapping = "builtin";
  std::uint64_t seed = 0;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::map<std::string, std::string> flags;
  std::string version = kToolVersion;
  std::string digest;  // "sha256:<hex>" over the input bytes
};

/// SHA-256 over every input file, each framed by its 8-byte little-endian
/// length, in the order given.
std::string content_digest(const std::vector<std::filesystem::path>& inputs);

using Cell = std::variant<std::string, std::uint64_t, double>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kCsv, kJson };

/// Shortest decimal that parses back to the same double; locale independent.
std::string format_double(double v);

/// CSV: manifest as '# key: value' lines, then header and rows, '\n' endings.
void write_csv(std::ostream& out, const RunManifest& manifest, const Table& table);

/// JSON: {"manifest": {...}, "columns": [...], "rows": [{...}, ...]}.
void write_json(std::ostream& out, const RunManifest& manifest, const Table& table);

void write_table(std::ostream& out, Format format, const RunManifest& manifest, const Table& table);

std::string manifest_json(const RunManifest& manifest);

}  // namespace telugu_entropy::cli

#endif
