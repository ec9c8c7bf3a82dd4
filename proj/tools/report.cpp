#include "report.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <memory>
#include <system_error>

#include "json.hpp"
#include "telugu_entropy/corpus_stats.hpp"
#include "telugu_entropy/error.hpp"

namespace telugu_entropy::cli {

std::string content_digest(const std::vector<std::filesystem::path>& inputs) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::kIoError, "sha256 unavailable");
  for (const auto& path : inputs) {
    const std::string bytes = read_file(path);
    std::uint64_t len = bytes.size();
    unsigned char frame[8];
    for (int i = 0; i < 8; ++i) frame[i] = static_cast<unsigned char>(len >> (8 * i));
    EVP_DigestUpdate(ctx.get(), frame, sizeof frame);
    EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size());
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int md_len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &md_len);
  std::string hex = "sha256:";
  char byte[3];
  for (unsigned int i = 0; i < md_len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", md[i]);
    hex += byte;
  }
  return hex;
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* u = std::get_if<std::uint64_t>(&c)) return std::to_string(*u);
  return format_double(std::get<double>(c));
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s.push_back(sep);
    s += parts[i];
  }
  return s;
}

nlohmann::ordered_json manifest_object(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["inputs"] = m.inputs;
  j["mapping"] = m.mapping;
  j["seed"] = m.seed;
  j["n_min"] = m.n_min;
  j["n_max"] = m.n_max;
  j["flags"] = m.flags;
  j["version"] = m.version;
  j["digest"] = m.digest;
  return j;
}

}  // namespace

void write_csv(std::ostream& out, const RunManifest& m, const Table& table) {
  std::vector<std::string> flags;
  for (const auto& [k, v] : m.flags) flags.push_back(k + "=" + v);
  out << "# command: " << m.command << '\n'
      << "# inputs: " << join(m.inputs, ';') << '\n'
      << "# mapping: " << m.mapping << '\n'
      << "# seed: " << m.seed << '\n'
      << "# n_range: " << m.n_min << '-' << m.n_max << '\n'
      << "# flags: " << join(flags, ';') << '\n'
      << "# version: " << m.version << '\n'
      << "# digest: " << m.digest << '\n';
  out << join(table.header, ',') << '\n';
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(cell_text(c));
    out << join(cells, ',') << '\n';
  }
}

void write_json(std::ostream& out, const RunManifest& m, const Table& table) {
  nlohmann::ordered_json doc;
  doc["manifest"] = manifest_object(m);
  doc["columns"] = table.header;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i)
      std::visit([&](const auto& v) { r[table.header[i]] = v; }, row[i]);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, Format format, const RunManifest& m, const Table& table) {
  if (format == Format::kCsv)
    write_csv(out, m, table);
  else
    write_json(out, m, table);
}

std::string manifest_json(const RunManifest& m) { return manifest_object(m).dump(2) + "\n"; }

}  // namespace telugu_entropy::cli
