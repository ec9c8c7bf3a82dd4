#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "telugu_entropy/telugu_entropy.hpp"

namespace telugu_entropy::cli {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::optional<std::string> mapping;
  double base = 2.0;
  std::uint64_t seed = 0;
  std::string short_word_policy = "whole";
  std::optional<std::size_t> char_budget;
  std::optional<std::string> out;
  std::string format = "csv";
};

struct Context {
  GlobalOptions global;
  MappingTable table = MappingTable::builtin();
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  ShortWordPolicy policy() const {
    return global.short_word_policy == "skip" ? ShortWordPolicy::kSkip : ShortWordPolicy::kWholeWord;
  }
  Format format() const { return global.format == "json" ? Format::kJson : Format::kCsv; }

  RunManifest manifest(const std::string& command, const std::vector<std::string>& inputs) const {
    RunManifest m;
    m.command = command;
    m.inputs = inputs;
    m.mapping = global.mapping ? *global.mapping : "builtin";
    m.seed = global.seed;
    m.flags["base"] = format_double(global.base);
    m.flags["short_word_policy"] = global.short_word_policy;
    if (global.char_budget) m.flags["char_budget"] = std::to_string(*global.char_budget);
    std::vector<fs::path> paths(inputs.begin(), inputs.end());
    m.digest = content_digest(paths);
    return m;
  }

  Corpus corpus(const std::vector<std::string>& inputs) const {
    std::vector<fs::path> paths(inputs.begin(), inputs.end());
    return ingest(paths, table, global.char_budget);
  }

  // Writes to `path` (or the --out path, or stdout when neither is set).
  void emit(const std::function<void(std::ostream&)>& body,
            const std::optional<std::string>& path) const {
    if (!path) {
      body(*out);
      return;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::kIoError, "cannot write " + *path);
    body(file);
    file.flush();
    if (!file) throw Error(ErrorCode::kIoError, "failed writing " + *path);
  }

  void emit_table(const RunManifest& m, const Table& t,
                  const std::optional<std::string>& path) const {
    emit([&](std::ostream& os) { write_table(os, format(), m, t); }, path);
  }

  // Text outputs cannot carry the manifest inline; it goes next to them.
  void emit_sidecar(const RunManifest& m) const {
    if (!global.out) return;
    emit([&](std::ostream& os) { os << manifest_json(m); }, *global.out + ".manifest.json");
  }
};

Table entropy_table(const std::vector<EntropyReport>& reports) {
  Table t{{"mode", "n", "entropy_bits", "per_syllable_rate", "distinct", "total_tokens", "log_base"},
          {}};
  for (const auto& r : reports)
    t.rows.push_back({std::string(to_string(r.mode)), std::uint64_t{r.n}, r.entropy_bits,
                      r.per_syllable_rate, std::uint64_t{r.distinct}, r.total_tokens, r.log_base});
  return t;
}

Table histogram_table(const WordLengthHistogram& h) {
  Table t{{"length", "count", "fraction", "cumulative_fraction"}, {}};
  double cumulative = 0;
  for (const auto& [len, f] : h.fractions) {
    cumulative += f;
    t.rows.push_back({std::uint64_t{len}, h.counts.at(len), f, cumulative});
  }
  return t;
}

Table letter_csv_table(const std::vector<LetterFrequencyRow>& rows) {
  Table t{{"symbol", "count", "percent"}, {}};
  for (const auto& r : rows) {
    const std::string sym = r.symbol == ' ' ? "space" : std::string(1, r.symbol);
    t.rows.push_back({sym, r.count, r.percent});
  }
  return t;
}

std::string derived_path(const std::string& path, const std::string& suffix) {
  fs::path p(path);
  const std::string ext = p.extension().string();
  p.replace_extension();
  return p.string() + suffix + ext;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  GlobalOptions& g = ctx.global;

  CLI::App app{"Telugu transliteration, syllable segmentation and entropy statistics",
               "telugu-entropy"};
  app.require_subcommand(1);
  app.add_option("--mapping", g.mapping, "Mapping TSV (telugu_unit, roman_token, category)");
  app.add_option("--base", g.base, "Logarithm base for entropy")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for jumbling")->capture_default_str();
  app.add_option("--short-word-policy", g.short_word_policy,
                 "Words with fewer than n syllables: whole or skip")
      ->check(CLI::IsMember({"whole", "skip"}))
      ->capture_default_str();
  app.add_option("--char-budget", g.char_budget, "Cap on Roman characters (whole words)");
  app.add_option("--out", g.out, "Output path (default stdout)");
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.fallthrough();

  std::function<void()> action;

  // translit
  auto* translit = app.add_subcommand("translit", "Convert between Telugu and Roman text");
  std::string translit_in;
  std::string direction = "to-roman";
  translit->add_option("input", translit_in, "Input file")->required();
  translit->add_option("--direction", direction, "to-roman or to-telugu")
      ->check(CLI::IsMember({"to-roman", "to-telugu"}))
      ->capture_default_str();
  translit->callback([&] {
    action = [&] {
      const std::string text = read_file(translit_in);
      const std::string converted =
          direction == "to-roman" ? to_roman(text, ctx.table) : to_telugu(text, ctx.table);
      auto m = ctx.manifest("translit", {translit_in});
      m.flags["direction"] = direction;
      ctx.emit([&](std::ostream& os) { os << converted; }, g.out);
      ctx.emit_sidecar(m);
    };
  });

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Character or n-syllable entropy");
  std::vector<std::string> entropy_in;
  std::string mode = "syllable";
  std::size_t n_min = 1;
  std::size_t n_max = 6;
  entropy->add_option("inputs", entropy_in, "Telugu text files")->required();
  entropy->add_option("--mode", mode, "char or syllable")
      ->check(CLI::IsMember({"char", "syllable"}))
      ->capture_default_str();
  entropy->add_option("--n-min", n_min, "Smallest window size")->capture_default_str();
  entropy->add_option("--n-max", n_max, "Largest window size")->capture_default_str();
  entropy->callback([&] {
    if (n_min < 1 || n_min > n_max || n_max > 12)
      throw UsageError("need 1 <= n-min <= n-max <= 12");
    action = [&] {
      const Corpus corpus = ctx.corpus(entropy_in);
      std::vector<EntropyReport> reports;
      if (mode == "char") {
        reports.push_back(char_entropy(corpus.char_stream(), g.base));
      } else {
        const std::vector<Word> words = corpus.all_words();
        for (std::size_t n = n_min; n <= n_max; ++n)
          reports.push_back(syllable_ngram_entropy(words, {n, ctx.policy()}, g.base));
      }
      auto m = ctx.manifest("entropy", entropy_in);
      m.n_min = mode == "char" ? 1 : n_min;
      m.n_max = mode == "char" ? 1 : n_max;
      m.flags["mode"] = mode;
      ctx.emit_table(m, entropy_table(reports), g.out);
    };
  });

  // jumble
  auto* jumble = app.add_subcommand("jumble", "Shuffle word interiors, first and last kept");
  std::string jumble_in;
  std::string granularity = "syllable";
  std::size_t min_length = 4;
  jumble->add_option("input", jumble_in, "Telugu or Roman text file")->required();
  jumble->add_option("--granularity", granularity, "char or syllable")
      ->check(CLI::IsMember({"char", "syllable"}))
      ->capture_default_str();
  jumble->add_option("--min-length", min_length, "Shortest word that gets jumbled")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1000}))
      ->capture_default_str();
  jumble->callback([&] {
    action = [&] {
      const std::string roman = to_roman(read_file(jumble_in), ctx.table);
      JumbleConfig cfg{g.seed,
                       granularity == "char" ? Granularity::kChar : Granularity::kSyllable,
                       min_length};
      const std::string jumbled = jumble_text(roman, cfg, ctx.table);
      auto m = ctx.manifest("jumble", {jumble_in});
      m.flags["granularity"] = granularity;
      m.flags["min_length"] = std::to_string(min_length);
      ctx.emit([&](std::ostream& os) { os << jumbled; }, g.out);
      ctx.emit_sidecar(m);
    };
  });

  // stats
  auto* stats = app.add_subcommand("stats", "Letter frequency table and word-length histogram");
  std::vector<std::string> stats_in;
  std::string unit = "akshara";
  std::size_t threshold = 4;
  std::optional<std::string> hist_out;
  stats->add_option("inputs", stats_in, "Telugu text files")->required();
  stats->add_option("--unit", unit, "Word length unit: akshara or char")
      ->check(CLI::IsMember({"akshara", "char"}))
      ->capture_default_str();
  stats->add_option("--threshold", threshold, "Report the fraction of words shorter than this")
      ->capture_default_str();
  stats->add_option("--hist-out", hist_out,
                    "Histogram output (default: --out with a _lengths suffix)");
  stats->callback([&] {
    action = [&] {
      const Corpus corpus = ctx.corpus(stats_in);
      const auto letters = letter_table(corpus);
      const auto hist = word_length_histogram(
          corpus, unit == "char" ? LengthUnit::kChar : LengthUnit::kAkshara);

      auto m = ctx.manifest("stats", stats_in);
      m.flags["unit"] = unit;
      m.flags["threshold"] = std::to_string(threshold);
      std::optional<std::string> hist_path = hist_out;
      if (!hist_path && g.out) hist_path = derived_path(*g.out, "_lengths");

      ctx.emit_table(m, letter_csv_table(letters), g.out);
      if (!hist_path) out << '\n';
      ctx.emit_table(m, histogram_table(hist), hist_path);
      err << "fraction of words shorter than " << threshold << ": "
          << format_double(hist.fraction_below(threshold)) << '\n';
    };
  });

  // graphdata
  auto* graph = app.add_subcommand("graphdata", "Plot-ready series");
  std::vector<std::string> graph_in;
  std::string which;
  std::string graph_granularity = "syllable";
  graph->add_option("inputs", graph_in, "Telugu text files")->required();
  graph->add_option("--which", which, "graph1, graph2, graph3 or graph22")
      ->required()
      ->check(CLI::IsMember({"graph1", "graph2", "graph3", "graph22"}));
  graph->add_option("--granularity", graph_granularity, "Jumble granularity for graph3")
      ->check(CLI::IsMember({"char", "syllable"}))
      ->capture_default_str();
  graph->callback([&] {
    action = [&] {
      const Corpus corpus = ctx.corpus(graph_in);
      const std::vector<Word> words = corpus.all_words();
      auto m = ctx.manifest("graphdata", graph_in);
      m.flags["which"] = which;
      Table t;
      if (which == "graph1") {
        t.header = {"mode", "entropy_bits"};
        t.rows.push_back({std::string("char"), char_entropy(corpus.char_stream(), g.base).entropy_bits});
        t.rows.push_back({std::string("syllable"),
                          syllable_ngram_entropy(words, {1, ctx.policy()}, g.base).entropy_bits});
      } else if (which == "graph2") {
        m.n_max = 6;
        t.header = {"series", "n", "value"};
        std::vector<EntropyReport> reports;
        for (std::size_t n = 1; n <= 6; ++n)
          reports.push_back(syllable_ngram_entropy(words, {n, ctx.policy()}, g.base));
        for (const auto& r : reports)
          t.rows.push_back({std::string("entropy"), std::uint64_t{r.n}, r.entropy_bits});
        for (const auto& r : reports)
          t.rows.push_back({std::string("rate"), std::uint64_t{r.n}, r.per_syllable_rate});
      } else if (which == "graph3") {
        m.n_max = 6;
        m.flags["granularity"] = graph_granularity;
        const std::string original = corpus.char_stream();
        JumbleConfig cfg{g.seed,
                         graph_granularity == "char" ? Granularity::kChar : Granularity::kSyllable};
        const std::string jumbled = jumble_text(original, cfg, ctx.table);
        t.header = {"mode", "n", "original", "jumbled", "delta"};
        auto add = [&](Mode mode, std::size_t n) {
          const auto c = compare_entropy(original, jumbled, mode, {n, ctx.policy()}, g.base, ctx.table);
          t.rows.push_back({std::string(to_string(mode)), std::uint64_t{n}, c.original.entropy_bits,
                            c.jumbled.entropy_bits, c.delta});
        };
        add(Mode::kChar, 1);
        for (std::size_t n = 1; n <= 6; ++n) add(Mode::kSyllable, n);
      } else {
        t = histogram_table(word_length_histogram(corpus, LengthUnit::kAkshara));
      }
      ctx.emit_table(m, t, g.out);
    };
  });

  try {
    app.parse(argc, argv);
    if (!(g.base > 1.0)) throw UsageError("--base must be greater than 1");
    if (g.mapping) ctx.table = load_mapping(fs::path(*g.mapping));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace telugu_entropy::cli
