// cfconv: exact C-finite sequence toolkit.
//
// Subcommands: terms, guess, rec2gf, gf2rec, selfconv, crossconv,
// table-self, table-cross. Sequences are specified by registry name,
// k-bonacci index, generating-function string, or JSON file.
//
// Exit codes: 0 success, 1 usage/parse error, 2 guess found no recurrence,
// 3 internal-consistency failure (a certified degree bound was violated,
// which means a bug, not bad input).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cfconv/convolve.hpp"
#include "cfconv/families.hpp"
#include "cfconv/guess.hpp"
#include "cfconv/textio.hpp"

using namespace cfconv;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
}

// A sequence spec resolves to either a sequence or a bare generating
// function. `terms` can expand any rational function (x/(1-x) included);
// the convolution commands need a proper GF and convert on demand.
using SpecValue = std::variant<CFiniteSequence, RationalFunction>;

struct ResolvedSpec {
  SpecValue value;
  std::string origin;
};

CFiniteSequence as_sequence(const ResolvedSpec& spec) {
  if (std::holds_alternative<CFiniteSequence>(spec.value))
    return std::get<CFiniteSequence>(spec.value);
  return from_gf(std::get<RationalFunction>(spec.value));
}

std::vector<Rat> spec_terms(const ResolvedSpec& spec, std::size_t n) {
  if (std::holds_alternative<CFiniteSequence>(spec.value))
    return seq_terms(std::get<CFiniteSequence>(spec.value), n);
  return series_expand(std::get<RationalFunction>(spec.value), n);
}

struct SeqSpecOptions {
  std::vector<std::string> positional;
  std::vector<std::string> names;
  std::vector<int> kbonacci;
  std::vector<std::string> gfs;
  std::vector<std::string> json_files;
};

void add_spec_options(CLI::App* cmd, SeqSpecOptions& opts, const std::string& positional_name) {
  cmd->add_option(positional_name, opts.positional,
                  "sequence spec: registry name, generating function, or JSON file");
  cmd->add_option("--seq", opts.names, "named sequence (see `cfconv terms --help` footer)");
  cmd->add_option("--kbonacci", opts.kbonacci, "k-bonacci family member (k >= 1)");
  cmd->add_option("--gf", opts.gfs, "generating function string, e.g. \"x/(1-x-x^2)\"");
  cmd->add_option("--json", opts.json_files,
                  "JSON file: {\"recurrence\": [...], \"initial\": [...]} or {\"gf\": {...}}");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  json j;
  in >> j;
  return j;
}

ResolvedSpec resolve_positional(const std::string& token) {
  // A positional token may be a registry name, a readable JSON file, or a
  // generating-function expression; tried in that order.
  try {
    return {named_sequence(token), token};
  } catch (const std::invalid_argument&) {
  }
  std::error_code ec;
  if (std::filesystem::exists(token, ec)) {
    return {sequence_from_json(load_json_file(token)), token};
  }
  try {
    return {parse_rational_function(token), token};
  } catch (const parse_error& e) {
    throw std::invalid_argument("unrecognized sequence spec '" + token +
                                "': not a registry name, not a file, and not a generating "
                                "function (" +
                                e.what() + ")");
  }
}

std::vector<ResolvedSpec> resolve_specs(const SeqSpecOptions& opts, std::size_t expected) {
  std::vector<ResolvedSpec> out;
  for (const std::string& token : opts.positional) out.push_back(resolve_positional(token));
  for (const std::string& name : opts.names) out.push_back({named_sequence(name), name});
  for (int k : opts.kbonacci)
    out.push_back({kbonacci(k), "kbonacci(" + std::to_string(k) + ")"});
  for (const std::string& text : opts.gfs)
    out.push_back({parse_rational_function(text), text});
  for (const std::string& path : opts.json_files)
    out.push_back({sequence_from_json(load_json_file(path)), path});
  if (out.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " sequence spec" +
                                (expected == 1 ? "" : "s") + ", got " +
                                std::to_string(out.size()));
  return out;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write to '" + out_path + "'");
  out << content;
}

unsigned effective_jobs(unsigned jobs, std::size_t task_count) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(jobs, task_count));
}

// Runs fn(0..count-1) on `jobs` workers; results must be stored by index so
// output order never depends on scheduling. The lowest-index failure wins.
template <typename Fn>
void run_indexed(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = effective_jobs(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

// ---- subcommand payloads ----

struct TermsCmd {
  SeqSpecOptions spec;
  std::size_t count = 10;
  std::string format = "text";
  std::string out;
};

struct GuessCmd {
  std::string terms_file;
  int max_order = 0;
  std::string format = "text";
  std::string out;
};

struct ConvCmd {
  SeqSpecOptions spec;
  std::size_t guard = 10;
  std::string format = "text";
  std::string out;
};

struct TableCmd {
  int kmax = 0;
  std::size_t guard = 10;
  std::string format = "text";
  std::string out;
  unsigned jobs = 0;
};

struct XformCmd {
  SeqSpecOptions spec;
  std::string format = "text";
  std::string out;
};

std::string render_terms(const std::vector<Rat>& values, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text:
      for (const Rat& v : values) os << rat_to_string(v) << "\n";
      break;
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const Rat& v : values) arr.push_back(rat_to_string(v));
      os << arr.dump() << "\n";
      break;
    }
    case OutputFormat::latex: {
      os << "\\[ ";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ",\\ ";
        os << rat_to_string(values[i]);
      }
      os << " \\]\n";
      break;
    }
  }
  return os.str();
}

int run_terms(const TermsCmd& cmd) {
  auto specs = resolve_specs(cmd.spec, 1);
  auto values = spec_terms(specs[0], cmd.count);
  emit(render_terms(values, output_format_from_string(cmd.format)), cmd.out);
  return 0;
}

std::vector<Rat> read_terms_file(const std::string& path) {
  json j;
  if (path == "-") {
    std::cin >> j;
  } else {
    j = load_json_file(path);
  }
  if (!j.is_array()) throw std::invalid_argument("terms file must hold a JSON array");
  std::vector<Rat> data;
  data.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string())
      data.push_back(rat_from_string(item.get<std::string>()));
    else if (item.is_number_integer())
      data.push_back(rat_from_string(std::to_string(item.get<long long>())));
    else
      throw std::invalid_argument("terms must be strings (or small integers)");
  }
  return data;
}

std::string render_guess(const GuessResult& g, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text:
      os << sequence_to_text(g.sequence);
      os << "order_found: " << g.order_found << "\n";
      os << "terms_used: " << g.terms_used << "\n";
      os << "certified: " << (g.certified ? "true" : "false") << "\n";
      break;
    case OutputFormat::json: {
      ordered_json j = sequence_to_json(g.sequence);
      j["gf"] = gf_to_json(to_gf(g.sequence));
      j["order_found"] = g.order_found;
      j["terms_used"] = g.terms_used;
      j["certified"] = g.certified;
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::latex:
      os << sequence_to_latex(g.sequence);
      break;
  }
  return os.str();
}

int run_guess(const GuessCmd& cmd) {
  auto data = read_terms_file(cmd.terms_file);
  auto result = guess_recurrence(data, cmd.max_order);
  if (!result) {
    std::cout << "NotFound: no C-finite recurrence of order <= " << cmd.max_order << " fits the "
              << data.size() << " supplied terms\n";
    return 2;
  }
  emit(render_guess(*result, output_format_from_string(cmd.format)), cmd.out);
  return 0;
}

int run_rec2gf(const XformCmd& cmd) {
  auto specs = resolve_specs(cmd.spec, 1);
  RationalFunction gf = std::holds_alternative<RationalFunction>(specs[0].value)
                            ? std::get<RationalFunction>(specs[0].value)
                            : to_gf(std::get<CFiniteSequence>(specs[0].value));
  std::ostringstream os;
  switch (output_format_from_string(cmd.format)) {
    case OutputFormat::text:
      os << to_string(gf) << "\n";
      break;
    case OutputFormat::json:
      os << ordered_json{{"gf", gf_to_json(gf)}}.dump(2) << "\n";
      break;
    case OutputFormat::latex:
      os << "\\[ " << to_latex(gf) << " \\]\n";
      break;
  }
  emit(os.str(), cmd.out);
  return 0;
}

int run_gf2rec(const XformCmd& cmd) {
  auto specs = resolve_specs(cmd.spec, 1);
  CFiniteSequence s = as_sequence(specs[0]);
  std::ostringstream os;
  switch (output_format_from_string(cmd.format)) {
    case OutputFormat::text:
      os << sequence_to_text(s);
      break;
    case OutputFormat::json:
      os << sequence_to_json(s).dump(2) << "\n";
      break;
    case OutputFormat::latex:
      os << sequence_to_latex(s);
      break;
  }
  emit(os.str(), cmd.out);
  return 0;
}

std::string render_identity(const IdentityResult& r, OutputFormat format,
                            std::optional<long long> elapsed_ms) {
  switch (format) {
    case OutputFormat::text:
      return identity_to_text(r, elapsed_ms);
    case OutputFormat::json:
      return identity_to_json(r, elapsed_ms).dump(2) + "\n";
    case OutputFormat::latex:
      return identity_to_latex(r);
  }
  return {};
}

int run_conv(const ConvCmd& cmd, ConvKind kind) {
  auto specs = resolve_specs(cmd.spec, kind == ConvKind::self ? 1 : 2);
  const auto t0 = Clock::now();
  IdentityResult result =
      kind == ConvKind::self
          ? self_convolution_identity(as_sequence(specs[0]), cmd.guard)
          : cross_convolution_identity(as_sequence(specs[0]), as_sequence(specs[1]), cmd.guard);
  const long long elapsed = ms_between(t0, Clock::now());
  // Timings are volatile; files must be byte-reproducible, so only the
  // stdout rendering carries elapsed_ms.
  std::optional<long long> shown = cmd.out.empty() ? std::optional<long long>(elapsed)
                                                   : std::nullopt;
  emit(render_identity(result, output_format_from_string(cmd.format), shown), cmd.out);
  return 0;
}

struct TableEntry {
  int k1 = 0;
  int k2 = 0;  // k2 == 0 marks a self entry
  IdentityResult result;
  long long elapsed_ms = 0;
};

std::string render_table(const std::string& title, const std::vector<TableEntry>& entries,
                         OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text: {
      os << "# " << title << "\n";
      for (const TableEntry& e : entries) {
        os << "\n## " << (e.k2 ? "k1 = " + std::to_string(e.k1) + ", k2 = " + std::to_string(e.k2)
                               : "k = " + std::to_string(e.k1))
           << "\n";
        os << identity_to_text(e.result);
      }
      os << "\n# entries: " << entries.size() << "\n";
      break;
    }
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const TableEntry& e : entries) {
        ordered_json j;
        if (e.k2) {
          j["k1"] = e.k1;
          j["k2"] = e.k2;
        } else {
          j["k"] = e.k1;
        }
        j["result"] = identity_to_json(e.result);
        arr.push_back(std::move(j));
      }
      os << ordered_json{{"table", title}, {"entries", arr}, {"count", entries.size()}}.dump(2)
         << "\n";
      break;
    }
    case OutputFormat::latex: {
      os << "\\documentclass{article}\n\\usepackage{amsmath}\n"
         << "\\setlength{\\parindent}{0pt}\n\\begin{document}\n";
      os << "% " << title << "\n";
      for (const TableEntry& e : entries) {
        os << "% " << (e.k2 ? "k1 = " + std::to_string(e.k1) + ", k2 = " + std::to_string(e.k2)
                            : "k = " + std::to_string(e.k1))
           << "\n";
        os << identity_to_latex(e.result);
      }
      os << "\\end{document}\n";
      break;
    }
  }
  return os.str();
}

int run_table(const TableCmd& cmd, ConvKind kind) {
  if (cmd.kmax < 2) throw std::invalid_argument("--kmax must be >= 2");

  std::vector<std::pair<int, int>> params;
  if (kind == ConvKind::self) {
    for (int k = 2; k <= cmd.kmax; ++k) params.emplace_back(k, 0);
  } else {
    for (int k1 = 2; k1 <= cmd.kmax; ++k1)
      for (int k2 = k1; k2 <= cmd.kmax; ++k2) params.emplace_back(k1, k2);
  }

  std::vector<std::optional<TableEntry>> slots(params.size());
  const auto t0 = Clock::now();
  run_indexed(params.size(), cmd.jobs, [&](std::size_t i) {
    const auto [k1, k2] = params[i];
    const auto start = Clock::now();
    try {
      IdentityResult r = k2 ? cross_convolution_identity(kbonacci(k1), kbonacci(k2), cmd.guard)
                            : self_convolution_identity(kbonacci(k1), cmd.guard);
      slots[i] = TableEntry{k1, k2, std::move(r), ms_between(start, Clock::now())};
    } catch (const internal_consistency_error& e) {
      const std::string where =
          k2 ? "(k1=" + std::to_string(k1) + ", k2=" + std::to_string(k2) + ")"
             : "(k=" + std::to_string(k1) + ")";
      throw internal_consistency_error("entry " + where + ": " + e.what(),
                                       e.offending_terms());
    }
  });

  std::vector<TableEntry> entries;
  entries.reserve(slots.size());
  long long total_ms = ms_between(t0, Clock::now());
  for (auto& slot : slots) entries.push_back(std::move(*slot));
  for (const TableEntry& e : entries) {
    std::cerr << (e.k2 ? "(" + std::to_string(e.k1) + "," + std::to_string(e.k2) + ")"
                       : "k=" + std::to_string(e.k1))
              << ": order_bound " << e.result.order_bound << ", order_found "
              << e.result.order_found << " [" << e.elapsed_ms << " ms]\n";
  }
  std::cerr << "total: " << entries.size() << " entries in " << total_ms << " ms\n";

  const std::string title = kind == ConvKind::self
                                ? "self-convolution table, kmax = " + std::to_string(cmd.kmax)
                                : "cross-convolution table, kmax = " + std::to_string(cmd.kmax);
  emit(render_table(title, entries, output_format_from_string(cmd.format)), cmd.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cfconv: exact C-finite sequences, recurrence guessing, and certified "
               "binomial-convolution identities"};
  app.require_subcommand(1);
  app.footer("Named sequences: " + [] {
    std::string s;
    for (const auto& n : sequence_names()) {
      if (!s.empty()) s += ", ";
      s += n;
    }
    return s;
  }());

  TermsCmd terms_cmd;
  auto* terms = app.add_subcommand("terms", "print the first n terms of a sequence");
  add_spec_options(terms, terms_cmd.spec, "spec");
  terms->add_option("-n,--count", terms_cmd.count, "number of terms")->capture_default_str();
  terms->add_option("--format", terms_cmd.format, "text|json|latex")->capture_default_str();
  terms->add_option("--out", terms_cmd.out, "write output to a file");

  GuessCmd guess_cmd;
  auto* guess = app.add_subcommand("guess", "fit the minimal recurrence to a JSON term array");
  guess->add_option("terms-file", guess_cmd.terms_file, "JSON array of term strings ('-' = stdin)")
      ->required();
  guess->add_option("--max-order", guess_cmd.max_order, "order bound for the fit")->required();
  guess->add_option("--format", guess_cmd.format, "text|json|latex")->capture_default_str();
  guess->add_option("--out", guess_cmd.out, "write output to a file");

  XformCmd rec2gf_cmd;
  auto* rec2gf = app.add_subcommand("rec2gf", "generating function of a sequence");
  add_spec_options(rec2gf, rec2gf_cmd.spec, "spec");
  rec2gf->add_option("--format", rec2gf_cmd.format, "text|json|latex")->capture_default_str();
  rec2gf->add_option("--out", rec2gf_cmd.out, "write output to a file");

  XformCmd gf2rec_cmd;
  auto* gf2rec = app.add_subcommand("gf2rec", "recurrence and initial terms of a generating function");
  add_spec_options(gf2rec, gf2rec_cmd.spec, "spec");
  gf2rec->add_option("--format", gf2rec_cmd.format, "text|json|latex")->capture_default_str();
  gf2rec->add_option("--out", gf2rec_cmd.out, "write output to a file");

  ConvCmd self_cmd;
  auto* selfconv = app.add_subcommand("selfconv", "certified binomial self-convolution identity");
  add_spec_options(selfconv, self_cmd.spec, "spec");
  selfconv->add_option("--guard", self_cmd.guard, "extra verification terms")->capture_default_str();
  selfconv->add_option("--format", self_cmd.format, "text|json|latex")->capture_default_str();
  selfconv->add_option("--out", self_cmd.out, "write output to a file");

  ConvCmd cross_cmd;
  auto* crossconv = app.add_subcommand("crossconv", "certified binomial cross-convolution identity");
  add_spec_options(crossconv, cross_cmd.spec, "specs");
  crossconv->add_option("--guard", cross_cmd.guard, "extra verification terms")
      ->capture_default_str();
  crossconv->add_option("--format", cross_cmd.format, "text|json|latex")->capture_default_str();
  crossconv->add_option("--out", cross_cmd.out, "write output to a file");

  TableCmd table_self_cmd;
  auto* table_self =
      app.add_subcommand("table-self", "self-convolution identities for k-bonacci, k = 2..kmax");
  table_self->add_option("--kmax", table_self_cmd.kmax, "largest k")->required();
  table_self->add_option("--guard", table_self_cmd.guard, "extra verification terms")
      ->capture_default_str();
  table_self->add_option("--format", table_self_cmd.format, "text|json|latex")
      ->capture_default_str();
  table_self->add_option("--out", table_self_cmd.out, "write the table to a file");
  table_self->add_option("--jobs", table_self_cmd.jobs, "parallel workers (0 = all cores)")
      ->envname("CFCONV_JOBS");

  TableCmd table_cross_cmd;
  auto* table_cross = app.add_subcommand(
      "table-cross", "cross-convolution identities for k-bonacci pairs, 2 <= k1 <= k2 <= kmax");
  table_cross->add_option("--kmax", table_cross_cmd.kmax, "largest k")->required();
  table_cross->add_option("--guard", table_cross_cmd.guard, "extra verification terms")
      ->capture_default_str();
  table_cross->add_option("--format", table_cross_cmd.format, "text|json|latex")
      ->capture_default_str();
  table_cross->add_option("--out", table_cross_cmd.out, "write the table to a file");
  table_cross->add_option("--jobs", table_cross_cmd.jobs, "parallel workers (0 = all cores)")
      ->envname("CFCONV_JOBS");

  CLI11_PARSE(app, argc, argv);

  try {
    if (terms->parsed()) return run_terms(terms_cmd);
    if (guess->parsed()) return run_guess(guess_cmd);
    if (rec2gf->parsed()) return run_rec2gf(rec2gf_cmd);
    if (gf2rec->parsed()) return run_gf2rec(gf2rec_cmd);
    if (selfconv->parsed()) return run_conv(self_cmd, ConvKind::self);
    if (crossconv->parsed()) return run_conv(cross_cmd, ConvKind::cross);
    if (table_self->parsed()) return run_table(table_self_cmd, ConvKind::self);
    if (table_cross->parsed()) return run_table(table_cross_cmd, ConvKind::cross);
  } catch (const internal_consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    std::cerr << "offending terms:";
    for (const Rat& t : e.offending_terms()) std::cerr << " " << rat_to_string(t);
    std::cerr << "\n";
    return 3;
  } catch (const insufficient_data& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
