// Command-line front end over the C API. JSON goes to stdout, diagnostics to
// stderr.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ipf/ipf.h"

namespace {

struct SemigroupDeleter {
  void operator()(ipf_semigroup* s) const { ipf_semigroup_destroy(s); }
};
struct SequenceDeleter {
  void operator()(ipf_sequence* t) const { ipf_sequence_destroy(t); }
};
struct StringDeleter {
  void operator()(char* s) const { ipf_string_free(s); }
};
using SemigroupPtr = std::unique_ptr<ipf_semigroup, SemigroupDeleter>;
using SequencePtr = std::unique_ptr<ipf_sequence, SequenceDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Failure {
  int exit_code;
};

void check(ipf_status status, const std::string& context) {
  if (status == IPF_OK) return;
  std::cerr << "ipf: " << context << ": " << ipf_last_error() << "\n";
  throw Failure{1};
}

SemigroupPtr load_semigroup(const std::string& path) {
  ipf_semigroup* s = nullptr;
  check(ipf_semigroup_load(path.c_str(), &s), path);
  return SemigroupPtr(s);
}

SequencePtr load_sequence(const std::string& path) {
  ipf_sequence* t = nullptr;
  check(ipf_sequence_load(path.c_str(), &t), path);
  return SequencePtr(t);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "ipf: cannot write " << path << "\n";
    throw Failure{1};
  }
}

void emit(char* json) {
  StringPtr owned(json);
  std::cout << owned.get() << "\n";
}

struct Common {
  unsigned workers = 1;
  unsigned dp_cap = 24;

  ipf_options options() const {
    ipf_options o;
    ipf_options_init(&o);
    o.workers = workers;
    o.dp_cap = dp_cap;
    return o;
  }
};

unsigned parse_which(const std::vector<std::string>& which) {
  unsigned bits = 0;
  for (const auto& w : which) {
    if (w == "I")
      bits |= IPF_CONST_I;
    else if (w == "SI")
      bits |= IPF_CONST_SI;
    else if (w == "D")
      bits |= IPF_CONST_D;
    else {
      std::cerr << "ipf: unknown constant '" << w << "' (expected I, SI or D)\n";
      throw Failure{1};
    }
  }
  return bits;
}

struct TableSink {
  std::ostream* out;
  std::size_t count = 0;
};

// One flattened table per line inside a JSON array.
int table_callback(int order, const int* cells, void* user) {
  auto* sink = static_cast<TableSink*>(user);
  *sink->out << (sink->count++ ? ",\n  [" : "\n  [");
  for (int i = 0; i < order * order; ++i) *sink->out << (i ? "," : "") << cells[i];
  *sink->out << "]";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Idempotent-product-free sequences in finite semigroups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ipf_version()));

  Common common;
  app.add_option("--workers", common.workers, "Worker threads")
      ->envname("IPF_WORKERS")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--dp-cap", common.dp_cap, "Longest sequence for the any-order product DP")
      ->envname("IPF_DP_CAP")
      ->check(CLI::Range(1u, 64u));

  std::string table_path, seq_path;

  auto* validate = app.add_subcommand("validate", "Validate a Cayley table and describe it");
  validate->add_option("table", table_path, "Table file")->required();
  std::string emit_path;
  validate->add_option("--emit", emit_path, "Write the table back in canonical format");

  std::vector<std::string> which{"I", "SI", "D"};
  auto* constants = app.add_subcommand("constants", "Compute I, SI and D by search");
  constants->add_option("table", table_path, "Table file")->required();
  constants->add_option("--which", which, "Constants to compute")->delimiter(',');

  auto* products = app.add_subcommand("products", "Product sets of a sequence");
  products->add_option("table", table_path, "Table file")->required();
  products->add_option("sequence", seq_path, "Sequence file")->required();

  bool strong = false;
  auto* free_check = app.add_subcommand("free-check", "Test idempotent-product freeness");
  free_check->add_option("table", table_path, "Table file")->required();
  free_check->add_option("sequence", seq_path, "Sequence file")->required();
  free_check->add_flag("--strong", strong, "Natural-order (strong) freeness");

  auto* check_extremal =
      app.add_subcommand("check-extremal", "Compare freeness with the structural certificate");
  check_extremal->add_option("table", table_path, "Table file")->required();
  check_extremal->add_option("sequence", seq_path, "Sequence file")->required();

  int max_order = 4, min_order = 1;
  bool commutative = false, allow_order5 = false, timing = false;
  std::vector<std::string> checks;
  std::string log_path;
  auto* verify = app.add_subcommand("verify", "Run verification suites over enumerated tables");
  verify->add_option("--max-order", max_order, "Largest order")
      ->envname("IPF_MAX_ORDER")
      ->check(CLI::Range(1, 5));
  verify->add_option("--min-order", min_order, "Smallest order")->check(CLI::Range(1, 5));
  verify->add_flag("--commutative", commutative, "Commutative tables only");
  verify->add_option("--checks", checks, "Check ids")->delimiter(',');
  verify->add_option("--log", log_path, "Also write the JSON run log here");
  verify->add_flag("--allow-order5", allow_order5, "Permit order 5");
  verify->add_flag("--timing", timing, "Include elapsed time in the log");

  std::string family;
  std::vector<std::string> params;
  std::string out_path, seq_out_path;
  bool identity = false;
  auto* gen = app.add_subcommand("gen", "Generate a table from a family");
  gen->add_option("family", family,
                  "cyclic-group, cyclic-nil, monogenic, ideal-extension, group-over-nil, left-zero, "
                  "extremal")
      ->required();
  gen->add_option("params", params, "Family parameters (extremal: mono:I:P gbn:N:P ...)");
  gen->add_option("--out", out_path, "Table output file (default stdout)");
  gen->add_option("--seq-out", seq_out_path, "Sequence output file (extremal only)");
  gen->add_flag("--identity", identity, "Adjoin an identity (extremal only)");

  int enum_order = 0;
  bool dedup = false;
  std::vector<int> resume;
  auto* enumerate = app.add_subcommand("enumerate", "List all semigroup tables of an order");
  enumerate->add_option("--order", enum_order, "Order")->required()->check(CLI::Range(1, 5));
  enumerate->add_flag("--commutative", commutative, "Commutative tables only");
  enumerate->add_flag("--dedup", dedup, "One table per isomorphism class");
  enumerate->add_option("--resume-from", resume, "Flattened cell prefix, comma separated")
      ->delimiter(',');
  enumerate->add_flag("--allow-order5", allow_order5, "Permit order 5");

  CLI11_PARSE(app, argc, argv);

  try {
    const ipf_options opts = common.options();
    if (*validate) {
      auto s = load_semigroup(table_path);
      char* json = nullptr;
      check(ipf_semigroup_describe(s.get(), &json), "describe");
      emit(json);
      if (!emit_path.empty()) {
        char* table = nullptr;
        check(ipf_semigroup_format(s.get(), &table), "format");
        StringPtr text(table);
        write_file(emit_path, text.get());
      }
    } else if (*constants) {
      auto s = load_semigroup(table_path);
      const unsigned bits = parse_which(which);
      if ((bits & IPF_CONST_D) && !ipf_semigroup_is_commutative(s.get()))
        std::cerr << "ipf: D skipped, semigroup is not commutative\n";
      char* json = nullptr;
      check(ipf_constants(s.get(), bits, &opts, &json), "constants");
      emit(json);
    } else if (*products) {
      auto s = load_semigroup(table_path);
      auto t = load_sequence(seq_path);
      char* json = nullptr;
      check(ipf_products(s.get(), t.get(), &opts, &json), "products");
      emit(json);
    } else if (*free_check) {
      auto s = load_semigroup(table_path);
      auto t = load_sequence(seq_path);
      int is_free = 0;
      check(ipf_free_check(s.get(), t.get(), strong ? 1 : 0, &opts, &is_free), "free-check");
      std::cout << "{\"mode\":\"" << (strong ? "strong" : "weak") << "\",\"free\":"
                << (is_free ? "true" : "false") << "}\n";
    } else if (*check_extremal) {
      auto s = load_semigroup(table_path);
      auto t = load_sequence(seq_path);
      char* json = nullptr;
      int equivalent = 0;
      check(ipf_check_extremal(s.get(), t.get(), &opts, &json, &equivalent), "check-extremal");
      emit(json);
      if (!equivalent) {
        std::cerr << "ipf: freeness and certificate disagree\n";
        return 1;
      }
    } else if (*verify) {
      ipf_verify_options vo;
      ipf_verify_options_init(&vo);
      vo.min_order = min_order;
      vo.max_order = max_order;
      vo.commutative_only = commutative;
      std::string joined;
      for (const auto& c : checks) joined += (joined.empty() ? "" : ",") + c;
      vo.checks = joined.c_str();
      vo.workers = common.workers;
      vo.dp_cap = common.dp_cap;
      vo.allow_order5 = allow_order5;
      vo.include_timing = timing;
      char* json = nullptr;
      int all_passed = 0;
      check(ipf_verify(&vo, &json, &all_passed), "verify");
      StringPtr owned(json);
      if (!log_path.empty()) write_file(log_path, std::string(owned.get()) + "\n");
      std::cout << owned.get() << "\n";
      if (!all_passed) {
        std::cerr << "ipf: verification failed, see the instances with verdict \"fail\"\n";
        return 1;
      }
    } else if (*gen) {
      std::vector<const char*> argv_params;
      for (const auto& p : params) argv_params.push_back(p.c_str());
      if (identity) {
        if (family != "extremal") {
          std::cerr << "ipf: --identity applies only to the extremal family\n";
          return 1;
        }
        argv_params.push_back("+identity");
      }
      ipf_semigroup* raw_s = nullptr;
      ipf_sequence* raw_t = nullptr;
      check(ipf_generate(family.c_str(), argv_params.data(), static_cast<int>(argv_params.size()),
                         &raw_s, &raw_t),
            "gen " + family);
      SemigroupPtr s(raw_s);
      SequencePtr t(raw_t);
      char* table = nullptr;
      check(ipf_semigroup_format(s.get(), &table), "format");
      StringPtr table_text(table);
      if (out_path.empty())
        std::cout << table_text.get();
      else
        write_file(out_path, table_text.get());
      if (t) {
        char* seq = nullptr;
        check(ipf_sequence_format(t.get(), &seq), "format");
        StringPtr seq_text(seq);
        if (!seq_out_path.empty())
          write_file(seq_out_path, seq_text.get());
        else
          std::cerr << "sequence: " << seq_text.get();
      } else if (!seq_out_path.empty()) {
        std::cerr << "ipf: family '" << family << "' has no companion sequence\n";
        return 1;
      }
    } else if (*enumerate) {
      std::ostringstream tables;
      TableSink sink{&tables};
      check(ipf_enumerate(enum_order, commutative, dedup, resume.empty() ? nullptr : resume.data(),
                          resume.size(), allow_order5, common.workers, table_callback, &sink),
            "enumerate");
      std::cout << "{\"order\":" << enum_order << ",\"commutative\":"
                << (commutative ? "true" : "false") << ",\"dedup\":" << (dedup ? "true" : "false")
                << ",\"count\":" << sink.count << ",\"tables\":[" << tables.str()
                << (sink.count ? "\n]}" : "]}") << "\n";
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return 0;
}
