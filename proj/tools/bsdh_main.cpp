#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bsdh/errors.hpp"
#include "bsdh/fano.hpp"
#include "bsdh/report.hpp"

namespace {

// All command output goes through here so --out behaves identically
// everywhere: stdout by default, a file when requested.
void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body << "\n";
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw bsdh::Error("cannot open '" + out_path + "' for writing");
  }
  file << body << "\n";
  if (!file.good()) {
    throw bsdh::Error("failed writing '" + out_path + "'");
  }
}

std::string slurp_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw bsdh::Error("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct CommonArgs {
  std::string type;
  std::string format = "text";
  std::string out_path;
};

int run_classify(const CommonArgs& common, const std::string& word_text) {
  bsdh::SimpleType t = bsdh::parse_simple_type(common.type);
  bsdh::Word w = bsdh::parse_word(t, word_text);
  bsdh::ClassificationReport report = bsdh::classify(w);
  emit(common.format == "json" ? bsdh::report_to_json(report)
                               : bsdh::report_to_text(report),
       common.out_path);
  return 0;
}

int run_matrix(const CommonArgs& common, const std::string& inline_text,
               const std::string& file_path) {
  if (inline_text.empty() == file_path.empty()) {
    throw bsdh::InvalidInput(
        "provide the matrix either inline or via --file (exactly one)");
  }
  std::string text = inline_text.empty() ? slurp_file(file_path) : inline_text;
  bsdh::BetaMatrix m = bsdh::parse_matrix(text);
  bsdh::ClassificationReport report = bsdh::classify_matrix(m);
  emit(common.format == "json" ? bsdh::report_to_json(report)
                               : bsdh::report_to_text(report),
       common.out_path);
  return 0;
}

int run_enumerate(const CommonArgs& common, int max_len, std::size_t max_words) {
  bsdh::SimpleType t = bsdh::parse_simple_type(common.type);
  std::vector<bsdh::EnumerationRow> rows =
      bsdh::enumerate_classified(t, max_len, max_words);
  std::string body;
  if (common.format == "csv") {
    body = bsdh::enumeration_to_csv(rows);
    if (!body.empty() && body.back() == '\n') body.pop_back();
  } else if (common.format == "json") {
    body = bsdh::enumeration_to_json(rows);
  } else {
    body = bsdh::enumeration_to_text(rows);
  }
  emit(body, common.out_path);
  return 0;
}

int run_audit(const CommonArgs& common, int max_len, int jobs,
              std::size_t max_words) {
  bsdh::SimpleType t = bsdh::parse_simple_type(common.type);
  bsdh::AuditReport report = bsdh::audit(t, max_len, jobs, max_words);
  emit(common.format == "json" ? bsdh::audit_to_json(report)
                               : bsdh::audit_to_text(report),
       common.out_path);
  return report.divergences.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classifies Bott-Samelson varieties of reduced Weyl-group words as "
      "Fano, weak Fano, or neither, via row conditions on the pairing "
      "matrix and via anticanonical degrees on extremal curve classes."};
  app.require_subcommand(1);

  CommonArgs classify_args;
  std::string classify_word;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Classify one reduced word");
  classify_cmd->add_option("--type", classify_args.type, "Root-system type, e.g. A4")
      ->required();
  classify_cmd
      ->add_option("--word", classify_word,
                   "Word, e.g. \"2,3,1,2\" or \"s2 s3 s1 s2\" (empty for the identity)")
      ->required();
  classify_cmd->add_option("--format", classify_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("--out", classify_args.out_path, "Write output to a file");

  CommonArgs matrix_args;
  std::string matrix_text;
  std::string matrix_file;
  CLI::App* matrix_cmd = app.add_subcommand(
      "matrix", "Analyze a raw pairing matrix (formal mode, no word)");
  matrix_cmd->add_option("text", matrix_text,
                         "Matrix text: rows split by ';' or newlines, entries "
                         "by spaces or commas");
  matrix_cmd->add_option("--file", matrix_file, "Read the matrix from a file");
  matrix_cmd->add_option("--format", matrix_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  matrix_cmd->add_option("--out", matrix_args.out_path, "Write output to a file");

  CommonArgs enumerate_args;
  int enumerate_max_len = 0;
  std::size_t enumerate_max_words = bsdh::kDefaultWordCapacity;
  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "Classify every reduced word up to a length bound");
  enumerate_cmd->add_option("--type", enumerate_args.type, "Root-system type")
      ->required();
  enumerate_cmd->add_option("--max-len", enumerate_max_len, "Length bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--format", enumerate_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate_cmd->add_option("--out", enumerate_args.out_path, "Write output to a file");
  enumerate_cmd->add_option("--max-words", enumerate_max_words,
                            "Capacity bound on enumerated words");

  CommonArgs audit_args;
  int audit_max_len = 0;
  int audit_jobs = 1;
  std::size_t audit_max_words = bsdh::kDefaultWordCapacity;
  CLI::App* audit_cmd = app.add_subcommand(
      "audit", "Cross-check the condition and degree classifiers on every "
               "reduced word up to a length bound");
  audit_cmd->add_option("--type", audit_args.type, "Root-system type")->required();
  audit_cmd->add_option("--max-len", audit_max_len, "Length bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--format", audit_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  audit_cmd->add_option("--out", audit_args.out_path, "Write output to a file");
  audit_cmd->add_option("--jobs", audit_jobs, "Worker threads (>1 partitions by first letter)")
      ->check(CLI::PositiveNumber);
  audit_cmd->add_option("--max-words", audit_max_words,
                        "Capacity bound on audited words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify_args, classify_word);
    if (matrix_cmd->parsed()) return run_matrix(matrix_args, matrix_text, matrix_file);
    if (enumerate_cmd->parsed()) {
      return run_enumerate(enumerate_args, enumerate_max_len, enumerate_max_words);
    }
    if (audit_cmd->parsed()) {
      return run_audit(audit_args, audit_max_len, audit_jobs, audit_max_words);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
