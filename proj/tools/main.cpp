// Command-line front end; everything goes through the C API in
// spectralign/spectralign.h.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fixtures.h"
#include "spectralign/spectralign.h"

namespace {

// Exit codes: 0 success, 1 usage or scenario-file error, 2 domain error
// (invalid sequence, power out of range, and similar).
int fail(sa_status status) {
  std::cerr << "spectralign: " << sa_last_error() << '\n';
  return status == SA_ERR_BAD_SCENARIO ? 1 : 2;
}

std::string spaced(const std::string& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += row[i];
  }
  return out;
}

// Two gapped rows with '|' markers under matching columns.
void print_alignment(const std::string& top, const std::string& bottom) {
  std::string markers;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (i) markers += ' ';
    const bool match = top[i] != '-' && bottom[i] != '-' && top[i] == bottom[i];
    markers += match ? '|' : ' ';
  }
  while (!markers.empty() && markers.back() == ' ') markers.pop_back();
  std::cout << spaced(top) << '\n' << markers << '\n' << spaced(bottom) << '\n';
}

void print_matrix(const sa_matrix* matrix, const std::string& seq1,
                  const std::string& seq2) {
  const std::size_t rows = sa_matrix_rows(matrix);
  const std::size_t cols = sa_matrix_cols(matrix);

  std::size_t width = 3;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      int64_t value = 0;
      sa_matrix_cell(matrix, i, j, &value);
      width = std::max(width, std::to_string(value).size());
    }
  }

  const auto label = [](const std::string& seq, std::size_t k) {
    return k == 0 ? '-' : seq[k - 1];
  };

  std::cout << "  ";
  for (std::size_t j = 0; j < cols; ++j)
    std::cout << std::setw(static_cast<int>(width) + 1) << label(seq1, j);
  std::cout << '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    std::cout << label(seq2, i) << ' ';
    for (std::size_t j = 0; j < cols; ++j) {
      int64_t value = 0;
      sa_matrix_cell(matrix, i, j, &value);
      std::cout << std::setw(static_cast<int>(width) + 1) << value;
    }
    std::cout << '\n';
  }
}

int run_align(const std::string& seq1, const std::string& seq2,
              const sa_scoring& scoring, bool show_matrix) {
  sa_matrix* matrix = nullptr;
  if (const sa_status st = sa_matrix_build(seq1.c_str(), seq2.c_str(),
                                           &scoring, &matrix);
      st != SA_OK)
    return fail(st);

  sa_alignment* alignment = nullptr;
  if (const sa_status st = sa_matrix_traceback(matrix, &alignment);
      st != SA_OK) {
    sa_matrix_free(matrix);
    return fail(st);
  }

  print_alignment(sa_alignment_top(alignment), sa_alignment_bottom(alignment));
  std::cout << "score: " << sa_alignment_score(alignment) << '\n';

  if (show_matrix) {
    char* canon1 = nullptr;
    char* canon2 = nullptr;
    sa_sequence_canonical(seq1.c_str(), &canon1);
    sa_sequence_canonical(seq2.c_str(), &canon2);
    std::cout << '\n';
    print_matrix(matrix, canon1, canon2);
    sa_string_free(canon1);
    sa_string_free(canon2);
  }

  sa_alignment_free(alignment);
  sa_matrix_free(matrix);
  return 0;
}

int run_encode(const std::string& powers) {
  char* encoded = nullptr;
  if (const sa_status st = sa_encode_powers_csv(powers.c_str(), &encoded);
      st != SA_OK)
    return fail(st);
  std::cout << encoded << '\n';
  sa_string_free(encoded);
  return 0;
}

int run_allocate(const std::string& pu, const std::string& su,
                 const sa_scoring& scoring) {
  sa_allocation* allocation = nullptr;
  if (const sa_status st =
          sa_allocate(pu.c_str(), su.c_str(), &scoring, &allocation);
      st != SA_OK)
    return fail(st);

  std::cout << "idle: {";
  for (std::size_t k = 0; k < sa_allocation_idle_count(allocation); ++k) {
    int channel = 0;
    sa_allocation_idle(allocation, k, &channel);
    std::cout << (k ? "," : "") << channel;
  }
  std::cout << "}\n";

  const std::size_t users = sa_allocation_users(allocation);
  std::size_t allocated = 0;
  for (std::size_t u = 0; u < users; ++u) {
    int channel = 0;
    sa_allocation_channel(allocation, u, &channel);
    std::cout << "SU" << (u + 1) << " -> ";
    if (channel > 0) {
      std::cout << "channel " << channel;
      ++allocated;
    } else {
      std::cout << "waiting";
    }
    std::cout << '\n';
  }
  std::cout << allocated << " allocated, " << (users - allocated)
            << " waiting (score " << sa_allocation_score(allocation) << ")\n";

  sa_allocation_free(allocation);
  return 0;
}

std::optional<std::string> load_scenario_text(const std::string& arg) {
  std::ifstream in(arg, std::ios::binary);
  if (in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  if (arg == "paper_t123") return std::string(kScenarioPaperT123);
  if (arg == "paper_scarcity") return std::string(kScenarioPaperScarcity);
  return std::nullopt;
}

int run_simulate(const std::string& scenario_arg, const std::string& format) {
  const auto text = load_scenario_text(scenario_arg);
  if (!text) {
    std::cerr << "spectralign: scenario '" << scenario_arg
              << "' is neither a file nor a bundled scenario\n";
    return 1;
  }

  sa_scenario* scenario = nullptr;
  if (const sa_status st = sa_scenario_parse(text->c_str(), &scenario);
      st != SA_OK)
    return fail(st);

  sa_run* run = nullptr;
  if (const sa_status st = sa_scenario_run(scenario, &run); st != SA_OK) {
    sa_scenario_free(scenario);
    return fail(st);
  }

  char* rendered = nullptr;
  const sa_status st = format == "csv" ? sa_run_emit_csv(run, &rendered)
                                       : sa_run_emit_text(run, &rendered);
  int rc = 0;
  if (st != SA_OK) {
    rc = fail(st);
  } else {
    std::cout << rendered;
    sa_string_free(rendered);
  }

  sa_run_free(run);
  sa_scenario_free(scenario);
  return rc;
}

void add_scoring_options(CLI::App* cmd, sa_scoring* scoring) {
  cmd->add_option("--match", scoring->match, "Match score");
  cmd->add_option("--mismatch", scoring->mismatch, "Mismatch score");
  cmd->add_option("--gap", scoring->gap, "Gap penalty");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Channel allocation for cognitive-radio networks via global "
      "sequence alignment"};
  app.require_subcommand(1);

  std::string seq1, seq2;
  sa_scoring align_scoring = sa_scoring_default();
  bool show_matrix = false;
  CLI::App* align_cmd =
      app.add_subcommand("align", "Globally align two sequences");
  align_cmd->add_option("--seq1", seq1, "First sequence (table columns)")
      ->required();
  align_cmd->add_option("--seq2", seq2, "Second sequence (table rows)")
      ->required();
  add_scoring_options(align_cmd, &align_scoring);
  align_cmd->add_flag("--show-matrix", show_matrix,
                      "Also print the filled score table");

  std::string powers;
  CLI::App* encode_cmd = app.add_subcommand(
      "encode", "Encode per-channel powers (0-4 scale) as a sequence");
  encode_cmd
      ->add_option("--powers", powers, "Comma-separated powers, e.g. 0.5,2.3")
      ->required();

  std::string pu, su;
  sa_scoring allocate_scoring = sa_scoring_default();
  CLI::App* allocate_cmd = app.add_subcommand(
      "allocate", "Assign idle channels to secondary users");
  allocate_cmd->add_option("--pu", pu, "Spectrum occupancy sequence")
      ->required();
  allocate_cmd->add_option("--su", su, "Demand sequence, one symbol per user")
      ->required();
  add_scoring_options(allocate_cmd, &allocate_scoring);

  std::string scenario_arg;
  std::string format = "text";
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Replay a scenario file step by step");
  simulate_cmd
      ->add_option("--scenario", scenario_arg,
                   "Scenario file path, or a bundled name "
                   "(paper_t123, paper_scarcity)")
      ->required();
  simulate_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (align_cmd->parsed())
    return run_align(seq1, seq2, align_scoring, show_matrix);
  if (encode_cmd->parsed()) return run_encode(powers);
  if (allocate_cmd->parsed()) return run_allocate(pu, su, allocate_scoring);
  if (simulate_cmd->parsed()) return run_simulate(scenario_arg, format);
  return 1;
}
