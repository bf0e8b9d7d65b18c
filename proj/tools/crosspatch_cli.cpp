// crosspatch: enumerate, verify and search crosspatch knight graphs.
//
// Exit codes: 0 success, 1 validation failure, 2 inconclusive (budget).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crosspatch/crosspatch.hpp"

namespace cp = crosspatch;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInconclusive = 2;

cp::Board load_board(const std::string& arg) {
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
    std::ifstream in(arg);
    if (!in) throw cp::ValidationError("cannot open board file " + arg);
    return cp::board_from_json(cp::Json::parse(in));
  }
  return cp::parse_board(arg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cp::ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or stdout when empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw cp::ValidationError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<cp::Json> read_documents(const std::string& text) {
  std::vector<cp::Json> docs;
  try {
    docs.push_back(cp::Json::parse(text));
    return docs;
  } catch (const nlohmann::json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      docs.push_back(cp::Json::parse(line));
    } catch (const nlohmann::json::parse_error& ex) {
      throw cp::ValidationError(std::string("unparseable document: ") + ex.what());
    }
  }
  return docs;
}

int cmd_enumerate(const std::string& board_arg, bool symmetry, std::uint64_t limit, const std::string& resume,
                  const std::string& out_path) {
  const cp::CrossTable table(load_board(board_arg));
  Output out(out_path);
  cp::EnumerationOptions options;
  options.symmetry_reduction = symmetry;
  options.limits.node_budget = limit;
  options.limits.resume_cursor = resume;
  options.limits.threads = cp::default_thread_count();
  try {
    const auto summary = cp::enumerate_pseudotours(table, options, [&](const cp::RedSet& reds) {
      out.stream() << cp::pseudotour_to_json(table, reds).dump() << '\n';
      return true;
    });
    std::cerr << table.board().descriptor() << ": " << summary.emitted << " pseudotour(s)"
              << (symmetry ? " up to symmetry" : "") << '\n';
  } catch (const cp::BudgetExhausted& ex) {
    std::cerr << "node budget exhausted after " << ex.nodes() << " nodes; resume with --resume '" << ex.cursor()
              << "'\n";
    return kInconclusive;
  }
  return kOk;
}

int verify_census(const std::string& path, const std::string& out_path) {
  const cp::CensusDatabase db(path);
  Output out(out_path);
  bool all_match = true;
  for (const cp::CensusRecord& stored : db.records()) {
    cp::CensusOptions options;
    options.threads = cp::default_thread_count();
    options.record_runtime = false;
    const cp::CensusRecord fresh = cp::compute_census_record(stored.board, options);
    const bool match = stored.partial || cp::same_findings(stored, fresh);
    const bool rectangle_even = std::all_of(stored.cycle_histogram.begin(), stored.cycle_histogram.end(),
                                            [](const auto& kv) { return kv.first % 2 == 0; });
    all_match = all_match && match && rectangle_even;
    out.stream() << cp::Json{{"key", stored.key}, {"match", match}, {"even_cycle_counts", rectangle_even}}.dump()
                 << '\n';
  }
  return all_match ? kOk : kInvalid;
}

int cmd_verify(const std::string& path, const std::string& out_path) {
  const std::string text = read_file(path);
  const std::string first_line = text.substr(0, text.find('\n'));
  if (first_line.find("\"crosspatch-census\"") != std::string::npos) return verify_census(path, out_path);

  Output out(out_path);
  bool all_pass = true;
  for (const cp::Json& doc : read_documents(text)) {
    const cp::PseudotourDocument parsed = cp::document_from_json(doc);
    const cp::CrossTable table(parsed.board);
    cp::Json report;
    bool pass = true;
    if (parsed.witness) {
      const std::string problem = cp::check_witness(parsed.board, *parsed.witness);
      report = cp::Json{{"board", parsed.board.descriptor()},
                        {"kind", cp::tour_kind_name(parsed.witness->kind)},
                        {"pass", problem.empty()},
                        {"problem", problem}};
      pass = problem.empty();
    } else {
      const cp::PseudotourReport r = cp::verify_pseudotour(table, parsed.reds);
      report = cp::report_to_json(r);
      report["board"] = parsed.board.descriptor();
      pass = r.pass();
    }
    all_pass = all_pass && pass;
    out.stream() << report.dump() << '\n';
  }
  return all_pass ? kOk : kInvalid;
}

int cmd_tour(const std::string& board_arg, const std::string& kind, std::uint64_t budget,
             const std::string& out_path) {
  cp::TourQuery query{load_board(board_arg), kind == "open" ? cp::TourKind::Open : cp::TourKind::Closed, budget};
  const cp::TourResult result =
      query.kind == cp::TourKind::Closed ? cp::search_closed_tour(query) : cp::search_open_tour(query);
  Output out(out_path);
  switch (result.status) {
    case cp::SearchStatus::Found:
      out.stream() << cp::witness_to_json(cp::CrossTable(query.board), *result.witness).dump() << '\n';
      return kOk;
    case cp::SearchStatus::None:
      out.stream() << cp::Json{{"result", "none"},
                               {"board", cp::board_to_json(query.board)},
                               {"kind", kind},
                               {"nodes", result.nodes}}
                          .dump()
                   << '\n';
      return kOk;
    case cp::SearchStatus::Inconclusive:
      std::cerr << "inconclusive: node budget of " << budget << " exhausted\n";
      return kInconclusive;
  }
  return kInvalid;
}

int cmd_counterexample(const std::string& topology, int max_size, const std::string& out_path) {
  cp::Topology t;
  if (topology == "torus") t = cp::Topology::Torus;
  else if (topology == "cylinder_x") t = cp::Topology::CylinderX;
  else if (topology == "cylinder_y") t = cp::Topology::CylinderY;
  else throw cp::ValidationError("topology must be torus, cylinder_x or cylinder_y");
  const cp::CounterexampleResult result = cp::find_odd_degree_counterexample(t, max_size);
  Output out(out_path);
  if (result.witness) {
    out.stream() << cp::counterexample_to_json(*result.witness).dump() << '\n';
  } else {
    out.stream() << cp::Json{{"result", "none"}, {"topology", topology}, {"max_size", max_size}}.dump() << '\n';
  }
  return kOk;
}

int cmd_census(const std::string& from, const std::string& to, const std::string& db, std::uint64_t limit) {
  cp::CensusOptions options;
  options.node_budget = limit;
  options.threads = cp::default_thread_count();
  bool partial = false;
  cp::run_census(cp::parse_range(from, to), db, options, [&](const cp::CensusRecord& r, bool fresh) {
    partial = partial || r.partial;
    std::cout << r.key << (fresh ? " " : " (stored) ") << r.raw_count << " raw, " << r.symmetry_count
              << " up to symmetry" << (r.partial ? " [partial]" : "") << '\n';
  });
  return partial ? kInconclusive : kOk;
}

int cmd_render(const std::string& path, const std::string& format, int unit, const std::string& out_path) {
  const std::vector<cp::Json> docs = read_documents(read_file(path));
  if (docs.size() != 1) throw cp::ValidationError("render expects exactly one document");
  const cp::PseudotourDocument doc = cp::document_from_json(docs.front());
  Output out(out_path);
  if (format == "ascii") {
    out.stream() << cp::render_ascii(doc.board, doc.reds);
  } else {
    cp::SvgOptions options;
    options.unit = unit;
    out.stream() << cp::render_svg(doc.board, doc.reds, options, doc.witness ? &*doc.witness : nullptr);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, verify and search crosspatch knight graphs"};
  app.require_subcommand(1);

  std::string board_arg, file_arg, out_path, resume, kind = "closed", topology, from, to, db,
                                                     format = "svg";
  bool symmetry = false;
  std::uint64_t limit = 0;
  std::uint64_t budget = 50'000'000;
  int max_size = 8;
  int unit = 24;

  auto* enumerate = app.add_subcommand("enumerate", "List every crosspatch pseudotour of a board as JSON lines");
  enumerate->add_option("board", board_arg, "Board descriptor (e.g. 6x6, torus:5x5, subset:3x3:2.2) or JSON file")
      ->required();
  enumerate->add_flag("--symmetry", symmetry, "Emit one pseudotour per symmetry class");
  enumerate->add_option("--limit", limit, "Search node budget (0 = unlimited)");
  enumerate->add_option("--resume", resume, "Resume cursor printed by an exhausted run");
  enumerate->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Re-verify pseudotours, witnesses or a census file");
  verify->add_option("file", file_arg, "Pseudotour JSON / JSON lines, witness, or census database")->required();
  verify->add_option("--out", out_path, "Report file (default stdout)");

  auto* tour = app.add_subcommand("tour", "Exhaustively search for a crosspatch tour");
  tour->add_option("board", board_arg, "Board descriptor or JSON file")->required();
  tour->add_option("--kind", kind, "closed or open")->check(CLI::IsMember({"closed", "open"}));
  tour->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
  tour->add_option("--out", out_path, "Output file (default stdout)");

  auto* counter = app.add_subcommand("counterexample", "Find a wrapped board whose H has an odd-degree vertex");
  counter->add_option("--topology", topology, "torus, cylinder_x or cylinder_y")
      ->required()
      ->check(CLI::IsMember({"torus", "cylinder_x", "cylinder_y"}));
  counter->add_option("--max-size", max_size, "Largest side length to search")->check(CLI::Range(5, 64));
  counter->add_option("--out", out_path, "Output file (default stdout)");

  auto* census = app.add_subcommand("census", "Count pseudotours over a range of rectangles into a database");
  census->add_option("--from", from, "Smallest board, AxB")->required();
  census->add_option("--to", to, "Largest board, CxD")->required();
  census->add_option("--db", db, "Line-delimited JSON database")->required();
  census->add_option("--limit", limit, "Per-board node budget (0 = unlimited)");

  auto* render = app.add_subcommand("render", "Draw a pseudotour or witness");
  render->add_option("file", file_arg, "Pseudotour or witness JSON")->required();
  render->add_option("--format", format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--unit", unit, "SVG pixels per half square")->check(CLI::PositiveNumber);
  render->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(board_arg, symmetry, limit, resume, out_path);
    if (verify->parsed()) return cmd_verify(file_arg, out_path);
    if (tour->parsed()) return cmd_tour(board_arg, kind, budget, out_path);
    if (counter->parsed()) return cmd_counterexample(topology, max_size, out_path);
    if (census->parsed()) return cmd_census(from, to, db, limit);
    if (render->parsed()) return cmd_render(file_arg, format, unit, out_path);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInvalid;
  } catch (const cp::ValidationError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInvalid;
  } catch (const cp::CensusError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInvalid;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
