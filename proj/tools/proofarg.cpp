// proofarg - command-line front end
//
// Exit status: 0 clean, 1 domain failure (invalid argument, protocol
// violation), 2 usage, I/O or parse failure.
#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "proofarg/analysis.hpp"
#include "proofarg/dot.hpp"

#ifndef PROOFARG_CORPUS_DIR
#define PROOFARG_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;
using namespace proofarg;

namespace
{

constexpr int kClean = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

struct Loaded
{
  std::optional<markup::Document> doc;
  int status = kClean;
};

std::optional<std::string> read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    return std::nullopt;
  }
  return ss.str();
}

Loaded load(const std::string& path)
{
  auto text = read_file(path);
  if (!text) {
    std::cerr << path << ": cannot read file\n";
    return {std::nullopt, kUsage};
  }
  auto parsed = markup::parse_document(*text);
  if (auto* errors = std::get_if<std::vector<markup::ParseError>>(&parsed)) {
    for (const auto& e : *errors) {
      std::cerr << path << ":" << e.span.line << ":" << e.span.column << ": error: " << e.message()
                << "\n";
    }
    return {std::nullopt, kUsage};
  }
  return {std::get<markup::Document>(std::move(parsed)), kClean};
}

// Writes to --out when given, else stdout.
int emit(const std::string& out_path, const std::string& text)
{
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kClean;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << out_path << ": cannot write file\n";
    return kUsage;
  }
  return kClean;
}

std::vector<std::string> corpus_files()
{
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(PROOFARG_CORPUS_DIR, ec)) {
    if (entry.path().extension() == ".arg") {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_validate(const std::vector<std::string>& paths, const std::string& format,
                 const std::string& out_path)
{
  int status = kClean;
  nlohmann::json report = nlohmann::json::array();
  std::string text;
  for (const auto& path : paths) {
    Loaded l = load(path);
    if (!l.doc) {
      status = std::max(status, l.status);
      report.push_back({{"file", path}, {"parsed", false}});
      continue;
    }
    nlohmann::json diags = nlohmann::json::array();
    for (const auto& d : validate_document(*l.doc)) {
      if (d.diagnostic.severity == Severity::Error) {
        status = std::max(status, kDomain);
      }
      text += format_diagnostic(path, d) + "\n";
      diags.push_back({{"line", d.span.line},
                       {"column", d.span.column},
                       {"severity", to_string(d.diagnostic.severity)},
                       {"rule", d.diagnostic.rule},
                       {"argument", d.diagnostic.argument},
                       {"slot", d.diagnostic.slot},
                       {"message", d.diagnostic.message}});
    }
    report.push_back({{"file", path}, {"parsed", true}, {"diagnostics", std::move(diags)}});
  }
  const int written = emit(out_path, format == "json" ? dump_report(report) : text);
  return std::max(status, written);
}

int cmd_diagram(const std::string& path, const std::string& out_path)
{
  Loaded l = load(path);
  if (!l.doc) {
    return l.status;
  }
  try {
    return emit(out_path, export_dot(l.doc->graph));
  } catch (const InvalidArgument&) {
    for (const auto& d : validate_document(*l.doc)) {
      std::cerr << format_diagnostic(path, d) << "\n";
    }
    return kDomain;
  }
}

int cmd_classify(const std::vector<std::string>& paths, const std::string& format,
                 const std::string& out_path)
{
  int status = kClean;
  nlohmann::json report = nlohmann::json::array();
  std::string text;
  for (const auto& path : paths) {
    Loaded l = load(path);
    if (!l.doc) {
      status = std::max(status, l.status);
      continue;
    }
    for (const auto& script : l.doc->dialogues) {
      nlohmann::json j = classification_json(script);
      text += path + ": dialogue \"" + script.id + "\": declared " + j["declared_type"].get<std::string>();
      if (j["initial_situation"].is_null()) {
        text += ", no initial situation";
      } else {
        text += ", situation " + j["initial_situation"]["kind"].get<std::string>();
      }
      text += ", goal " + j["main_goal"].get<std::string>();
      const auto& pd = j["proof_dialogue"];
      if (pd["kind"].is_null()) {
        text += ", no proof-dialogue row (" + pd["note"].get<std::string>() + ")\n";
        status = std::max(status, kDomain);
      } else {
        text += ", proof dialogue " + pd["kind"].get<std::string>() +
                (pd["suspect"].get<bool>() ? " (suspect)" : "") + "\n";
      }
      j["file"] = path;
      report.push_back(std::move(j));
    }
  }
  const int written = emit(out_path, format == "json" ? dump_report(report) : text);
  return std::max(status, written);
}

std::string analysis_text(const DocumentAnalysis& a)
{
  std::ostringstream out;
  for (const auto& d : a.dialogues) {
    out << "dialogue \"" << d.dialogue_id << "\" (" << to_string(d.declared_type) << "): goal "
        << (d.goal.achieved ? "achieved" : "not achieved") << ", " << d.goal.reason << "\n";
    if (d.header_error) {
      out << "  cannot start: " << d.header_error->second << "\n";
    } else if (d.replay->violation) {
      out << "  violation at turn " << d.replay->violation->turn << ": "
          << d.replay->violation->rule << "\n";
    }
    for (const auto& s : d.segments) {
      out << "  segment " << s.start_turn << "-" << s.end_turn << " " << to_string(s.operative_type)
          << (s.declared ? " (declared)" : "") << "\n";
    }
    for (const auto& s : d.shifts) {
      out << "  shift at turn " << s.at_turn << ": " << to_string(s.from_type) << " -> "
          << to_string(s.to_type) << ", " << to_string(s.kind) << ", " << to_string(s.mode) << ", "
          << to_string(s.verdict.licitness) << " (" << s.verdict.reason << ")\n";
    }
  }
  for (const auto& p : a.proofs) {
    out << "proof \"" << p.proof_id << "\": " << to_string(p.status.kind) << "\n";
    for (const auto& why : p.status.diagnostics) {
      out << "  " << why << "\n";
    }
  }
  return out.str();
}

int cmd_analyze(const std::string& path, const std::string& format, int window,
                const std::string& out_path)
{
  Loaded l = load(path);
  if (!l.doc) {
    return l.status;
  }
  const DocumentAnalysis a = analyze_document(*l.doc, window);
  const std::string text = format == "json" ? dump_report(to_json(a)) : analysis_text(a);
  const int written = emit(out_path, text);
  // The (empty) report is still written so that scripts always get JSON.
  if (l.doc->dialogues.empty()) {
    std::cerr << path << ": no dialogue to analyze\n";
    return std::max(kDomain, written);
  }
  return std::max(a.has_violation() ? kDomain : kClean, written);
}

std::string typology_text()
{
  std::ostringstream out;
  const nlohmann::json t = typology_json();
  out << "Dialogue survey (initial situation x main goal)\n";
  for (const auto& c : t["dialogue_survey"]) {
    out << "  " << c["initial_situation"].get<std::string>() << " x "
        << c["main_goal"].get<std::string>() << ": "
        << (c["dialogue_type"].is_null() ? std::string("-") : c["dialogue_type"].get<std::string>())
        << "\n";
  }
  out << "\nDialogue types\n";
  for (const auto& p : t["dialogue_profiles"]) {
    out << "  " << p["name"].get<std::string>() << "\n"
        << "    initial situation: " << p["initial_situation"].get<std::string>() << "\n"
        << "    individual goals:  " << p["individual_goals"].get<std::string>() << "\n"
        << "    collective goal:   " << p["collective_goal"].get<std::string>() << "\n"
        << "    benefits:          " << p["benefits"].get<std::string>() << "\n";
  }
  out << "\nProof dialogues\n";
  for (const auto& r : t["proof_dialogues"]) {
    out << "  " << r["name"].get<std::string>() << (r["suspect"].get<bool>() ? " [suspect]" : "")
        << "\n"
        << "    initial situation: " << r["initial_situation"].get<std::string>() << "\n"
        << "    main goal:         " << r["main_goal"].get<std::string>() << "\n"
        << "    prover:            " << r["prover_goal"].get<std::string>() << "\n"
        << "    interlocutor:      " << r["interlocutor_goal"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Toulmin arguments and proof dialogues"};
  app.require_subcommand(0, 1);
  bool fixtures = false;
  app.add_flag("--fixtures", fixtures, "Print the shipped corpus files and exit");

  std::vector<std::string> paths;
  std::string path;
  std::string format;
  std::string out_path;
  int window = kDefaultShiftWindow;

  auto* validate = app.add_subcommand("validate", "Check argument structure and dialogue headers");
  validate->add_option("paths", paths, "Markup files")->required();
  validate->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  validate->add_option("--out", out_path, "Write output to PATH");

  auto* diagram = app.add_subcommand("diagram", "Render the argument graph as DOT");
  diagram->add_option("path", path, "Markup file")->required();
  diagram->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot"}));
  diagram->add_option("--out", out_path, "Write output to PATH");

  auto* classify = app.add_subcommand("classify", "Place each dialogue in the typology");
  classify->add_option("paths", paths, "Markup files")->required();
  classify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--out", out_path, "Write output to PATH");

  auto* analyze = app.add_subcommand("analyze", "Replay dialogues, find shifts, assess proofs");
  analyze->add_option("path", path, "Markup file")->required();
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--shift-window", window, "Moves needed to detect an undeclared shift")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--out", out_path, "Write output to PATH");

  auto* report = app.add_subcommand("report", "Print the typology tables");
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--out", out_path, "Write output to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kUsage;
  }

  if (fixtures) {
    for (const auto& f : corpus_files()) {
      std::cout << f << "\n";
    }
    return kClean;
  }

  try {
    if (*validate) {
      return cmd_validate(paths, format.empty() ? "text" : format, out_path);
    }
    if (*diagram) {
      return cmd_diagram(path, out_path);
    }
    if (*classify) {
      return cmd_classify(paths, format.empty() ? "text" : format, out_path);
    }
    if (*analyze) {
      return cmd_analyze(path, format.empty() ? "json" : format, window, out_path);
    }
    if (*report) {
      return emit(out_path, format == "text" ? typology_text() : dump_report(typology_json()));
    }
  } catch (const std::exception& e) {
    std::cerr << "proofarg: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << app.help();
  return kUsage;
}
