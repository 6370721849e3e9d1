// vucert: certificates of virtual unipotence for one-torus graph-manifold
// groups, decided in exact arithmetic.
//
// Exit codes: 0 = success / affirmative verdict, 1 = well-formed negative
// verdict, 2 = malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vucert/enumerate.hpp"
#include "vucert/forcing.hpp"
#include "vucert/gluing.hpp"
#include "vucert/presentation.hpp"
#include "vucert/representation.hpp"

namespace {

using vucert::GluingMatrix;
using vucert::GraphCase;
using vucert::Int;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBadInput = 2;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GraphCase parse_case(const std::string& name) {
  if (name == "loop") return GraphCase::Loop;
  if (name == "edge") return GraphCase::Edge;
  throw BadInput("--case must be 'loop' or 'edge'");
}

GluingMatrix parse_matrix(GraphCase kind, const std::string& text) {
  std::vector<Int> entries;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    try {
      entries.emplace_back(token);
    } catch (const std::exception&) {
      throw BadInput("--matrix entries must be integers");
    }
  }
  if (entries.size() != 4) throw BadInput("--matrix must be a,b,c,d");
  try {
    return vucert::make_gluing(kind, entries[0], entries[1], entries[2], entries[3]);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

vucert::BlockPattern parse_pattern(GraphCase kind, const std::string& text) {
  auto grid = vucert::parse_pattern_grid(text);
  if (!grid) throw BadInput("--pattern must look like '1,1;1,1'");
  try {
    return vucert::make_pattern(kind, std::move(*grid));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

vucert::Word parse_word(const std::string& text) {
  auto word = vucert::Word::parse(text);
  if (!word) throw BadInput("--word must use the syntax f^2*z (no whitespace)");
  return *word;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ordered_json matrix_json(const GluingMatrix& m) {
  return ordered_json::array({m.a.convert_to<long long>(), m.b.convert_to<long long>(),
                              m.c.convert_to<long long>(), m.d.convert_to<long long>()});
}

void emit(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

// ---------------------------------------------------------------------------

int run_npc(GraphCase kind, const GluingMatrix& m, bool json) {
  bool npc = vucert::npc_check(m);
  if (json) {
    ordered_json doc;
    doc["case"] = vucert::to_string(kind);
    doc["matrix"] = matrix_json(m);
    doc["npc"] = npc;
    emit(doc);
  } else {
    std::cout << (npc ? "NPC" : "not NPC") << "\n";
  }
  return npc ? kExitYes : kExitNo;
}

int run_certificate(GraphCase kind, const GluingMatrix& m, bool json) {
  const char* loop_note = "det B = -1, b != 0, a - d >= 2";
  try {
    std::vector<vucert::Word> words = vucert::certificate_words(m);
    if (json) {
      ordered_json doc;
      doc["case"] = vucert::to_string(kind);
      doc["matrix"] = matrix_json(m);
      ordered_json list = ordered_json::array();
      for (const auto& w : words) list.push_back(w.to_string());
      doc["words"] = std::move(list);
      if (kind == GraphCase::Loop) doc["valid_under"] = loop_note;
      emit(doc);
    } else {
      for (const auto& w : words) std::cout << w.to_string() << "\n";
      if (kind == GraphCase::Loop) std::cout << "valid-under: " << loop_note << "\n";
    }
    return kExitYes;
  } catch (const vucert::HypothesisError& e) {
    if (json) {
      ordered_json doc;
      doc["case"] = vucert::to_string(kind);
      doc["matrix"] = matrix_json(m);
      doc["refused"] = e.what();
      emit(doc);
    } else {
      std::cout << "refused: " << e.what() << "\n";
    }
    return kExitNo;
  }
}

int run_presentation(GraphCase kind, const GluingMatrix& m, const Int& genus,
                     std::optional<Int> genus2, bool json) {
  vucert::Presentation pres;
  try {
    pres = vucert::build_presentation(kind, genus, genus2, m);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  if (json) {
    ordered_json doc;
    doc["case"] = vucert::to_string(kind);
    doc["genus"] = pres.genus.convert_to<long long>();
    if (pres.genus2) doc["genus2"] = pres.genus2->convert_to<long long>();
    doc["gluing"] = matrix_json(m);
    doc["generators"] = pres.generators;
    ordered_json relators = ordered_json::array();
    for (const auto& rel : pres.relators)
      relators.push_back(ordered_json{{"label", rel.label}, {"word", rel.word.to_string()}});
    doc["relators"] = std::move(relators);
    emit(doc);
  } else {
    std::cout << "generators:";
    for (const auto& g : pres.generators) std::cout << " " << g;
    std::cout << "\n";
    for (const auto& rel : pres.relators)
      std::cout << rel.label << " " << rel.word.to_string() << "\n";
  }
  return kExitYes;
}

int run_h1(GraphCase kind, const GluingMatrix& m, const Int& genus, std::optional<Int> genus2,
           const std::optional<std::string>& word_text, bool json) {
  vucert::Presentation pres;
  try {
    pres = vucert::build_presentation(kind, genus, genus2, m);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  vucert::Word word;
  if (word_text) word = parse_word(*word_text);
  vucert::AbelianizedGroup group;
  vucert::AbelianImage image;
  try {
    std::tie(group, image) = vucert::abelianization_image(pres, word);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  if (json) {
    ordered_json doc;
    doc["case"] = vucert::to_string(kind);
    doc["gluing"] = matrix_json(m);
    doc["free_rank"] = group.free_rank;
    ordered_json torsion = ordered_json::array();
    for (const auto& d : group.torsion_divisors) torsion.push_back(d.convert_to<long long>());
    doc["torsion"] = std::move(torsion);
    if (word_text) {
      doc["word"] = word.to_string();
      ordered_json coords = ordered_json::array();
      for (const auto& c : image.coords) coords.push_back(c.str());
      doc["image"] = std::move(coords);
      doc["is_torsion"] = image.is_torsion;
    }
    emit(doc);
  } else {
    std::cout << "H1 = Z^" << group.free_rank;
    for (const auto& d : group.torsion_divisors) std::cout << " + Z/" << d;
    std::cout << "\n";
    if (word_text) {
      std::cout << "image(" << word.to_string() << ") = [";
      for (std::size_t i = 0; i < image.coords.size(); ++i)
        std::cout << (i ? "," : "") << image.coords[i];
      std::cout << "] " << (image.is_torsion ? "torsion" : "infinite-order") << "\n";
    }
  }
  if (word_text) return image.is_torsion ? kExitYes : kExitNo;
  return kExitYes;
}

ordered_json verdict_json(const vucert::ForcingVerdict& verdict) {
  ordered_json doc;
  doc["outcome"] = vucert::to_string(verdict.outcome);
  ordered_json targets = ordered_json::array();
  for (const auto& t : verdict.forced_targets) targets.push_back(t.name);
  doc["targets"] = std::move(targets);
  doc["trace"] = verdict.trace;
  doc["oracle_confirmed"] = verdict.oracle_confirmed;
  return doc;
}

int run_force(GraphCase kind, const GluingMatrix& m, const vucert::BlockPattern& pattern,
              bool json) {
  vucert::ForcingVerdict verdict = kind == GraphCase::Loop
                                       ? vucert::check_forcing_loop(m, pattern)
                                       : vucert::check_forcing_edge(m, pattern);
  if (json) {
    ordered_json doc;
    doc["case"] = vucert::to_string(kind);
    doc["matrix"] = matrix_json(m);
    doc["pattern"] = vucert::format_pattern_grid(pattern.dims);
    doc.update(verdict_json(verdict));
    emit(doc);
  } else {
    std::cout << vucert::to_string(verdict.outcome) << "\n";
    for (const auto& t : verdict.forced_targets) std::cout << "forced: " << t.name << "\n";
    for (const auto& line : verdict.trace) std::cout << "trace: " << line << "\n";
  }
  return verdict.outcome == vucert::ForcingOutcome::ForcedVU ? kExitYes : kExitNo;
}

int run_sweep(GraphCase kind, long entry_bound, long b_bound, std::size_t k_bound,
              std::size_t dim_bound, std::size_t cell_bound) {
  // One JSON line per job, then a summary object (streaming; byte-stable for
  // identical inputs).
  std::size_t jobs = 0, forced = 0, decomposable = 0, not_forced = 0, violated = 0;
  auto run_job = [&](const GluingMatrix& m, const vucert::BlockPattern& pattern) {
    vucert::ForcingVerdict verdict = kind == GraphCase::Loop
                                         ? vucert::check_forcing_loop(m, pattern)
                                         : vucert::check_forcing_edge(m, pattern);
    ++jobs;
    switch (verdict.outcome) {
      case vucert::ForcingOutcome::ForcedVU: ++forced; break;
      case vucert::ForcingOutcome::Decomposable: ++decomposable; break;
      case vucert::ForcingOutcome::NotForced: ++not_forced; break;
      case vucert::ForcingOutcome::HypothesisViolated: ++violated; break;
    }
    ordered_json line;
    line["case"] = vucert::to_string(kind);
    line["matrix"] = matrix_json(m);
    line["pattern"] = vucert::format_pattern_grid(pattern.dims);
    line["outcome"] = vucert::to_string(verdict.outcome);
    line["oracle_confirmed"] = verdict.oracle_confirmed;
    std::cout << line.dump() << "\n";
  };
  if (kind == GraphCase::Loop) {
    vucert::enumerate_loop_gluings(entry_bound, b_bound, 2, [&](const GluingMatrix& m) {
      vucert::enumerate_loop_patterns(k_bound, dim_bound,
                                      [&](const vucert::BlockPattern& p) { run_job(m, p); });
    });
  } else {
    vucert::enumerate_edge_gluings(entry_bound, [&](const GluingMatrix& m) {
      vucert::enumerate_edge_patterns(k_bound, k_bound, cell_bound,
                                      [&](const vucert::BlockPattern& p) { run_job(m, p); });
    });
  }
  ordered_json summary;
  summary["jobs"] = jobs;
  summary["forced"] = forced;
  summary["decomposable"] = decomposable;
  summary["not_forced"] = not_forced;
  summary["hypothesis_violated"] = violated;
  std::cout << summary.dump() << "\n";
  return kExitYes;
}

int run_verify_rep(const std::string& path, bool json) {
  vucert::Representation rep = vucert::parse_representation(read_file(path));
  vucert::Presentation pres = rep.binding()->presentation();
  vucert::RelationReport report = vucert::verify_relations(rep, pres);
  if (json) {
    ordered_json doc;
    doc["pass"] = report.pass;
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures)
      failures.push_back(ordered_json{{"relator", f.label}, {"residue", f.residue}});
    doc["failures"] = std::move(failures);
    emit(doc);
  } else {
    if (report.pass) {
      std::cout << "relations verified\n";
    } else {
      for (const auto& f : report.failures)
        std::cout << "fails relator " << f.label << ": " << f.residue << " != identity\n";
    }
  }
  return report.pass ? kExitYes : kExitNo;
}

int run_vu_word(const std::string& path, const std::string& word_text, bool json) {
  vucert::Representation rep = vucert::parse_representation(read_file(path));
  vucert::Word word = parse_word(word_text);
  vucert::VUReport report;
  try {
    report = vucert::analyze_word(rep, word);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  if (json) {
    ordered_json doc;
    doc["word"] = word.to_string();
    doc["char_poly"] = report.char_poly.to_string();
    doc["norm_poly"] = vucert::to_string(report.norm_poly);
    if (report.cyclotomic_multiset) {
      ordered_json multiset = ordered_json::array();
      for (const auto& d : *report.cyclotomic_multiset)
        multiset.push_back(d.convert_to<long long>());
      doc["cyclotomic_multiset"] = std::move(multiset);
    } else {
      doc["cyclotomic_multiset"] = nullptr;
    }
    doc["verdict"] = report.verdict;
    if (report.witness_order)
      doc["witness_order"] = report.witness_order->convert_to<long long>();
    else
      doc["witness_order"] = nullptr;
    emit(doc);
  } else {
    if (report.verdict)
      std::cout << "virtually unipotent (witness order " << *report.witness_order << ")\n";
    else
      std::cout << "not virtually unipotent\n";
  }
  return report.verdict ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates of virtual unipotence for one-torus graph-manifold groups"};
  app.require_subcommand(1);

  std::string case_name, matrix_text, pattern_text, rep_path, word_text;
  long genus = 0, genus2 = -1;
  bool json = false;
  long entry_bound = 3, b_bound = 1;
  std::size_t k_bound = 2, dim_bound = 3, cell_bound = 1;

  auto add_case_matrix = [&](CLI::App* cmd) {
    cmd->add_option("--case", case_name, "loop or edge")->required();
    cmd->add_option("--matrix", matrix_text, "gluing matrix a,b,c,d (row-major)")->required();
    cmd->add_flag("--json", json, "emit one JSON document");
  };

  CLI::App* npc = app.add_subcommand("npc", "nonpositive-curvature criterion");
  add_case_matrix(npc);

  CLI::App* certificate = app.add_subcommand("certificate", "certified virtually unipotent words");
  add_case_matrix(certificate);

  CLI::App* presentation = app.add_subcommand("presentation", "fundamental group presentation");
  add_case_matrix(presentation);
  presentation->add_option("--genus", genus, "genus of the (first) block")->required();
  presentation->add_option("--genus2", genus2, "genus of the second block (edge)");

  CLI::App* h1 = app.add_subcommand("h1", "abelianization and word image");
  add_case_matrix(h1);
  h1->add_option("--genus", genus, "genus of the (first) block")->required();
  h1->add_option("--genus2", genus2, "genus of the second block (edge)");
  h1->add_option("--word", word_text, "word to project (syntax f^2*z)");

  CLI::App* force = app.add_subcommand("force", "integer forcing system verdict");
  add_case_matrix(force);
  force->add_option("--pattern", pattern_text, "block pattern, e.g. 1,1;1,1")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "window of forcing verdicts (JSON lines)");
  sweep->add_option("--case", case_name, "loop or edge")->required();
  sweep->add_option("--entry-bound", entry_bound, "bound on gluing matrix entries");
  sweep->add_option("--b-bound", b_bound, "loop: bound on b");
  sweep->add_option("--k-bound", k_bound, "bound on the number of eigenvalue indices");
  sweep->add_option("--dim-bound", dim_bound, "loop: bound on total pattern dimension");
  sweep->add_option("--cell-bound", cell_bound, "edge: bound on each pattern cell");

  CLI::App* verify = app.add_subcommand("verify-rep", "check a representation file");
  verify->add_option("--rep", rep_path, "representation JSON file")->required();
  verify->add_flag("--json", json, "emit one JSON document");

  CLI::App* vu_word = app.add_subcommand("vu-word", "virtual unipotence of a word's image");
  vu_word->add_option("--rep", rep_path, "representation JSON file")->required();
  vu_word->add_option("--word", word_text, "word to analyze (syntax f^2*z)")->required();
  vu_word->add_flag("--json", json, "emit one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(npc)) {
      GraphCase kind = parse_case(case_name);
      return run_npc(kind, parse_matrix(kind, matrix_text), json);
    }
    if (app.got_subcommand(certificate)) {
      GraphCase kind = parse_case(case_name);
      return run_certificate(kind, parse_matrix(kind, matrix_text), json);
    }
    if (app.got_subcommand(presentation)) {
      GraphCase kind = parse_case(case_name);
      std::optional<Int> g2;
      if (genus2 >= 0) g2 = Int(genus2);
      return run_presentation(kind, parse_matrix(kind, matrix_text), Int(genus), g2, json);
    }
    if (app.got_subcommand(h1)) {
      GraphCase kind = parse_case(case_name);
      std::optional<Int> g2;
      if (genus2 >= 0) g2 = Int(genus2);
      std::optional<std::string> word;
      if (h1->count("--word")) word = word_text;
      return run_h1(kind, parse_matrix(kind, matrix_text), Int(genus), g2, word, json);
    }
    if (app.got_subcommand(force)) {
      GraphCase kind = parse_case(case_name);
      return run_force(kind, parse_matrix(kind, matrix_text),
                       parse_pattern(kind, pattern_text), json);
    }
    if (app.got_subcommand(sweep)) {
      GraphCase kind = parse_case(case_name);
      return run_sweep(kind, entry_bound, b_bound, k_bound, dim_bound, cell_bound);
    }
    if (app.got_subcommand(verify)) return run_verify_rep(rep_path, json);
    if (app.got_subcommand(vu_word)) return run_vu_word(rep_path, word_text, json);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
