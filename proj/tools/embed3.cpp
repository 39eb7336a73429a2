#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "embed3/algebra.hpp"
#include "embed3/detail/jsonio.hpp"
#include "embed3/maclane.hpp"
#include "embed3/matroid.hpp"
#include "embed3/pipeline.hpp"

namespace {

using namespace embed3;

constexpr int exit_usage = 10;
constexpr int exit_scale = 11;
constexpr int exit_internal = 12;
constexpr int exit_other = 13;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
}

// Matrix document: {"format": "embed3-matrix", "field": "...",
// "row_labels": [...], "col_labels": [...], "entries": [[...], ...]} with
// integer or "p/q"-string entries.
matroid::VectorMatroid parse_matrix_document(const detail::Json& doc) {
  algebra::FieldTag k = algebra::parse_field(doc.value("field", "gf2"));
  std::vector<Id> rlab, clab;
  for (const detail::Json& r : doc.at("row_labels"))
    rlab.push_back(detail::id_from_json(r));
  for (const detail::Json& c : doc.at("col_labels"))
    clab.push_back(detail::id_from_json(c));
  algebra::ExactMatrix m(k, rlab, clab);
  const detail::Json& entries = doc.at("entries");
  if (!entries.is_array() || entries.size() != rlab.size())
    throw ParseError("entries must hold one row per row label");
  for (std::size_t i = 0; i < rlab.size(); ++i) {
    const detail::Json& row = entries[i];
    if (!row.is_array() || row.size() != clab.size())
      throw ParseError("row " + std::to_string(i) + " must hold " +
                       std::to_string(clab.size()) + " entries");
    for (std::size_t j = 0; j < clab.size(); ++j) {
      const detail::Json& e = row[j];
      if (e.is_number_integer())
        m.set(i, j, algebra::Rat(e.get<long long>()));
      else if (e.is_string())
        m.set(i, j, algebra::Rat(e.get<std::string>()));
      else
        throw ParseError("matrix entries are integers or \"p/q\" strings");
    }
  }
  return matroid::VectorMatroid{m};
}

std::string graph_text(const Graph& g) {
  std::string out = std::to_string(g.vertices.size()) +
                    (g.vertices.size() == 1 ? " vertex {" : " vertices {") +
                    join_ids(g.vertices) + "}, " +
                    std::to_string(g.edges.size()) +
                    (g.edges.size() == 1 ? " edge\n" : " edges\n");
  for (const Graph::Edge& e : g.edges)
    out += "  " + e.id.to_string() + ": " + e.u.to_string() + " -- " +
           e.v.to_string() + "\n";
  return out;
}

int run_check_single(const cx::DirectedComplex& c,
                     const algebra::FieldTag& field,
                     const std::string& cert_path,
                     const std::string& format) {
  pipe::Options opt;
  opt.field = field;
  pipe::Verdict v = pipe::decide(c, opt);
  if (format == "structured")
    std::cout << pipe::report_structured(v);
  else
    std::cout << pipe::report_text(v);
  if (!cert_path.empty()) {
    if (v.certificate)
      write_file(cert_path, rot::serialize_certificate(*v.certificate));
    else
      std::cerr << "no certificate to write (status " +
                       pipe::status_name(v.status) + ")\n";
  }
  return pipe::exit_code(v.status);
}

int run_check_all_fields(const cx::DirectedComplex& c,
                         const std::string& cert_path,
                         const std::string& format) {
  const std::vector<algebra::FieldTag> fields = {
      algebra::FieldTag::gf(2), algebra::FieldTag::gf(3),
      algebra::FieldTag::gf(5), algebra::FieldTag::rationals()};
  std::vector<pipe::Verdict> verdicts;
  for (const algebra::FieldTag& k : fields) {
    pipe::Options opt;
    opt.field = k;
    verdicts.push_back(pipe::decide(c, opt));
  }

  // Cross-field consistency: the dual matroids must be isomorphic, and the
  // identity bijection on the (shared) face ground set must already work.
  bool isomorphic = true;
  std::string iso_note = "dual matroids pairwise isomorphic over " +
                         std::to_string(fields.size()) +
                         " fields; identity bijection verified";
  for (std::size_t i = 0; i + 1 < fields.size() && isomorphic; ++i) {
    matroid::Matroid a =
        matroid::matroid_of(matroid::dual_matroid(c, fields[i]));
    matroid::Matroid b =
        matroid::matroid_of(matroid::dual_matroid(c, fields[i + 1]));
    matroid::EqualityReport eq = matroid::matroids_equal(a, b);
    if (!eq.equal) {
      isomorphic = false;
      iso_note = "identity map fails between " + fields[i].name() + " and " +
                 fields[i + 1].name() + " dual matroids";
      if (!matroid::matroid_isomorphic(a, b))
        iso_note += "; no isomorphism exists at all";
    }
  }

  int worst = 0;
  for (const pipe::Verdict& v : verdicts)
    worst = std::max(worst, pipe::exit_code(v.status));

  if (format == "structured") {
    detail::Json j = detail::Json::object();
    j["format"] = "embed3-report-all";
    j["version"] = 1;
    j["cross_field_isomorphic"] = isomorphic;
    j["cross_field_note"] = iso_note;
    j["exit_code"] = worst;
    j["reports"] = detail::Json::array();
    for (const pipe::Verdict& v : verdicts)
      j["reports"].push_back(detail::Json::parse(pipe::report_structured(v)));
    std::cout << detail::render_document(j);
  } else {
    for (const pipe::Verdict& v : verdicts) {
      std::cout << "=== field " << v.field.name() << " ===\n"
                << pipe::report_text(v) << "\n";
    }
    std::cout << "cross-field: " << iso_note << "\n";
  }

  if (!cert_path.empty()) {
    if (verdicts.front().certificate)
      write_file(cert_path,
                 rot::serialize_certificate(*verdicts.front().certificate));
    else
      std::cerr << "no certificate to write (status " +
                       pipe::status_name(verdicts.front().status) + ")\n";
  }
  if (!isomorphic)
    throw InternalCheckFailure("cross-field dual matroids disagree: " +
                               iso_note);
  return worst;
}

int run_matroid(const std::string& path, bool realize) {
  detail::Json doc;
  try {
    doc = detail::Json::parse(read_file(path));
  } catch (const std::exception& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  matroid::VectorMatroid m;
  if (doc.is_object() && doc.contains("vertices")) {
    cx::DirectedComplex c = cx::read_complex(doc.dump());
    m = matroid::dual_matroid(c, algebra::FieldTag::gf(2));
    std::cout << "dual matroid of the complex over gf2\n";
  } else if (doc.is_object() && doc.value("format", "") == "embed3-matrix") {
    m = parse_matrix_document(doc);
    std::cout << "column matroid of the matrix over " << m.rep.field.name()
              << "\n";
  } else {
    throw ParseError(
        "input must be a complex document (with \"vertices\") or an "
        "embed3-matrix document");
  }

  matroid::Matroid view = matroid::matroid_of(m);
  std::cout << "ground (" << view.ground.size() << "): {"
            << join_ids(view.ground) << "}\n";
  std::cout << "rank: " << algebra::rank_of(m.rep) << "\n";
  std::vector<Id> loop_ids = matroid::loops(view);
  std::cout << "loops (" << loop_ids.size() << "): {" << join_ids(loop_ids)
            << "}\n";
  if (view.ground.size() <= 16) {
    try {
      std::vector<std::vector<Id>> cs = matroid::circuits(view);
      std::cout << "circuits (" << cs.size() << "):\n";
      for (const std::vector<Id>& circ : cs)
        std::cout << "  {" << join_ids(circ) << "}\n";
    } catch (const ScaleExceeded& e) {
      std::cout << "circuits: skipped (" << e.what() << ")\n";
    }
  } else {
    std::cout << "circuits: skipped (ground too large to enumerate)\n";
  }
  if (realize) {
    std::optional<matroid::Realization> r = matroid::graph_realization(m);
    if (r) {
      std::cout << "graphic: yes\n" << graph_text(r->g);
    } else {
      std::cout << "graphic: no\n";
      return 1;
    }
  }
  return 0;
}

int run_maclane(const std::string& path, const algebra::FieldTag& field) {
  cx::DirectedComplex c = cx::read_complex(read_file(path));
  maclane::MaclaneVerdict v = maclane::maclane_check(c, field);
  std::cout << "sparse generating set exists: "
            << (v.sparse_generating_set_exists ? "yes" : "no") << "\n";
  std::cout << "note: " << v.note << "\n";
  if (!v.sparse_generating_set_exists) return 1;
  std::cout << "realizing graph:\n" << graph_text(v.realization->g);
  std::cout << "family (coordinates {" << join_ids(v.family.coords)
            << "} over " << field.name() << "):\n";
  for (const auto& [label, row] : v.family.vectors) {
    std::cout << "  " << label.to_string() << ":";
    for (const algebra::Rat& x : row) std::cout << " " << x.str();
    std::cout << "\n";
  }
  std::cout << "spans the 2-cycle space: "
            << (v.family_spans_cycle_space ? "exactly"
                                           : "up to coordinate rescaling")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "decides embeddability of simply connected k-local 2-complexes in "
      "3-space via dual-matroid certificates"};
  app.require_subcommand(1);

  std::string check_file, check_field = "gf2", check_cert, check_format =
                                                               "text";
  CLI::App* check = app.add_subcommand(
      "check", "run the decision pipeline on a complex file");
  check->add_option("file", check_file, "complex document (JSON)")
      ->required();
  check->add_option("--field", check_field,
                    "gf2 | gf3 | gf5 | gf(p) | rational | all");
  check->add_option("--certificate", check_cert,
                    "write the certificate here when one is produced");
  check->add_option("--format", check_format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string corpus_name, corpus_out;
  CLI::App* corpus =
      app.add_subcommand("corpus", "emit a built-in example complex");
  corpus->add_option("name", corpus_name, "corpus instance name")->required();
  corpus->add_option("--out", corpus_out, "write to this file");

  std::string matroid_file;
  bool matroid_realize = false;
  CLI::App* matroid_cmd = app.add_subcommand(
      "matroid", "inspect the dual matroid of a complex or the column "
                 "matroid of a matrix document");
  matroid_cmd->add_option("file", matroid_file, "complex or matrix document")
      ->required();
  matroid_cmd->add_flag("--realize", matroid_realize,
                        "attempt a graph realization");

  std::string maclane_file, maclane_field = "gf2";
  CLI::App* maclane_cmd = app.add_subcommand(
      "maclane", "sparse generating set check for the 2-cycle space");
  maclane_cmd->add_option("file", maclane_file, "complex document (JSON)")
      ->required();
  maclane_cmd->add_option("--field", maclane_field,
                          "gf2 | gf3 | gf5 | gf(p) | rational");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (check->parsed()) {
      cx::DirectedComplex c = cx::read_complex(read_file(check_file));
      if (check_field == "all")
        return run_check_all_fields(c, check_cert, check_format);
      return run_check_single(c, algebra::parse_field(check_field),
                              check_cert, check_format);
    }
    if (corpus->parsed()) {
      std::string text = cx::serialize_complex(pipe::corpus(corpus_name));
      if (corpus_out.empty())
        std::cout << text;
      else
        write_file(corpus_out, text);
      return 0;
    }
    if (matroid_cmd->parsed())
      return run_matroid(matroid_file, matroid_realize);
    if (maclane_cmd->parsed())
      return run_maclane(maclane_file, algebra::parse_field(maclane_field));
  } catch (const ScaleExceeded& e) {
    std::cerr << "scale limit: " << e.what() << "\n";
    return exit_scale;
  } catch (const InternalCheckFailure& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return exit_internal;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const pipe::UnknownCorpusName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_other;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_other;
  }
  return 0;
}
