// Command-line front end: inspect complexes, decide properties with
// machine-checkable certificates, glue copies, and re-run the built-in
// corpus checks.
//
// check exit codes: 0 property holds, 1 property refuted, 2 error,
// 3 budget exceeded (never reported as UNSAT).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simpart/cohen_macaulay.hpp"
#include "simpart/complex.hpp"
#include "simpart/constructibility.hpp"
#include "simpart/corpus.hpp"
#include "simpart/glue.hpp"
#include "simpart/homology.hpp"
#include "simpart/io.hpp"
#include "simpart/partition.hpp"
#include "simpart/shelling.hpp"

namespace {

using namespace simpart;

VertexMap map_for_labels(const std::vector<std::string>& labels) {
  bool identity = true;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != std::to_string(i)) {
      identity = false;
      break;
    }
  return identity ? VertexMap::numeric() : VertexMap::from_labels(labels);
}

ComplexDocument load_complex(const std::string& path) {
  if (path.rfind("corpus:", 0) == 0) {
    const CorpusEntry& entry = corpus_get(path.substr(7));
    RealizedComplex rc = corpus_realize(entry);
    ComplexDocument doc;
    doc.source = path;
    doc.labels = map_for_labels(rc.labels);
    doc.closure = rc.closure;
    if (rc.relative) doc.removed = rc.removed;
    return doc;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ComplexDocument doc = read_complex(in, path);
  doc.source = path;
  return doc;
}

void print_warnings(const ComplexDocument& doc) {
  for (const std::string& w : doc.warnings)
    std::cerr << doc.source << ": warning: " << w << '\n';
}

int default_threads() {
  if (const char* env = std::getenv("SIMPART_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

/// Facet list arguments ("0237,0267" or "0.2.3.7,..." for multi-character
/// vertex names).
std::vector<Face> parse_order(const std::string& text, const VertexMap& map) {
  std::vector<Face> order;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    Face f;
    if (token.find('.') != std::string::npos) {
      std::istringstream tin(token);
      std::string name;
      while (std::getline(tin, name, '.')) {
        std::optional<int> v = map.index_of(name);
        if (!v) throw std::runtime_error("unknown vertex name '" + name + "'");
        f = f.with(*v);
      }
    } else {
      for (char ch : token) {
        std::optional<int> v = map.index_of(std::string(1, ch));
        if (!v)
          throw std::runtime_error("unknown vertex name '" + std::string(1, ch) +
                                   "' (use '.' to separate multi-character names)");
        f = f.with(*v);
      }
    }
    order.push_back(f);
  }
  return order;
}

int cmd_info(const std::string& path) {
  ComplexDocument doc = load_complex(path);
  print_warnings(doc);
  if (doc.relative()) {
    RelativeComplex phi = doc.as_relative();
    std::cout << doc.source << ": relative complex, dimension " << phi.dimension()
              << (phi.pure() ? " (pure)" : " (not pure)") << ", "
              << phi.maximal_faces().size() << " maximal faces, " << phi.faces().size()
              << " faces\n";
    std::cout << "f = " << to_string(phi.f_vector()) << '\n';
    std::cout << "h = " << to_string(phi.h_vector()) << '\n';
    std::cout << "minimal faces:";
    for (const Face& f : phi.minimal_faces())
      std::cout << ' ' << face_to_labels(f, doc.labels);
    std::cout << '\n';
  } else {
    const SimplicialComplex& k = doc.closure;
    std::cout << doc.source << ": complex, dimension " << k.dimension()
              << (k.is_void() ? "" : k.pure() ? " (pure)" : " (not pure)") << ", "
              << k.vertices().size() << " vertices, " << k.facets().size()
              << " facets\n";
    std::cout << "f = " << to_string(k.f_vector()) << '\n';
    std::cout << "h = " << to_string(k.h_vector()) << '\n';
  }
  return 0;
}

struct CheckOptions {
  std::string which;
  std::string path;
  std::string order;
  std::string out;
  std::string constructibility_out;
  std::optional<double> budget;
  int threads = 1;
};

void emit(const CheckOptions& opts, const std::string& text) {
  if (opts.out.empty())
    std::cout << text;
  else
    write_text_file(opts.out, text);
}

int check_partition(const CheckOptions& opts, const ComplexDocument& doc) {
  SearchLimits limits{opts.budget, opts.threads};
  PartitionSearchResult r = doc.relative() ? find_partitioning(doc.as_relative(), limits)
                                           : find_partitioning(doc.closure, limits);
  std::ostringstream body;
  if (r.report.status == SearchStatus::sat) {
    write_partitioning(body, *r.certificate, doc.labels);
    emit(opts, body.str());
    std::cerr << doc.source << ": partitionable (" << r.report.nodes_explored
              << " nodes, " << r.report.options_generated << " options)\n";
    return 0;
  }
  write_search_report(body, r.report, "partitionability");
  emit(opts, body.str());
  if (r.report.status == SearchStatus::budget_exceeded) {
    std::cerr << doc.source << ": search budget exceeded; no verdict\n";
    return 3;
  }
  std::cerr << doc.source << ": not partitionable (exhausted "
            << r.report.nodes_explored << " nodes)\n";
  return 1;
}

int check_shelling(const CheckOptions& opts, const ComplexDocument& doc) {
  if (doc.relative()) throw std::runtime_error("shellability applies to absolute complexes");
  std::ostringstream body;
  std::optional<ShellingOrder> shelling;
  int rc = 0;
  if (!opts.order.empty()) {
    std::vector<Face> order = parse_order(opts.order, doc.labels);
    ShellingVerifyResult v = verify_shelling(doc.closure, order);
    if (!v.valid) {
      std::cerr << doc.source << ": " << v.violation << '\n';
      return 1;
    }
    shelling = v.shelling;
    write_shelling(body, *shelling, doc.labels);
    emit(opts, body.str());
    std::cerr << doc.source << ": order is a shelling\n";
  } else {
    SearchLimits limits{opts.budget, opts.threads};
    ShellingSearchResult r = find_shelling(doc.closure, limits);
    if (r.report.status == SearchStatus::sat) {
      shelling = r.certificate;
      write_shelling(body, *shelling, doc.labels);
      emit(opts, body.str());
      std::cerr << doc.source << ": shellable (" << r.report.nodes_explored << " nodes)\n";
    } else {
      write_search_report(body, r.report, "shellability");
      emit(opts, body.str());
      if (r.report.status == SearchStatus::budget_exceeded) {
        std::cerr << doc.source << ": search budget exceeded; no verdict\n";
        return 3;
      }
      std::cerr << doc.source << ": not shellable (exhausted " << r.report.nodes_explored
                << " nodes)\n";
      rc = 1;
    }
  }
  if (shelling && !opts.constructibility_out.empty()) {
    ConstructibilityCert cert = shelling_to_constructibility(doc.closure, shelling->order);
    std::ostringstream cbody;
    write_constructibility(cbody, cert, doc.labels);
    write_text_file(opts.constructibility_out, cbody.str());
  }
  return rc;
}

int check_cm(const CheckOptions&, const ComplexDocument& doc) {
  CmVerdict v = doc.relative() ? is_cohen_macaulay(doc.as_relative())
                               : is_cohen_macaulay(doc.closure);
  if (v.cohen_macaulay) {
    std::cout << doc.source << ": Cohen-Macaulay\n";
    return 0;
  }
  std::cout << doc.source << ": not Cohen-Macaulay; witness face "
            << face_to_labels(v.witness->face, doc.labels) << " has H~_"
            << v.witness->degree << "(link) = " << to_string(v.witness->group) << '\n';
  return 1;
}

int check_balanced(const CheckOptions&, const ComplexDocument& doc) {
  if (doc.relative()) throw std::runtime_error("balancedness applies to absolute complexes");
  BalanceCheck r = is_balanced(doc.closure);
  if (!r.balanced) {
    std::cout << doc.source << ": not balanced\n";
    return 1;
  }
  std::cout << doc.source << ": balanced; coloring:";
  for (std::size_t v = 0; v < r.coloring.size(); ++v)
    if (r.coloring[v] >= 0)
      std::cout << ' ' << doc.labels.label_of(static_cast<int>(v)) << '='
                << r.coloring[v];
  std::cout << '\n';
  return 0;
}

int check_homology(const CheckOptions&, const ComplexDocument& doc) {
  HomologyProfile p = doc.relative() ? reduced_homology(doc.as_relative())
                                     : reduced_homology(doc.closure);
  for (int i = -1; i <= p.top_dim; ++i)
    std::cout << "H~_" << i << " = " << to_string(p.at(i)) << '\n';
  return p.all_zero() ? 0 : 1;
}

int cmd_check(const CheckOptions& opts) {
  ComplexDocument doc = load_complex(opts.path);
  print_warnings(doc);
  if (opts.which == "partition") return check_partition(opts, doc);
  if (opts.which == "shell") return check_shelling(opts, doc);
  if (opts.which == "cm") return check_cm(opts, doc);
  if (opts.which == "balanced") return check_balanced(opts, doc);
  if (opts.which == "homology") return check_homology(opts, doc);
  throw std::runtime_error("unknown check '" + opts.which +
                           "' (expected cm|partition|shell|balanced|homology)");
}

int cmd_glue(const std::string& xpath, const std::string& apath, int copies,
             const std::string& out) {
  ComplexDocument xdoc = load_complex(xpath);
  ComplexDocument adoc = load_complex(apath);
  print_warnings(xdoc);
  print_warnings(adoc);
  if (xdoc.relative() || adoc.relative())
    throw std::runtime_error("glue expects absolute complexes");

  GlueSpec spec{xdoc.closure, adoc.closure, copies};
  GlueHypothesesReport rep = check_glue_hypotheses(spec);
  std::cerr << "X Cohen-Macaulay: " << (rep.x_cohen_macaulay ? "yes" : "no") << '\n'
            << "A Cohen-Macaulay: " << (rep.a_cohen_macaulay ? "yes" : "no") << '\n'
            << "A induced in X:   " << (rep.a_induced ? "yes" : "no") << '\n'
            << "codimension:      " << rep.codimension << '\n'
            << "faces of A:       " << rep.a_total_faces << '\n'
            << "copies:           " << rep.copies
            << (rep.pigeonhole_ok ? " (exceeds the face count of A)"
                                  : " (does not exceed the face count of A)")
            << '\n';
  if (!rep.a_induced)
    std::cerr << "warning: A is not an induced subcomplex of X"
              << (rep.induced_witness
                      ? "; minimal non-vertex face " +
                            face_to_labels(*rep.induced_witness, xdoc.labels)
                      : std::string())
              << '\n';

  GlueResult g = glue(spec);
  ComplexDocument doc;
  doc.labels = map_for_labels(g.labels);
  doc.closure = g.complex;
  std::ostringstream body;
  body << "# glued complex: " << copies << " copies of " << xpath << " identified along "
       << apath << "\n";
  write_complex(body, doc);
  if (out.empty() || out == "-")
    std::cout << body.str();
  else
    write_text_file(out, body.str());
  std::cerr << "f = " << to_string(g.complex.f_vector()) << '\n';
  return 0;
}

int cmd_export(const std::string& name, const std::string& out) {
  std::string full = name.rfind("corpus:", 0) == 0 ? name : "corpus:" + name;
  ComplexDocument doc = load_complex(full);
  std::ostringstream body;
  write_complex(body, doc);
  if (out.empty() || out == "-")
    std::cout << body.str();
  else
    write_text_file(out, body.str());
  return 0;
}

int cmd_list() {
  for (const CorpusEntry& e : corpus()) {
    std::cout << std::left << std::setw(10) << e.name << ' ' << e.expected.notes << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& cert_path, const std::string& complex_path,
               std::optional<double> budget, int threads) {
  ComplexDocument doc = load_complex(complex_path);
  print_warnings(doc);
  std::ifstream in(cert_path);
  if (!in) throw std::runtime_error("cannot open " + cert_path);
  CertificateDocument cert = read_certificate(in, doc.labels, cert_path);

  switch (cert.kind) {
    case CertKind::partitioning: {
      PartitionVerifyResult r =
          doc.relative() ? verify_partitioning(doc.as_relative(), cert.partitioning)
                         : verify_partitioning(doc.closure, cert.partitioning);
      if (r.valid) {
        std::cout << cert_path << ": valid partitioning of " << doc.source << '\n';
        return 0;
      }
      std::cout << cert_path << ": invalid: " << r.violation << '\n';
      return 1;
    }
    case CertKind::shelling: {
      if (doc.relative())
        throw std::runtime_error("shellings apply to absolute complexes");
      ShellingVerifyResult r = verify_shelling(doc.closure, cert.shelling.order);
      if (!r.valid) {
        std::cout << cert_path << ": invalid: " << r.violation << '\n';
        return 1;
      }
      if (!cert.shelling.restrictions.empty() &&
          cert.shelling.restrictions != r.shelling.restrictions) {
        std::cout << cert_path << ": invalid: stored restriction faces differ\n";
        return 1;
      }
      std::cout << cert_path << ": valid shelling of " << doc.source << '\n';
      return 0;
    }
    case CertKind::constructibility: {
      if (doc.relative())
        throw std::runtime_error("constructibility applies to absolute complexes");
      ConstructibilityVerifyResult r =
          verify_constructibility(doc.closure, cert.constructibility);
      if (r.valid) {
        std::cout << cert_path << ": valid constructibility certificate for "
                  << doc.source << '\n';
        return 0;
      }
      std::cout << cert_path << ": invalid: " << r.violation << '\n';
      return 1;
    }
    case CertKind::search_report: {
      if (cert.report.status == SearchStatus::budget_exceeded)
        throw std::runtime_error("a budget-exceeded report carries no verifiable claim");
      SearchLimits limits{budget, threads};
      SearchReport fresh;
      if (cert.target == "partitionability") {
        fresh = doc.relative() ? find_partitioning(doc.as_relative(), limits).report
                               : find_partitioning(doc.closure, limits).report;
      } else if (cert.target == "shellability") {
        if (doc.relative())
          throw std::runtime_error("shellings apply to absolute complexes");
        fresh = find_shelling(doc.closure, limits).report;
      } else {
        throw std::runtime_error("unknown search-report target '" + cert.target + "'");
      }
      if (fresh.status == SearchStatus::budget_exceeded) {
        std::cout << cert_path << ": verification budget exceeded; no verdict\n";
        return 3;
      }
      if (fresh.status == cert.report.status &&
          fresh.nodes_explored == cert.report.nodes_explored &&
          fresh.options_generated == cert.report.options_generated) {
        std::cout << cert_path << ": reproduced (result and node counts match)\n";
        return 0;
      }
      std::cout << cert_path << ": NOT reproduced\n";
      return 1;
    }
  }
  return 2;
}

int cmd_reproduce(bool skip_slow, int threads, const std::string& filter) {
  CorpusVerifyOptions opts;
  opts.skip_slow = skip_slow;
  opts.threads = threads;
  std::vector<CheckOutcome> rows;
  for (const CorpusEntry& entry : corpus()) {
    if (!filter.empty() && entry.name.find(filter) == std::string::npos) continue;
    std::vector<CheckOutcome> entry_rows = corpus_verify(entry, opts);
    rows.insert(rows.end(), entry_rows.begin(), entry_rows.end());
  }
  bool all_pass = true;
  auto pad = [](const std::string& s, std::size_t width) {
    return s.size() >= width ? s + ' ' : s + std::string(width - s.size(), ' ');
  };
  std::cout << "   " << pad("entry", 10) << pad("check", 24) << pad("result", 42)
            << "time\n";
  for (const CheckOutcome& row : rows) {
    std::string mark = row.skipped ? "-" : row.pass ? "✓" : "✗";
    if (!row.skipped && !row.pass) all_pass = false;
    std::ostringstream time;
    time << std::fixed << std::setprecision(2) << row.seconds << " s";
    std::cout << mark << "  " << pad(row.entry, 10) << pad(row.check, 24)
              << pad(row.got, 42) << (row.skipped ? "" : time.str()) << '\n';
  }
  std::cout << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decision procedures for small simplicial complexes"};
  app.require_subcommand(1);
  int threads = default_threads();

  auto* info = app.add_subcommand("info", "print dimension, counts, f- and h-vectors");
  std::string info_path;
  info->add_option("path", info_path, "complex file or corpus:<name>")->required();

  auto* check = app.add_subcommand(
      "check", "decide a property (cm|partition|shell|balanced|homology)");
  CheckOptions copts;
  check->add_option("which", copts.which, "property to decide")->required();
  check->add_option("path", copts.path, "complex file or corpus:<name>")->required();
  check->add_option("--order", copts.order,
                    "facet order to verify as a shelling (comma-separated)");
  check->add_option("--out", copts.out, "write the certificate to this file");
  check->add_option("--constructibility-out", copts.constructibility_out,
                    "also derive a constructibility certificate from the shelling");
  check->add_option("--budget", copts.budget, "search budget in seconds");
  check->add_option("--threads", threads, "worker threads for searches");

  auto* glue_cmd = app.add_subcommand("glue", "identify N copies of X along A");
  std::string glue_x, glue_a, glue_out;
  int glue_n = 1;
  glue_cmd->add_option("X", glue_x, "complex to copy")->required();
  glue_cmd->add_option("A", glue_a, "shared subcomplex")->required();
  glue_cmd->add_option("N", glue_n, "number of copies")->required();
  glue_cmd->add_option("out", glue_out, "output file ('-' for stdout)");

  auto* reproduce = app.add_subcommand("reproduce", "run every corpus check");
  bool skip_slow = false;
  std::string filter;
  reproduce->add_flag("--skip-slow", skip_slow,
                      "skip the slow exhaustive searches");
  reproduce->add_option("--filter", filter, "only run entries whose name contains this");
  reproduce->add_option("--threads", threads, "worker threads for searches");

  auto* verify = app.add_subcommand("verify", "re-check a written certificate");
  std::string verify_cert, verify_path;
  std::optional<double> verify_budget;
  verify->add_option("certificate", verify_cert, "certificate file")->required();
  verify->add_option("path", verify_path, "complex file or corpus:<name>")->required();
  verify->add_option("--budget", verify_budget, "budget for re-run verification");
  verify->add_option("--threads", threads, "worker threads for searches");

  auto* export_cmd = app.add_subcommand("export", "write a corpus complex to a file");
  std::string export_name, export_out;
  export_cmd->add_option("name", export_name, "corpus entry name")->required();
  export_cmd->add_option("out", export_out, "output file ('-' for stdout)");

  auto* list = app.add_subcommand("list", "list the corpus entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(info_path);
    if (*check) {
      copts.threads = threads;
      return cmd_check(copts);
    }
    if (*glue_cmd) return cmd_glue(glue_x, glue_a, glue_n, glue_out);
    if (*reproduce) return cmd_reproduce(skip_slow, threads, filter);
    if (*verify) return cmd_verify(verify_cert, verify_path, verify_budget, threads);
    if (*export_cmd) return cmd_export(export_name, export_out);
    if (*list) return cmd_list();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
