#include "psdcomp/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "psdcomp/completion.hpp"
#include "psdcomp/matrix_io.hpp"

namespace psdcomp::cli {

namespace {

std::string vertex_set(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(vs[i] + 1);
  }
  return out + "}";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

void write_policy(std::ostream& out, const TolerancePolicy& tol) {
  out << "rank_rtol = " << format_float(tol.rank_rtol) << "\n";
  out << "psd_rtol = " << format_float(tol.psd_rtol) << "\n";
  out << "zero_atol = " << format_float(tol.zero_atol) << "\n";
}

void write_report(std::ostream& out, const CompletionReport& rep, const TolerancePolicy& tol,
                  const MaximalityReport* maximality) {
  out << "# completion report\n";
  out << "# merge steps: " << rep.merge_log.size() << "\n";
  for (const auto& entry : rep.merge_log) {
    out << "#   separator " << vertex_set(entry.separator) << ", fill " << entry.fill_rows << "x"
        << entry.fill_cols << (entry.hypotheses_ok ? "" : ", hypotheses violated") << "\n";
  }
  for (const auto& warning : rep.warnings) out << "# warning: " << warning << "\n";
  out << "chordal = true\n";
  out << "psd = " << bool_str(rep.psd) << "\n";
  out << "rank = " << rep.rank << "\n";
  out << "gendet = " << format_float(rep.gendet_value) << "\n";
  out << "rank_additive = " << bool_str(rep.rank_additive) << "\n";
  out << "pinv_zero_ok = " << bool_str(rep.pinv_zero_pattern_ok) << "\n";
  out << "hypotheses_held = " << bool_str(rep.hypotheses_held) << "\n";
  if (maximality) {
    out << "maximality_admissible = " << maximality->admissible << "\n";
    out << "maximality_violations = " << maximality->violations << "\n";
    out << "maximality_vacuous = " << bool_str(maximality->vacuous) << "\n";
    out << "maximality_max_ratio = " << format_float(maximality->max_ratio) << "\n";
  }
  write_policy(out, tol);
}

}  // namespace

int cmd_check(const std::string& input, std::ostream& out, std::ostream& err) {
  PatternGraph graph(1);
  try {
    graph = pattern_graph(read_partial_matrix_file(input));
  } catch (const ParseError& e) {
    err << input << ": " << e.what() << "\n";
    return kExitParse;
  }

  const ChordalityResult res = is_chordal(graph);
  if (!res.chordal) {
    out << "chordal: no\n";
    out << "chordless cycle:";
    for (int v : res.witness) out << ' ' << (v + 1);
    out << "\n";
    return kExitNotChordal;
  }

  const auto cliques = maximal_cliques(graph, *res.peo);
  const CliqueTree tree = clique_tree(cliques);
  out << "chordal: yes\n";
  out << "cliques (" << cliques.size() << "):\n";
  for (const auto& c : cliques) out << "  " << vertex_set(c) << "\n";
  out << "clique tree edges (" << tree.edges.size() << "):\n";
  for (const auto& e : tree.edges) {
    out << "  " << vertex_set(tree.cliques[e.a]) << " -- " << vertex_set(tree.cliques[e.b])
        << "  separator " << vertex_set(e.separator) << "\n";
  }
  out << "intersection graph edges (" << tree.intersection_edges.size() << "):\n";
  for (const auto& e : tree.intersection_edges) {
    out << "  " << vertex_set(tree.cliques[e.a]) << " -- " << vertex_set(tree.cliques[e.b])
        << "  weight " << e.separator.size() << "\n";
  }
  return kExitOk;
}

int cmd_complete(const CompleteOptions& options, std::ostream& out, std::ostream& err) {
  TolerancePolicy tol;
  if (options.tol) {
    tol.rank_rtol = *options.tol;
    tol.psd_rtol = *options.tol;
  }
  try {
    tol.validate();
    const PartialHermitianMatrix partial = read_partial_matrix_file(options.input);
    const CompletionReport rep = complete(partial, tol);
    write_partial_matrix_file(options.output,
                              PartialHermitianMatrix::fully_specified(rep.completed));
    for (const auto& warning : rep.warnings) err << "warning: " << warning << "\n";

    if (options.verify || !options.report_path.empty()) {
      MaximalityReport maximality;
      if (options.verify) {
        maximality = verify_det_maximality(partial, rep.completed, tol, 100, 1e-3);
      }
      const MaximalityReport* mptr = options.verify ? &maximality : nullptr;
      if (options.report_path.empty()) {
        write_report(out, rep, tol, mptr);
      } else {
        std::ofstream rout(options.report_path);
        if (!rout) {
          err << "cannot open '" << options.report_path << "' for writing\n";
          return kExitParse;
        }
        write_report(rout, rep, tol, mptr);
      }
    }
    return kExitOk;
  } catch (const NotChordalError& e) {
    err << "pattern is not chordal; chordless cycle:";
    for (int v : e.cycle) err << ' ' << (v + 1);
    err << "\n";
    return kExitNotChordal;
  } catch (const CliqueNotPsdError& e) {
    err << "clique " << vertex_set(e.clique) << " is not positive semidefinite\n";
    return kExitCliqueNotPsd;
  } catch (const ParseError& e) {
    err << options.input << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_gendet(const std::string& input, std::ostream& out, std::ostream& err) {
  try {
    const PartialHermitianMatrix partial = read_partial_matrix_file(input);
    if (!partial.is_fully_specified()) {
      err << input << ": matrix is not fully specified\n";
      return kExitParse;
    }
    const TolerancePolicy tol;
    const HermitianMatrix h = partial.to_hermitian();
    out << "gendet = " << format_float(gendet(h, tol)) << "\n";
    out << "rank = " << numerical_rank(hermitian_eig(h), tol) << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << input << ": " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_pinv(const PinvOptions& options, std::ostream& out, std::ostream& err) {
  (void)out;
  try {
    const PartialHermitianMatrix partial = read_partial_matrix_file(options.input);
    if (!partial.is_fully_specified()) {
      err << options.input << ": matrix is not fully specified\n";
      return kExitParse;
    }
    const TolerancePolicy tol;
    const HermitianMatrix h = partial.to_hermitian();
    HermitianMatrix result = HermitianMatrix::zero(h.dim());

    if (options.method == PinvMethod::Eig) {
      result = pinv(h, tol);
    } else {
      if (!options.split) {
        err << "--method banachiewicz requires --split <k>\n";
        return kExitParse;
      }
      const std::size_t k = *options.split;
      if (k < 1 || k >= h.dim()) {
        err << "--split must satisfy 1 <= k <= n-1\n";
        return kExitParse;
      }
      const BlockPartition p{k, h.dim() - k};
      if (!is_psd(h, tol) || !is_maximal_rank(h, p, tol)) {
        err << "matrix is not PSD of maximal rank for split k = " << k << "\n";
        return kExitPrecondition;
      }
      result = banachiewicz_pinv(h, p, tol);
      const HermitianMatrix reference = pinv(h, tol);
      const double diff = (result.matrix() - reference.matrix()).frobenius_norm();
      const double scale = std::max(reference.frobenius_norm(), 1e-300);
      if (diff > 1e-8 * scale) {
        err << "banachiewicz result deviates from the eigendecomposition pseudoinverse "
            << "(relative " << format_float(diff / scale) << ")\n";
        return kExitVerifyMismatch;
      }
    }
    write_partial_matrix_file(options.output, PartialHermitianMatrix::fully_specified(result));
    return kExitOk;
  } catch (const ParseError& e) {
    err << options.input << ": " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace psdcomp::cli
