#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace psdcomp::cli {

// Exit codes shared by all subcommands:
//   0  success
//   1  I/O or parse error (including partial input where full is required)
//   2  specification pattern is not chordal
//   3  a clique submatrix is not positive semidefinite
//   4  maximal-rank precondition violated (pinv --method banachiewicz)
//   5  cross-method verification mismatch
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitNotChordal = 2;
inline constexpr int kExitCliqueNotPsd = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitVerifyMismatch = 5;

int cmd_check(const std::string& input, std::ostream& out, std::ostream& err);

struct CompleteOptions {
  std::string input;
  std::string output;
  std::optional<double> tol;  // overrides rank_rtol and psd_rtol
  bool verify = false;        // run the determinant-maximality search as well
  std::string report_path;    // write the report here instead of stdout
};

int cmd_complete(const CompleteOptions& options, std::ostream& out, std::ostream& err);

int cmd_gendet(const std::string& input, std::ostream& out, std::ostream& err);

enum class PinvMethod { Eig, Banachiewicz };

struct PinvOptions {
  std::string input;
  std::string output;
  PinvMethod method = PinvMethod::Eig;
  std::optional<std::size_t> split;  // leading block size for banachiewicz
};

int cmd_pinv(const PinvOptions& options, std::ostream& out, std::ostream& err);

}  // namespace psdcomp::cli
