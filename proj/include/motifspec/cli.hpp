#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests drive it in-process with string streams.
//
// Exit codes are a stable contract:
//   0 success, 1 verification failure, 2 argument error, 3 precondition violation.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "motifspec/spectral.hpp"

namespace motifspec::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitBadArguments = 2,
  kExitPrecondition = 3,
};

// Environment variable holding the per-vertex residual tolerance.
inline constexpr const char* kToleranceEnv = "SPECTRA_TOL";

// Parses a tolerance override; nullopt when unset. Throws InvalidArgument on
// text that is not a positive finite number.
std::optional<double> parse_tolerance(const char* text);

// "0 ×1; 1.5 ×2": grouped eigenvalues, 10 significant digits.
std::string format_spectrum_plain(const Spectrum& s);
// One "k,value" row per eigenvalue, 17 significant digits.
std::string format_spectrum_csv(const Spectrum& s);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int main(int argc, char** argv);

}  // namespace motifspec::cli
