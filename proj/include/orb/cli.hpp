#pragma once

#include <iosfwd>

namespace orb {

// Command-line front end.  Parses argv, dispatches to one of the commands
//   analyze   — pair-orbit analysis of a builtin or JSON-file group
//   feasible  — parameter solvers / contradiction engines for one prime or a range
//   scan      — the degree-equation triple scan with optional density summary
//   tables    — the evaluated parameter tables, to stdout or per-table files
//   verify    — builtin fixtures against their stored descriptors and goldens
// and streams the report to `out` (diagnostics to `err`).
//
// Return value doubles as the process exit status:
//   0 success, 1 verification mismatch, 2 bad input or usage,
//   3 internal invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orb
