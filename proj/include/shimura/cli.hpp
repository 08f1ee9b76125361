#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "shimura/table1.hpp"

namespace shimura::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconclusive = 1;  // also: golden mismatch
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The table1 command against an arbitrary set of goldens.
int run_table1(const std::vector<table1::Row>& goldens, std::ostream& out);

}  // namespace shimura::cli
