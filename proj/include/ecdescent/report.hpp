// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecdescent/classnum.hpp"
#include "ecdescent/fieldcraft.hpp"
#include "ecdescent/localsolve.hpp"
#include "ecdescent/oracle.hpp"
#include "ecdescent/selmer.hpp"

namespace ecdescent {

enum class Command { Rank, Local, Descend, Family, Scan, Audit, Oracle };
enum class OutputFormat { Table, Json };

// One fully validated invocation.  Field requirements per command are
// enforced by run_command before any computation starts.
struct RunConfig {
  Command command = Command::Rank;
  std::optional<Int> p;
  std::optional<std::pair<Int, Int>> pair;   // b1, b2 (classes of Q(S,2))
  std::optional<std::array<Int, 3>> point;   // r, t, s
  long depth = -1;                           // -1 picks the command default
  DecisionMode mode = DecisionMode::Both;
  OutputFormat format = OutputFormat::Table;
  std::vector<Int> classes;                  // scan: residues mod 120
  long count = 0;                            // scan: primes per class
  int spot_check_places = 0;                 // extra places for local
};

struct RunResult {
  // 0 success, 1 assertion failure, 2 usage error, 3 undecided verdict.
  int exit_code = 0;
  std::string output;  // rendered table or JSON document, for stdout
  std::string error;   // diagnostic for stderr; empty unless exit_code != 0
};

// Executes one command.  Never throws: domain violations in the inputs come
// back as usage errors, computation-level failures as assertion failures,
// and an Undecided local verdict as exit code 3.  JSON output is canonical:
// fixed field order, math integers as decimal strings, and re-serializing
// the parsed document reproduces the bytes.
RunResult run_command(const RunConfig& cfg);

std::string command_name(Command cmd);

}  // namespace ecdescent
