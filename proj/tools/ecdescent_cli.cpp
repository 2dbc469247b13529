// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ecdescent/report.hpp"

namespace {

using ecdescent::Int;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

// mpz rejects garbage with an exception; surface it as a usage error.
bool parse_int(const std::string& text, Int* out) {
  try {
    *out = Int(text);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

int usage(const std::string& what) {
  std::cerr << "usage error: " << what << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ecdescent;

  CLI::App app{
      "exact 2-descent, local solvability and class-number audits for the "
      "curves y^2 = (x + 6p)(x - 9p)(x - 18p)"};
  app.require_subcommand(0, 1);

  std::string p_text, pair_text, point_text, classes_text;
  std::string mode_text = "both", format_text = "table";
  long depth = -1, count = 0;
  int spot = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("-p,--prime", p_text, "prime p defining the curve");
    sub->add_option("--pair", pair_text, "square-class pair b1,b2");
    sub->add_option("--point", point_text,
                    "point r,t,s meaning (r/t^2, s/t^3)");
    sub->add_option("--depth", depth,
                    "doubling depth (family) or decision depth limit");
    sub->add_option("--mode", mode_text, "filters|decide|both")
        ->check(CLI::IsMember({"filters", "decide", "both"}));
    sub->add_option("--format", format_text, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--classes", classes_text,
                    "scan: residue classes mod 120, comma separated");
    sub->add_option("--count", count, "scan: primes per class");
    sub->add_option("--spot-check-places", spot,
                    "local: extra odd places to verify");
  };

  RunConfig cfg;
  bool have_command = false;
  const std::pair<const char*, Command> commands[] = {
      {"rank", Command::Rank},       {"local", Command::Local},
      {"descend", Command::Descend}, {"family", Command::Family},
      {"scan", Command::Scan},       {"audit", Command::Audit},
      {"oracle", Command::Oracle},
  };
  const char* descriptions[] = {
      "compute the 2-Selmer group and rank",
      "local verdicts for one pair at every relevant place",
      "Selmer group plus rank and sha bounds from known points",
      "doubling family of biquadratic fields with certificates",
      "verify predicted ranks across primes in residue classes",
      "even-class-number audit for the field attached to a point",
      "exhaustive residue search cross-checked against the decision",
  };
  for (size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    add_common(sub);
    const Command cmd = commands[i].second;
    sub->callback([&cfg, &have_command, cmd] {
      cfg.command = cmd;
      have_command = true;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!have_command) {
    std::cerr << app.help();
    return 2;
  }

  if (!p_text.empty()) {
    Int p;
    if (!parse_int(p_text, &p)) return usage("-p wants an integer");
    cfg.p = p;
  }
  if (!pair_text.empty()) {
    const auto parts = split_commas(pair_text);
    Int b1, b2;
    if (parts.size() != 2 || !parse_int(parts[0], &b1) ||
        !parse_int(parts[1], &b2))
      return usage("--pair wants two integers b1,b2");
    cfg.pair = std::make_pair(b1, b2);
  }
  if (!point_text.empty()) {
    const auto parts = split_commas(point_text);
    std::array<Int, 3> rts;
    if (parts.size() != 3 || !parse_int(parts[0], &rts[0]) ||
        !parse_int(parts[1], &rts[1]) || !parse_int(parts[2], &rts[2]))
      return usage("--point wants three integers r,t,s");
    cfg.point = rts;
  }
  if (!classes_text.empty()) {
    for (const std::string& part : split_commas(classes_text)) {
      Int cls;
      if (!parse_int(part, &cls))
        return usage("--classes wants comma-separated integers");
      cfg.classes.push_back(cls);
    }
  }
  cfg.depth = depth;
  cfg.count = count;
  cfg.spot_check_places = spot;
  cfg.mode = mode_text == "decide" ? DecisionMode::DecideOnly
             : mode_text == "filters"
                 ? DecisionMode::FiltersPlusDecide
                 : DecisionMode::Both;
  cfg.format =
      format_text == "json" ? OutputFormat::Json : OutputFormat::Table;

  const RunResult res = run_command(cfg);
  if (!res.output.empty()) std::cout << res.output;
  if (!res.error.empty()) std::cerr << res.error << "\n";
  return res.exit_code;
}
