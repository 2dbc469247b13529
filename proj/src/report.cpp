// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace ecdescent {

namespace {

using ordered_json = nlohmann::ordered_json;

// Raised only during input validation; everything after validation is a
// computation failure, not a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------
// JSON building blocks.  Policy: unbounded math integers are decimal
// strings; structural counts, ranks, depths and valuations are numbers.

ordered_json jint(const Int& v) { return v.get_str(); }

ordered_json jrat(const Rat& v) { return v.get_str(); }

std::string place_label(const Int& place) {
  return place == 0 ? std::string("infinity") : place.get_str();
}

std::string solvability_label(Solvability s) {
  switch (s) {
    case Solvability::Solvable:
      return "solvable";
    case Solvability::Unsolvable:
      return "unsolvable";
    default:
      return "undecided";
  }
}

ordered_json class_json(const SquareClass& c) {
  ordered_json j;
  j["value"] = jint(c.value);
  ordered_json sup = ordered_json::array();
  for (const Int& q : c.support) sup.push_back(jint(q));
  j["support"] = sup;
  return j;
}

ordered_json pair_json(const SelmerPair& pr) {
  return ordered_json::array({jint(pr.b1.value), jint(pr.b2.value)});
}

std::string pair_text(const SelmerPair& pr) {
  std::ostringstream os;
  os << "(" << pr.b1.value << ", " << pr.b2.value << ")";
  return os.str();
}

ordered_json curve_json(const CurveParams& c) {
  ordered_json j;
  j["p"] = jint(c.p);
  j["roots"] = ordered_json::array(
      {jint(-c.root_b), jint(c.root_a), jint(c.root_c)});
  j["a2"] = jint(c.a2);
  j["a6"] = jint(c.a6);
  j["class"] = theorem_class_name(c.theorem_class);
  return j;
}

std::string curve_text(const CurveParams& c) {
  std::ostringstream os;
  os << "curve: p = " << c.p << ", class "
     << theorem_class_name(c.theorem_class) << "\n"
     << "equation: y^2 = (x + " << c.root_b << ")(x - " << c.root_a
     << ")(x - " << c.root_c << ")";
  return os.str();
}

ordered_json sqrt_cert_json(const SquareRootCert& c) {
  ordered_json j;
  j["target"] = jrat(c.target);
  j["approx"] = jrat(c.approx);
  j["f_val"] = c.f_val;
  j["df_val"] = c.df_val;
  j["exact"] = c.exact;
  return j;
}

ordered_json witness_json(const LocalWitness& w) {
  ordered_json j;
  j["place"] = place_label(w.place);
  j["w"] = jrat(w.w);
  j["z1"] = sqrt_cert_json(w.z1);
  j["z2"] = sqrt_cert_json(w.z2);
  j["z3"] = sqrt_cert_json(w.z3);
  return j;
}

ordered_json verdict_json(const LocalVerdict& v) {
  ordered_json j;
  j["place"] = place_label(v.place);
  j["solvability"] = solvability_label(v.solvability);
  j["rule"] = rule_name(v.rule);
  j["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
  j["refutation_depth"] =
      v.refutation_depth ? ordered_json(*v.refutation_depth)
                         : ordered_json(nullptr);
  return j;
}

std::string verdict_text(const LocalVerdict& v) {
  std::ostringstream os;
  os << "place " << place_label(v.place) << ": "
     << solvability_label(v.solvability) << " [" << rule_name(v.rule) << "]";
  if (v.witness) os << " w = " << v.witness->w;
  if (v.refutation_depth) os << " depth = " << *v.refutation_depth;
  return os.str();
}

ordered_json point_json(const RationalPoint& pt) {
  ordered_json j;
  if (pt.is_infinity()) {
    j["kind"] = "infinity";
    return j;
  }
  j["kind"] = "affine";
  j["r"] = jint(pt.r);
  j["t"] = jint(pt.t);
  j["s"] = jint(pt.s);
  return j;
}

std::string point_text(const RationalPoint& pt) {
  if (pt.is_infinity()) return "infinity";
  std::ostringstream os;
  os << "(" << pt.x() << ", " << pt.y() << ")";
  return os.str();
}

ordered_json field_json(const BiquadField& k) {
  ordered_json j;
  j["d1"] = class_json(k.d1);
  j["d2"] = class_json(k.d2);
  j["d3"] = class_json(k.d3);
  j["real"] = k.real;
  return j;
}

std::string field_text(const BiquadField& k) {
  std::ostringstream os;
  os << "d1 = " << k.d1.value << ", d2 = " << k.d2.value
     << ", d3 = " << k.d3.value << " (" << (k.real ? "real" : "imaginary")
     << ")";
  return os.str();
}

ordered_json alpha_json(const AlphaCertificate& a) {
  ordered_json j;
  j["s"] = jint(a.s);
  j["t"] = jint(a.t);
  j["r"] = jint(a.r);
  j["u"] = jint(a.u);
  j["v"] = jint(a.v);
  j["adjustment"] = jint(a.adjustment);
  ordered_json checks;
  checks["t_even"] = a.checks.t_even;
  checks["gcd_s_3p"] = a.checks.gcd_s_3p;
  checks["norm_identity"] = a.checks.norm_identity;
  checks["congruence_class"] = a.checks.congruence_class;
  j["checks"] = checks;
  j["passes"] = a.passes();
  j["failed_check"] = a.failed_check();
  return j;
}

std::string alpha_text(const AlphaCertificate& a) {
  std::ostringstream os;
  if (a.passes())
    os << "passes (s = " << a.checks.congruence_class << " mod 4, m = "
       << a.adjustment << ")";
  else
    os << "fails " << a.failed_check();
  return os.str();
}

// Class-number audits degrade gracefully: family levels past the seed have
// d2 numerators beyond the exact-form-count guard.
ordered_json estimate_json_or_status(const BiquadField& k) {
  ordered_json j;
  try {
    const BiquadClassEstimate est = biquad_estimate(k);
    j["status"] = "ok";
    j["h1"] = jint(est.h1);
    j["h2"] = jint(est.h2);
    j["h3"] = jint(est.h3);
    ordered_json cands = ordered_json::array();
    for (const Int& c : est.candidates) cands.push_back(jint(c));
    j["candidates"] = cands;
    j["parity_even_certain"] = est.parity_even_certain;
  } catch (const DomainError&) {
    j["status"] = "out-of-range";
  } catch (const FactorBudgetError&) {
    j["status"] = "out-of-range";
  }
  return j;
}

std::string estimate_text(const ordered_json& est) {
  if (est["status"] != "ok") return "class numbers out of exact range";
  std::ostringstream os;
  os << "h1 = " << est["h1"].get<std::string>()
     << ", h2 = " << est["h2"].get<std::string>()
     << ", h3 = " << est["h3"].get<std::string>() << ", candidates {";
  bool first = true;
  for (const auto& c : est["candidates"]) {
    if (!first) os << ", ";
    os << c.get<std::string>();
    first = false;
  }
  os << "}";
  if (est["parity_even_certain"].get<bool>()) os << ", all even";
  return os.str();
}

// ---------------------------------------------------------------------
// Validation: every malformed input is a usage error before computation.

Int require_p(const RunConfig& cfg) {
  if (!cfg.p) throw UsageError("this command needs -p <prime>");
  return *cfg.p;
}

CurveParams curve_of(const RunConfig& cfg) {
  try {
    return make_curve(require_p(cfg));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

SelmerPair require_pair(const RunConfig& cfg, const CurveParams& c) {
  if (!cfg.pair) throw UsageError("this command needs --pair b1,b2");
  try {
    return SelmerPair{class_in_qs2(cfg.pair->first, c),
                      class_in_qs2(cfg.pair->second, c)};
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

RationalPoint require_point(const RunConfig& cfg, const CurveParams& c) {
  if (!cfg.point) throw UsageError("this command needs --point r,t,s");
  RationalPoint pt;
  try {
    pt = make_affine((*cfg.point)[0], (*cfg.point)[1], (*cfg.point)[2]);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!on_curve(pt, c)) throw UsageError("--point is not on the curve");
  return pt;
}

std::optional<long> depth_limit_of(const RunConfig& cfg) {
  if (cfg.depth < 0) return std::nullopt;
  if (cfg.depth == 0) throw UsageError("--depth must be at least 1 here");
  return cfg.depth;
}

// ---------------------------------------------------------------------
// Command bodies produce one of these; run_command handles rendering and
// error mapping uniformly.

struct Rendered {
  ordered_json curve = nullptr;
  ordered_json result = ordered_json::object();
  ordered_json trace = ordered_json::array();
  std::vector<std::string> table;
  int exit_code = 0;
  std::string error;
};

void selmer_into(const SelmerGroup& g, const CurveParams& c, Rendered* out) {
  out->result["selmer_rank"] = g.rank_s;
  out->result["element_count"] = static_cast<int>(g.elements.size());
  ordered_json elems = ordered_json::array();
  for (const SelmerPair& pr : g.elements) elems.push_back(pair_json(pr));
  out->result["elements"] = elems;
  out->result["complete"] = g.complete;

  int surviving = 0;
  std::map<std::string, int> kills;
  for (const CosetTrace& tr : g.trace) {
    ordered_json t;
    t["representative"] = pair_json(tr.representative);
    t["survives"] = tr.survives;
    t["rule"] = tr.rule ? ordered_json(rule_name(*tr.rule))
                        : ordered_json(nullptr);
    t["place"] = tr.survives ? ordered_json(nullptr)
                             : ordered_json(place_label(tr.place));
    ordered_json vs = ordered_json::array();
    for (const LocalVerdict& v : tr.verdicts) vs.push_back(verdict_json(v));
    t["verdicts"] = vs;
    out->trace.push_back(t);
    if (tr.survives)
      ++surviving;
    else if (tr.rule)
      ++kills[rule_name(*tr.rule)];
  }

  out->table.push_back(curve_text(c));
  {
    std::ostringstream os;
    os << "2-selmer rank: " << g.rank_s;
    out->table.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "elements (" << g.elements.size() << "):";
    for (const SelmerPair& pr : g.elements) os << " " << pair_text(pr);
    out->table.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "cosets: " << g.trace.size() << " examined, " << surviving
       << " surviving";
    out->table.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "surviving:";
    for (const CosetTrace& tr : g.trace)
      if (tr.survives) os << " " << pair_text(tr.representative);
    out->table.push_back(os.str());
  }
  for (const auto& [rule, n] : kills) {
    std::ostringstream os;
    os << "  eliminated by " << rule << ": " << n;
    out->table.push_back(os.str());
  }
  if (!g.complete) {
    out->exit_code = 3;
    out->error = "undecided local verdict left the group incomplete";
  }
}

Rendered cmd_rank(const RunConfig& cfg) {
  const CurveParams c = curve_of(cfg);
  Rendered out;
  out.curve = curve_json(c);
  const SelmerGroup g = compute_selmer(c, cfg.mode);
  selmer_into(g, c, &out);
  return out;
}

Rendered cmd_local(const RunConfig& cfg) {
  const CurveParams c = curve_of(cfg);
  const SelmerPair pr = require_pair(cfg, c);
  const std::optional<long> limit = depth_limit_of(cfg);
  Rendered out;
  out.curve = curve_json(c);

  const HomSpace h = make_homspace(pr, c);
  LocalOptions opt;
  opt.mode = cfg.mode;
  opt.depth_limit = limit;
  opt.spot_check_places = cfg.spot_check_places;
  const std::vector<LocalVerdict> verdicts = verdict_all_places(h, opt);

  out.result["pair"] = pair_json(pr);
  out.result["rhs1"] = jint(h.rhs1);
  out.result["rhs2"] = jint(h.rhs2);
  ordered_json vs = ordered_json::array();
  bool undecided = false;
  bool everywhere = true;
  for (const LocalVerdict& v : verdicts) {
    vs.push_back(verdict_json(v));
    if (v.solvability == Solvability::Undecided) undecided = true;
    if (v.solvability != Solvability::Solvable) everywhere = false;
  }
  out.result["verdicts"] = vs;
  out.result["solvable_everywhere"] =
      undecided ? ordered_json(nullptr) : ordered_json(everywhere);

  out.table.push_back(curve_text(c));
  {
    std::ostringstream os;
    os << "pair " << pair_text(pr) << ": " << pr.b1.value << " z1^2 - "
       << pr.b2.value << " z2^2 = " << h.rhs1 << " ; " << pr.b1.value
       << " z1^2 - " << pr.b1.value * pr.b2.value << " z3^2 = " << h.rhs2;
    out.table.push_back(os.str());
  }
  for (const LocalVerdict& v : verdicts)
    out.table.push_back("  " + verdict_text(v));
  if (undecided) {
    out.exit_code = 3;
    out.error = "undecided verdict at some place";
  }
  return out;
}

Rendered cmd_descend(const RunConfig& cfg) {
  const CurveParams c = curve_of(cfg);
  std::vector<RationalPoint> known;
  if (cfg.point) known.push_back(require_point(cfg, c));
  Rendered out;
  out.curve = curve_json(c);

  const SelmerGroup g = compute_selmer(c, cfg.mode);
  selmer_into(g, c, &out);
  const RankBounds rb = rank_bounds(c, known);
  const int sha = sha_two_bound(c, known);
  out.result["rank_lower"] = rb.lower;
  out.result["rank_upper"] = rb.upper;
  out.result["sha_two_bound"] = sha;
  ordered_json pts = ordered_json::array();
  for (const RationalPoint& pt : known) {
    ordered_json pj;
    pj["point"] = point_json(pt);
    pj["torsion"] = is_torsion(pt);
    pj["phi"] = pair_json(phi(pt, c));
    pts.push_back(pj);
  }
  out.result["points"] = pts;

  {
    std::ostringstream os;
    os << "rank bounds: " << rb.lower << " <= rank <= " << rb.upper;
    out.table.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "sha(2) bound: " << sha;
    out.table.push_back(os.str());
  }
  for (const RationalPoint& pt : known) {
    std::ostringstream os;
    os << "point " << point_text(pt) << ": "
       << (is_torsion(pt) ? "torsion" : "non-torsion") << ", phi = "
       << pair_text(phi(pt, c));
    out.table.push_back(os.str());
  }
  return out;
}

Rendered cmd_family(const RunConfig& cfg) {
  const CurveParams c = curve_of(cfg);
  const RationalPoint seed = require_point(cfg, c);
  const long depth = cfg.depth < 0 ? 2 : cfg.depth;
  Rendered out;
  out.curve = curve_json(c);

  const std::vector<FamilyEntry> fam = double_family(seed, c, depth);
  out.result["depth"] = depth;
  ordered_json levels = ordered_json::array();
  for (size_t i = 0; i < fam.size(); ++i) {
    const FamilyEntry& e = fam[i];
    ordered_json lj;
    lj["index"] = static_cast<int>(i);
    lj["point"] = point_json(e.point);
    lj["field"] = field_json(e.field);
    lj["certificate"] = alpha_json(e.cert);
    lj["audit"] = estimate_json_or_status(e.field);
    levels.push_back(lj);

    std::ostringstream os;
    os << "level " << i << ": r,t,s = (" << e.point.r << ", " << e.point.t
       << ", " << e.point.s << ")";
    out.table.push_back(os.str());
    out.table.push_back("  field: " + field_text(e.field));
    out.table.push_back("  certificate: " + alpha_text(e.cert));
    out.table.push_back("  audit: " + estimate_text(levels.back()["audit"]));
  }
  out.result["levels"] = levels;
  out.table.insert(out.table.begin(), curve_text(c));
  return out;
}

Rendered cmd_scan(const RunConfig& cfg) {
  if (cfg.classes.empty())
    throw UsageError("scan needs --classes with residues from {17,53,77,113}");
  for (const Int& cls : cfg.classes)
    if (cls != 17 && cls != 53 && cls != 77 && cls != 113)
      throw UsageError("scan classes must lie in {17,53,77,113}");
  const long count = cfg.count <= 0 ? 1 : cfg.count;

  Rendered out;
  ordered_json rows = ordered_json::array();
  bool all_match = true;
  bool undecided = false;
  for (const Int& cls : cfg.classes) {
    const int predicted = (cls == 17 || cls == 113) ? 1 : 0;
    {
      std::ostringstream os;
      os << "class " << cls << " mod 120: predicted s = " << predicted;
      out.table.push_back(os.str());
    }
    long found = 0;
    for (Int candidate = cls; found < count; candidate += 120) {
      if (!is_prime(candidate)) continue;
      ++found;
      const CurveParams c = make_curve(candidate);
      const SelmerGroup g = compute_selmer(c, cfg.mode);
      const bool match = g.complete && g.rank_s == predicted;
      if (!g.complete) undecided = true;
      if (!match) all_match = false;
      ordered_json row;
      row["p"] = jint(candidate);
      row["class"] = jint(cls);
      row["predicted"] = predicted;
      row["computed"] = g.complete ? ordered_json(g.rank_s)
                                   : ordered_json(nullptr);
      row["match"] = match;
      rows.push_back(row);
      std::ostringstream os;
      os << "  p = " << candidate << ": s = ";
      if (g.complete)
        os << g.rank_s;
      else
        os << "undecided";
      os << (match ? " ok" : " MISMATCH");
      out.table.push_back(os.str());
    }
  }
  out.result["rows"] = rows;
  out.result["all_match"] = all_match;
  out.table.push_back(all_match ? "all classes match"
                                : "MISMATCH against predicted ranks");
  if (undecided) {
    out.exit_code = 3;
    out.error = "scan hit an undecided local verdict";
  } else if (!all_match) {
    out.exit_code = 1;
    out.error = "scan found a rank differing from the predicted value";
  }
  return out;
}

Rendered cmd_audit(const RunConfig& cfg) {
  const CurveParams c = curve_of(cfg);
  const RationalPoint pt = require_point(cfg, c);
  Rendered out;
  out.curve = curve_json(c);

  const BiquadField field = build_field(pt, c);
  const AlphaCertificate cert = alpha_certificate(pt, c);
  const ordered_json est = estimate_json_or_status(field);

  const bool est_ok = est["status"] == "ok";
  const bool candidates_even =
      est_ok && est["parity_even_certain"].get<bool>();
  const bool cert_even = cert.passes();
  const bool established = candidates_even || cert_even;
  std::string route = "none";
  if (candidates_even && cert_even)
    route = "candidates+certificate";
  else if (candidates_even)
    route = "candidates";
  else if (cert_even)
    route = "certificate";

  out.result["point"] = point_json(pt);
  out.result["field"] = field_json(field);
  out.result["certificate"] = alpha_json(cert);
  out.result["estimate"] = est;
  ordered_json parity;
  parity["candidates_all_even"] =
      est_ok ? ordered_json(candidates_even) : ordered_json(nullptr);
  parity["certificate_proves_even"] = cert_even;
  parity["established"] = established;
  parity["route"] = route;
  out.result["parity"] = parity;

  out.table.push_back(curve_text(c));
  out.table.push_back("point: " + point_text(pt));
  out.table.push_back("field: " + field_text(field));
  out.table.push_back("class numbers: " + estimate_text(est));
  out.table.push_back("certificate: " + alpha_text(cert));
  out.table.push_back(std::string("even class number: ") +
                      (established ? "established (" + route + ")"
                                   : "NOT established"));
  if (!established) {
    out.exit_code = 1;
    out.error = "even class number not established by either route";
  }
  return out;
}

// Outcomes of the escalating residue search against the decision
// procedure.  Inconclusive searches cannot cross-check and report null.
Rendered cmd_oracle_pair(const RunConfig& cfg, const CurveParams& c) {
  const SelmerPair pr = require_pair(cfg, c);
  const HomSpace h = make_homspace(pr, c);
  Rendered out;
  out.curve = curve_json(c);
  out.result["pair"] = pair_json(pr);

  out.table.push_back(curve_text(c));
  out.table.push_back("pair: " + pair_text(pr));

  bool disagreement = false;
  bool undecided = false;
  ordered_json searches = ordered_json::array();
  const std::vector<Int> places = {2, 3, 5, c.p};
  for (const Int& l : places) {
    SearchReport rep;
    for (long k : depth_schedule(l)) {
      rep = brute_local(h, l, k);
      if (rep.outcome != SearchReport::Outcome::Inconclusive) break;
    }
    const LocalVerdict dec = decide_local(h, l);
    if (dec.solvability == Solvability::Undecided) undecided = true;

    ordered_json agrees = nullptr;
    if (rep.outcome == SearchReport::Outcome::WitnessFound &&
        dec.solvability != Solvability::Undecided)
      agrees = dec.solvability == Solvability::Solvable;
    else if (rep.outcome == SearchReport::Outcome::CertifiedEmpty &&
             dec.solvability != Solvability::Undecided)
      agrees = dec.solvability == Solvability::Unsolvable;
    if (agrees.is_boolean() && !agrees.get<bool>()) disagreement = true;

    std::string outcome;
    switch (rep.outcome) {
      case SearchReport::Outcome::WitnessFound:
        outcome = "witness-found";
        break;
      case SearchReport::Outcome::CertifiedEmpty:
        outcome = "certified-empty";
        break;
      case SearchReport::Outcome::Skipped:
        outcome = "skipped";
        break;
      default:
        outcome = "inconclusive";
        break;
    }

    ordered_json sj;
    sj["place"] = place_label(l);
    sj["target"] = rep.target;
    sj["depth"] = rep.bound;
    sj["outcome"] = outcome;
    if (rep.found) {
      ordered_json wj;
      wj["pattern"] = rep.found->pattern;
      wj["pole_depth"] = rep.found->pole_depth;
      wj["z1"] = jint(rep.found->z1);
      wj["z2"] = jint(rep.found->z2);
      wj["z3"] = jint(rep.found->z3);
      wj["modulus"] = jint(rep.found->modulus);
      sj["witness"] = wj;
    } else {
      sj["witness"] = nullptr;
    }
    sj["decision"] = solvability_label(dec.solvability);
    sj["decision_rule"] = rule_name(dec.rule);
    sj["agrees"] = agrees;
    searches.push_back(sj);

    std::ostringstream os;
    os << "  place " << l << ": search " << outcome << " at depth "
       << rep.bound << ", decision " << solvability_label(dec.solvability);
    if (agrees.is_boolean())
      os << (agrees.get<bool>() ? " - agree" : " - DISAGREE");
    out.table.push_back(os.str());
  }
  out.result["searches"] = searches;
  out.result["disagreement"] = disagreement;

  if (disagreement) {
    out.exit_code = 1;
    out.error = "residue search disagrees with the decision procedure";
    out.table.push_back("DISAGREEMENT between search and decision");
  } else if (undecided) {
    out.exit_code = 3;
    out.error = "decision procedure left a place undecided";
  } else {
    out.table.push_back("search and decision agree at every resolved place");
  }
  return out;
}

Rendered cmd_oracle_sweep(const RunConfig& cfg, const CurveParams& c) {
  (void)cfg;
  Rendered out;
  out.curve = curve_json(c);
  const CrossCheckReport rep = cross_check_filters(c);

  out.result["pairs_checked"] = rep.pairs_checked;
  out.result["verdicts_compared"] = rep.verdicts_compared;
  out.result["coset_violations"] = rep.coset_violations;
  ordered_json dis = ordered_json::array();
  for (const PlaceDisagreement& d : rep.disagreements) {
    ordered_json dj;
    dj["pair"] = pair_json(d.pair);
    dj["place"] = place_label(d.place);
    dj["detail"] = d.detail;
    dis.push_back(dj);
  }
  out.result["disagreements"] = dis;
  ordered_json unres = ordered_json::array();
  for (const PlaceDisagreement& d : rep.unresolved) {
    ordered_json dj;
    dj["pair"] = pair_json(d.pair);
    dj["place"] = place_label(d.place);
    dj["detail"] = d.detail;
    unres.push_back(dj);
  }
  out.result["unresolved"] = unres;
  out.result["all_clear"] = rep.all_clear();

  out.table.push_back(curve_text(c));
  {
    std::ostringstream os;
    os << "cross-check: " << rep.pairs_checked << " pairs, "
       << rep.verdicts_compared << " verdicts compared";
    out.table.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "disagreements: " << rep.disagreements.size() << ", unresolved: "
       << rep.unresolved.size() << ", coset violations: "
       << rep.coset_violations;
    out.table.push_back(os.str());
  }
  out.table.push_back(rep.all_clear() ? "all clear" : "CROSS-CHECK FAILED");
  if (!rep.all_clear()) {
    out.exit_code = 1;
    out.error = "cross-check found disagreements or unresolved places";
  }
  return out;
}

Rendered cmd_oracle(const RunConfig& cfg) {
  const CurveParams c = curve_of(cfg);
  if (cfg.pair) return cmd_oracle_pair(cfg, c);
  return cmd_oracle_sweep(cfg, c);
}

}  // namespace

std::string command_name(Command cmd) {
  switch (cmd) {
    case Command::Rank:
      return "rank";
    case Command::Local:
      return "local";
    case Command::Descend:
      return "descend";
    case Command::Family:
      return "family";
    case Command::Scan:
      return "scan";
    case Command::Audit:
      return "audit";
    default:
      return "oracle";
  }
}

RunResult run_command(const RunConfig& cfg) {
  Rendered r;
  try {
    switch (cfg.command) {
      case Command::Rank:
        r = cmd_rank(cfg);
        break;
      case Command::Local:
        r = cmd_local(cfg);
        break;
      case Command::Descend:
        r = cmd_descend(cfg);
        break;
      case Command::Family:
        r = cmd_family(cfg);
        break;
      case Command::Scan:
        r = cmd_scan(cfg);
        break;
      case Command::Audit:
        r = cmd_audit(cfg);
        break;
      case Command::Oracle:
        r = cmd_oracle(cfg);
        break;
    }
  } catch (const UsageError& e) {
    return RunResult{2, "", std::string("usage error: ") + e.what()};
  } catch (const CrossCheckError& e) {
    return RunResult{1, "", std::string("cross-check failure: ") + e.what()};
  } catch (const FactorBudgetError& e) {
    return RunResult{1, "", std::string("factorization budget: ") + e.what()};
  } catch (const DomainError& e) {
    return RunResult{1, "", std::string("error: ") + e.what()};
  }

  RunResult out;
  out.exit_code = r.exit_code;
  out.error = r.error;
  if (cfg.format == OutputFormat::Json) {
    ordered_json doc;
    doc["version"] = "1";
    doc["command"] = command_name(cfg.command);
    doc["curve"] = r.curve;
    doc["result"] = r.result;
    doc["trace"] = r.trace;
    out.output = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const std::string& line : r.table) os << line << "\n";
    out.output = os.str();
  }
  return out;
}

}  // namespace ecdescent
