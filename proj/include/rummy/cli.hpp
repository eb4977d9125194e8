#pragma once

// Command-line front end. run() is the whole program; tools/rummy.cpp only
// forwards argv. Exit status: 0 success or pass, 1 verification failure,
// 2 usage or input error.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rummy/constructions.hpp"
#include "rummy/declare.hpp"
#include "rummy/mindist.hpp"
#include "rummy/montecarlo.hpp"
#include "rummy/parallel.hpp"
#include "rummy/report.hpp"
#include "rummy/verifiers.hpp"

namespace rummy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::string hand;
  std::string wcj;
  int printed_jokers = kDefaultPrintedJokers;
  int prop = 3;
  std::string target;
  std::string model = "faithful";
  std::uint64_t n = 10000;
  std::uint64_t seed = kDefaultSeed;
  std::string csv;
  int workers = default_workers();
  std::string format = "human";
  std::size_t show = 10;  // human output lists at most this many failures
};

namespace detail {

inline void print_list(std::ostream& out, const std::string& title, const std::vector<std::string>& items,
                       std::size_t show) {
  if (items.empty()) return;
  out << title << ":\n";
  for (std::size_t i = 0; i < items.size() && i < show; ++i) out << "  " << items[i] << '\n';
  if (items.size() > show) out << "  ... " << items.size() - show << " more\n";
}

inline void print_melds(std::ostream& out, const std::vector<std::string>& melds) {
  for (const auto& m : melds) out << "  " << m << '\n';
}

inline void print_replacements(std::ostream& out, const std::vector<std::pair<Card, Card>>& reps) {
  out << "replacements:";
  for (const auto& [r, a] : reps) out << ' ' << r.token() << "->" << a.token();
  out << '\n';
}

inline int do_mindist(const RunConfig& cfg, std::ostream& out) {
  const DeckConfig deck{cfg.printed_jokers};
  const Hand h = parse_hand(cfg.hand, deck);
  const JokerContext ctx(parse_card(cfg.wcj), deck);
  const MinDistResult r = min_dist(h, ctx);
  if (cfg.format == "json") {
    out << to_json(r, h, ctx).dump(2) << '\n';
    return kExitOk;
  }
  out << r.value << '\n';
  out << "kept:";
  for (Card k : r.kept) out << ' ' << k.token();
  out << '\n';
  print_replacements(out, r.replacements);
  out << "target declaration:\n";
  print_melds(out, render_declaration(r.witness, ctx));
  return kExitOk;
}

inline int do_declarable(const RunConfig& cfg, std::ostream& out) {
  const DeckConfig deck{cfg.printed_jokers};
  const Hand h = parse_hand(cfg.hand, deck);
  const JokerContext ctx(parse_card(cfg.wcj), deck);
  h.require_playable(ctx);
  const DeclareResult r = is_declarable(h, ctx);
  if (cfg.format == "json") {
    out << to_json(r, h, ctx).dump(2) << '\n';
    return kExitOk;
  }
  out << (r.declarable ? "yes" : "no") << '\n';
  if (r.witness) print_melds(out, render_declaration(*r.witness, ctx));
  return kExitOk;
}

inline int do_certify(const RunConfig& cfg, std::ostream& out) {
  const DeckConfig deck{cfg.printed_jokers};
  const Hand h = parse_hand(cfg.hand, deck);
  const JokerContext ctx(parse_card(cfg.wcj), deck);
  h.require_playable(ctx);
  const Certificate c = cfg.prop == 1 ? construct_prop1(h, ctx)
                        : cfg.prop == 2 ? construct_prop2(h, ctx)
                                        : construct_prop3(h, ctx);
  const CertificateCheck chk = verify_certificate(h, c, ctx);
  if (cfg.format == "json") {
    out << to_json(c, chk, h, ctx).dump(2) << '\n';
  } else {
    out << to_string(c.source) << " claimed distance " << c.claimed_distance << " (bound " << bound_of(c.source)
        << ")\n";
    if (c.source == BoundSource::Prop3) out << "split case: " << to_string(c.split) << (c.fallback ? " (fallback)" : "") << '\n';
    out << "kept:";
    for (Card k : c.kept) out << ' ' << k.token();
    out << '\n';
    print_replacements(out, c.replacements);
    out << "target declaration:\n";
    print_melds(out, render_declaration(c.witness, ctx));
    out << "verified: " << (chk.valid ? "yes" : std::string("no (") + to_string(chk.fault) + ")") << '\n';
  }
  return chk.valid ? kExitOk : kExitFailed;
}

inline void print_case_report(std::ostream& out, const std::string& title, const CaseReport& r, std::size_t show) {
  out << title << ": " << r.universe << '\n';
  out << "cases: " << r.cases_enumerated << "  passed: " << r.cases_passed << "  failures: " << r.failures.size()
      << "  escalations: " << r.escalations << '\n';
  for (const auto& [k, v] : r.figures) out << k << ": " << v << '\n';
  print_list(out, "failures", r.failures, show);
  std::vector<std::string> esc;
  for (const auto& e : r.escalated) esc.push_back(e.id + " -> " + std::to_string(e.value));
  print_list(out, "escalated", esc, show);
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
}

inline int do_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.target == "extremal") {
    const ExtremalReport r = certify_extremal(cfg.workers);
    if (cfg.format == "json") {
      out << to_json(r).dump(2) << '\n';
    } else {
      out << "hand: " << r.hand << "  wcj: " << r.wcj << '\n';
      out << "MinDist " << r.min_dist << '\n';
      out << "solver target:\n";
      print_melds(out, render_declaration(r.solution.witness, JokerContext(parse_card(r.wcj))));
      out << "published target (" << (r.target_valid ? "valid" : "INVALID") << "), distance " << r.target_distance
          << ":\n";
      print_melds(out, r.target_melds);
      out << "prop3 construction distance " << r.construction_distance
          << (r.construction_matches ? ", keeps the published cards" : ", differs from the published target") << '\n';
      int ok = 0;
      for (const auto& v : r.variants) ok += v.value == 7 ? 1 : 0;
      out << "variants at 7: " << ok << '/' << r.variants.size() << '\n';
      for (const auto& v : r.variants)
        if (v.value != 7) out << "  " << v.label << ": " << v.value << '\n';
      out << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
    return r.passed() ? kExitOk : kExitFailed;
  }
  CaseReport r;
  std::string title;
  if (cfg.target == "lemma1") {
    r = check_lemma1();
    title = "lemma1";
  } else {
    const SplitModel m = cfg.model == "paper" ? SplitModel::Linear : SplitModel::Faithful;
    r = verify_3332(m, cfg.workers);
    title = std::string("3332 (") + to_string(m) + ")";
  }
  if (cfg.format == "json") out << to_json(r).dump(2) << '\n';
  else print_case_report(out, title, r, cfg.show);
  return r.passed() ? kExitOk : kExitFailed;
}

inline int do_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const DistributionReport r = sample_distribution(cfg.n, cfg.seed, cfg.workers);
  if (!cfg.csv.empty()) {
    std::ofstream f(cfg.csv);
    if (!f) {
      err << "cannot write " << cfg.csv << '\n';
      return kExitUsage;
    }
    f << histogram_csv(r);
  }
  if (cfg.format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "samples: " << r.sample_size << "  seed: " << r.seed << '\n';
    for (const auto& [v, c] : r.histogram) out << "  " << std::setw(2) << v << "  " << c << '\n';
    out << "mass 2..4: " << std::fixed << std::setprecision(4) << r.mass_2_to_4 << '\n';
    out << "max observed: " << r.max_observed << " (" << r.max_hand << " / " << r.max_wcj << ")\n";
  }
  return r.max_observed <= 7 ? kExitOk : kExitFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"MinDist engine for 13-card Rummy hands", "rummy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--printed-jokers", cfg.printed_jokers, "Printed jokers in the deck")->check(CLI::Range(0, 2));

  auto hand_opts = [&](CLI::App* sub) {
    sub->add_option("--hand", cfg.hand, "13 card tokens, e.g. \"2H 3C ... KD\"")->required();
    sub->add_option("--wcj", cfg.wcj, "Face-up wildcard card, e.g. AH")->required();
  };
  CLI::App* mindist = app.add_subcommand("mindist", "Exact MinDist with a target declaration");
  hand_opts(mindist);
  CLI::App* declarable = app.add_subcommand("declarable", "Whether the hand is itself declarable");
  hand_opts(declarable);
  CLI::App* certify = app.add_subcommand("certify", "Constructive upper-bound certificate");
  hand_opts(certify);
  certify->add_option("--prop", cfg.prop, "Construction: 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  CLI::App* verify = app.add_subcommand("verify", "Exhaustive checks");
  verify->add_option("check", cfg.target, "lemma1, 3332 or extremal")
      ->required()
      ->check(CLI::IsMember({"lemma1", "3332", "extremal"}));
  verify->add_option("--model", cfg.model, "3332 model: paper or faithful")->check(CLI::IsMember({"paper", "faithful"}));
  verify->add_option("--show", cfg.show, "Failures listed in human output");
  CLI::App* sample = app.add_subcommand("sample", "MinDist distribution over random hands");
  sample->add_option("--n", cfg.n, "Sample size")->check(CLI::PositiveNumber);
  sample->add_option("--seed", cfg.seed, "Seed (default " + std::to_string(kDefaultSeed) + ")");
  sample->add_option("--csv", cfg.csv, "Write the histogram as CSV");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mindist->parsed()) return detail::do_mindist(cfg, out);
    if (declarable->parsed()) return detail::do_declarable(cfg, out);
    if (certify->parsed()) return detail::do_certify(cfg, out);
    if (verify->parsed()) return detail::do_verify(cfg, out);
    return detail::do_sample(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace rummy::cli
