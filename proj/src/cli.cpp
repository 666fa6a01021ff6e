#include "mggs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mggs/autgrp.hpp"
#include "mggs/errors.hpp"
#include "mggs/examples.hpp"
#include "mggs/io.hpp"
#include "mggs/oracle.hpp"

namespace mggs {

namespace {

struct GroupArgs {
  unsigned p = 0;
  std::string rows;
  std::string file;
  std::string name;
};

void add_group_options(CLI::App* cmd, GroupArgs& ga) {
  cmd->add_option("-p", ga.p, "odd prime");
  cmd->add_option("-E", ga.rows, "basis rows of E, e.g. \"1,2,2,1;0,1,1,0\"");
  cmd->add_option("--file", ga.file, "JSON group description {\"p\", \"rows\"}");
  cmd->add_option("-g,--group", ga.name, "named group: ex1, ex2-5, ex2-7, ex3, gs3, gs5, gs7, full3, full5");
}

MggsGroup load_group(const GroupArgs& ga) {
  const int given = !ga.rows.empty() + !ga.file.empty() + !ga.name.empty();
  if (given != 1) throw ParseError("give exactly one of -E (with -p), --file or --group");
  if (!ga.name.empty()) return named_group(ga.name);
  if (!ga.file.empty()) {
    std::ifstream in(ga.file);
    if (!in) throw ParseError("cannot read '" + ga.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return group_from_json(parse_json(ss.str()));
  }
  if (ga.p == 0) throw ParseError("-E needs -p");
  require_odd_prime(ga.p);
  return construct(ga.p, parse_rows(ga.p, ga.rows));
}

std::string set_str(const std::vector<Residue>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

void print_portrait(std::ostream& out, const Portrait& g) {
  std::size_t width = 1;
  for (unsigned l = 0; l < g.depth(); ++l, width *= g.p()) {
    out << "level " << l << ":";
    for (std::size_t i = 0; i < width; ++i) {
      const auto lab = g.label_at(l, i);
      out << " (" << lab.u << "," << lab.t << ")";
    }
    out << "\n";
  }
}

Vertex parse_vertex(const std::string& text, Residue p) {
  Vertex v;
  if (text.empty()) return v;
  std::istringstream in(text);
  std::string letter;
  while (std::getline(in, letter, ',')) {
    std::size_t used = 0;
    long x = -1;
    try {
      x = std::stol(letter, &used);
    } catch (const std::exception&) {
    }
    if (x < 0 || static_cast<unsigned long>(x) >= p || used != letter.size())
      throw ParseError("vertex letter '" + letter + "' is not in 0.." + std::to_string(p - 1));
    v.push_back(static_cast<Residue>(x));
  }
  return v;
}

unsigned default_depth(const std::string& check, const MggsGroup* g) {
  if (check == "homomorphism" || check == "normalizer_parameters") return 4;
  if (check == "normalizer_census") return g && g->p() > 7 ? 3 : 4;
  if (check == "order_p" || check == "kappa_closure" || check == "kappa_uncorrected" ||
      check == "symmetric_counterexample")
    return 3;
  return 2;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "global_equations",     "global_equations_mutant", "order_p",           "symmetric_counterexample",
      "kappa_closure",        "kappa_uncorrected",       "centralizer",       "contraction",
      "abelianization_rank",  "relation_abelianization", "homomorphism",      "normalizer_census",
      "normalizer_parameters"};
  return names;
}

CheckResult run_check(const std::string& check, const MggsGroup* g, unsigned depth, std::uint64_t seed,
                      unsigned trials, bool serial) {
  if (check == "centralizer") return check_centralizer_normalizer_A(depth, !serial);
  if (!g) throw ParseError("check '" + check + "' needs a group");
  if (check == "global_equations") return check_global_equations(*g, depth, false);
  if (check == "global_equations_mutant") return check_global_equations(*g, depth, true);
  if (check == "order_p") return check_order_p_prop(*g, trials ? trials : 100, depth, seed);
  if (check == "symmetric_counterexample") return check_symmetric_counterexample(*g);
  if (check == "kappa_closure") return check_kappa_closure(*g, depth);
  if (check == "kappa_uncorrected") return check_kappa_uncorrected(*g, depth);
  if (check == "contraction") return check_contraction(*g, trials ? trials : 1000, seed);
  if (check == "abelianization_rank") return check_abelianization_rank(*g, depth);
  if (check == "relation_abelianization") return check_relation_abelianization(*g, depth);
  if (check == "homomorphism") return check_homomorphism(*g, trials ? trials : 200, depth, seed);
  if (check == "normalizer_census") return check_normalizer_census(*g, depth);
  if (check == "normalizer_parameters") return check_normalizer_parameters(*g, depth);
  throw ParseError("unknown check '" + check + "'");
}

// Catalog of the worked examples with their expected values.
struct Expected {
  std::string name;
  std::string classification;
  std::vector<Residue> U, V, W;  // empty V: not part of the catalog entry
  std::string structure;
  bool flag = false;
};

std::vector<Expected> catalog() {
  const std::vector<Residue> f5{1, 2, 3, 4}, f7{1, 2, 3, 4, 5, 6};
  std::vector<Residue> f13;
  for (Residue i = 1; i < 13; ++i) f13.push_back(i);
  return {
      {"ex1", "symmetric", {1, 4}, {}, {1}, "(G ⋊ C_5) ⋊ C_2", true},
      {"ex2-5", "regular", f5, f5, f5, "(G ⋊ ∏_ω C_5) ⋊ (C_4)²"},
      {"ex2-7", "regular", f7, f7, f7, "(G ⋊ ∏_ω C_7) ⋊ (C_6)²"},
      {"ex3", "regular", f13, {1, 5, 8, 12}, {1, 12}, "(G ⋊ ∏_ω C_13) ⋊ (C_12 × C_2)"},
      {"gs3", "regular", {1, 2}, {}, {1, 2}, "(G ⋊ ∏_ω C_3) ⋊ C_2²"},
      {"gs5", "regular", {1}, {}, {1}, "G ⋊ ∏_ω C_5"},
      {"gs7", "regular", {1}, {}, {1}, "G ⋊ ∏_ω C_7"},
      {"full3", "regular", {1, 2}, {}, {1}, "(G ⋊ ∏_ω C_3) ⋊ C_2"},
      {"full5", "regular", f5, {}, {1}, "(G ⋊ ∏_ω C_5) ⋊ C_4"},
  };
}

int cmd_examples(std::ostream& out, bool json) {
  int mismatches = 0;
  Json all = Json::array();
  const auto line = [&](const std::string& name, const std::string& what, const std::string& got,
                        const std::string& want) {
    const bool ok = got == want;
    mismatches += !ok;
    if (json)
      all.push_back({{"group", name}, {"value", what}, {"got", got}, {"expected", want}, {"ok", ok}});
    else
      out << name << "  " << what << " = " << got << (ok ? "  ok" : "  MISMATCH (expected " + want + ")") << "\n";
  };
  for (const auto& e : catalog()) {
    const auto g = named_group(e.name);
    const auto r = aut_structure(g);
    line(e.name, "classification", to_string(r.classification), e.classification);
    line(e.name, "U", set_str(r.U), set_str(e.U));
    if (!e.V.empty()) line(e.name, "V", set_str(r.V), set_str(e.V));
    line(e.name, "W", set_str(r.W), set_str(e.W));
    line(e.name, "|U x W|", std::to_string(r.U.size() * r.W.size()), std::to_string(e.U.size() * e.W.size()));
    line(e.name, "structure", r.structure, e.structure);
    const bool flagged = std::find(r.flags.begin(), r.flags.end(), kFlagMinusOneTrivial) != r.flags.end();
    line(e.name, "minus-one flag", flagged ? "raised" : "not raised", e.flag ? "raised" : "not raised");
  }
  const FpVec b1{13, {1, 2, 11, 3, 12, 10, 10, 12, 3, 11, 2, 1}};
  line("ex3", "perm_apply(b1, 5) == -b1", perm_apply(b1, Unit(5, 13)) == -b1 ? "true" : "false", "true");
  if (json)
    out << all.dump() << "\n";
  else
    out << (mismatches ? std::to_string(mismatches) + " mismatches" : "all values match") << "\n";
  return mismatches ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-GGS groups: classification, automorphism structure and finite-depth checks", "mggs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  GroupArgs ga;
  auto* classify = app.add_subcommand("classify", "constant / symmetric / regular");
  auto* uvw = app.add_subcommand("uvw", "the unit groups U, V, W");
  auto* aut = app.add_subcommand("aut", "the full Aut report");
  auto* portrait = app.add_subcommand("portrait", "portrait of a word");
  auto* sectioncmd = app.add_subcommand("section", "section of a word at a vertex");
  auto* verify = app.add_subcommand("verify", "run one finite-depth check");
  auto* examples = app.add_subcommand("examples", "reproduce the example catalog against golden values");
  for (auto* c : {classify, uvw, aut, portrait, sectioncmd, verify}) {
    add_group_options(c, ga);
    c->add_flag("--json", json, "machine-readable output");
  }
  examples->add_flag("--json", json, "machine-readable output");

  std::string word, vertex;
  unsigned depth = 0;
  for (auto* c : {portrait, sectioncmd}) {
    c->add_option("-w,--word", word, "word, e.g. \"a^2 * b[1,0] * c^-1 * k2(a)\"")->required();
    c->add_option("-d,--depth", depth, "depth of the printed portrait")->required();
  }
  sectioncmd->add_option("-v,--vertex", vertex, "comma-separated letters, e.g. \"0,2\"")->required();

  std::string check;
  std::uint64_t seed = 1;
  unsigned trials = 0;
  bool serial = false;
  verify->add_option("check", check, "check name")->required()->check(CLI::IsMember(check_names()));
  verify->add_option("-d,--depth", depth, "depth (default depends on the check)");
  verify->add_option("--seed", seed, "seed for randomised checks (default 1)");
  verify->add_option("--trials", trials, "number of random trials");
  verify->add_flag("--serial", serial, "single-threaded kernel (centralizer)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (examples->parsed()) return cmd_examples(out, json);

    std::optional<MggsGroup> group;
    const bool needs_group = !(verify->parsed() && check == "centralizer");
    if (needs_group) group.emplace(load_group(ga));

    if (classify->parsed()) {
      const auto c = group->classification();
      if (json)
        out << Json{{"classification", to_string(c)}, {"excluded", c == Classification::Constant}}.dump() << "\n";
      else
        out << to_string(c) << (c == Classification::Constant ? " (excluded from Aut computation)" : "") << "\n";
      return kExitOk;
    }
    if (uvw->parsed() || aut->parsed()) {
      const auto r = aut_structure(*group);
      if (json) {
        Json j = aut_report_to_json(r);
        if (uvw->parsed()) j = Json{{"U", j["U"]}, {"V", j["V"]}, {"W", j["W"]}, {"scalars", j["scalars"]}};
        out << j.dump() << "\n";
        return kExitOk;
      }
      out << "U = " << set_str(r.U) << "  |U| = " << r.U.size() << "\n";
      out << "V = " << set_str(r.V) << "  |V| = " << r.V.size() << "\n";
      out << "W = " << set_str(r.W) << "  |W| = " << r.W.size() << "\n";
      if (aut->parsed()) {
        out << "classification: " << to_string(r.classification) << "\n";
        out << "scalars:";
        for (const auto& [v, l] : r.scalars) out << " " << v << "->" << l;
        out << "\n";
        out << "structure: Aut(G) = " << r.structure << "\n";
        out << "Out(G) finite: " << (r.out_finite ? "yes" : "no") << "\n";
        out << "automorphisms of order coprime to p: " << (r.coprime_autos ? "yes" : "no") << "\n";
        for (const auto& f : r.flags) out << "flag: " << f << "\n";
      }
      return kExitOk;
    }
    if (portrait->parsed()) {
      const Portrait x = evaluate(parse_word(word, *group), *group, depth);
      if (json)
        out << portrait_to_json(x).dump() << "\n";
      else
        print_portrait(out, x);
      return kExitOk;
    }
    if (sectioncmd->parsed()) {
      const Vertex v = parse_vertex(vertex, group->p());
      const Word w = parse_word(word, *group);
      const Portrait x = section(evaluate(w, *group, depth + static_cast<unsigned>(v.size())), v);
      // symbolic section while the word stays in the first level stabiliser
      std::optional<Word> sw = w;
      for (Residue letter : v) {
        if (!sw || sw->a_exponent_sum() != 0) {
          sw.reset();
          break;
        }
        sw = sections_of_word(*sw, *group)[letter];
      }
      if (json) {
        Json j = portrait_to_json(x);
        j["word"] = sw ? Json(sw->to_string()) : Json(nullptr);
        out << j.dump() << "\n";
      } else {
        if (sw) out << "word: " << sw->to_string() << "\n";
        print_portrait(out, x);
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const MggsGroup* g = group ? &*group : nullptr;
      const unsigned d = depth ? depth : default_depth(check, g);
      const auto r = run_check(check, g, d, seed, trials, serial);
      if (json) {
        out << to_json_lines({r});
      } else {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (p=" << r.p << ", depth " << r.depth;
        if (r.seed) out << ", seed " << *r.seed;
        out << ", " << r.elapsed_ms << " ms)\n";
        if (!r.detail.empty()) out << "  " << r.detail << "\n";
        if (!r.passed) out << "  witness: " << r.witness << "\n";
      }
      return r.passed ? kExitOk : kExitCheckFailed;
    }
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mggs
