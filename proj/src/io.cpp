#include "mggs/io.hpp"

#include <sstream>

#include "mggs/errors.hpp"

namespace mggs {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<Residue> ints(const Json& j) { return j.get<std::vector<Residue>>(); }

}  // namespace

Json portrait_to_json(const Portrait& g) {
  Json labels = Json::array();
  for (const auto& l : g.labels()) labels.push_back({l.u, l.t});
  return {{"p", g.p()}, {"depth", g.depth()}, {"labels", labels}};
}

Portrait portrait_from_json(const Json& j) {
  return guarded("portrait", [&] {
    std::vector<AffineLabel> ls;
    for (const auto& l : j.at("labels")) {
      if (l.size() != 2) throw ParseError("portrait label must be [u, t]");
      ls.push_back({l[0].get<std::uint16_t>(), l[1].get<std::uint16_t>()});
    }
    return Portrait(j.at("p").get<Residue>(), j.at("depth").get<unsigned>(), std::move(ls));
  });
}

Json group_to_json(const MggsGroup& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Json row = Json::array();
    const FpVec& r = g.basis_row(i);
    for (std::size_t k = 0; k < r.size(); ++k) row.push_back(r[k]);
    rows.push_back(row);
  }
  return {{"p", g.p()}, {"rows", rows}};
}

MggsGroup group_from_json(const Json& j) {
  return guarded("group description", [&] {
    const auto p = j.at("p").get<Residue>();
    std::vector<FpVec> rows;
    for (const auto& r : j.at("rows")) rows.emplace_back(p, r.get<std::vector<std::int64_t>>());
    return construct(p, std::move(rows));
  });
}

Json aut_report_to_json(const AutReport& r) {
  Json scalars = Json::object();
  for (const auto& [v, l] : r.scalars) scalars[std::to_string(v)] = l;
  return {{"classification", to_string(r.classification)},
          {"U", r.U},
          {"V", r.V},
          {"W", r.W},
          {"scalars", scalars},
          {"structure", r.structure},
          {"out_finite", r.out_finite},
          {"coprime_autos", r.coprime_autos},
          {"flags", r.flags}};
}

AutReport aut_report_from_json(const Json& j) {
  return guarded("Aut report", [&] {
    AutReport r;
    r.classification = classification_from_string(j.at("classification").get<std::string>());
    r.U = ints(j.at("U"));
    r.V = ints(j.at("V"));
    r.W = ints(j.at("W"));
    for (const auto& [k, v] : j.at("scalars").items()) r.scalars[static_cast<Residue>(std::stoul(k))] = v.get<Residue>();
    r.structure = j.at("structure").get<std::string>();
    r.out_finite = j.at("out_finite").get<bool>();
    r.coprime_autos = j.at("coprime_autos").get<bool>();
    if (j.contains("flags")) r.flags = j.at("flags").get<std::vector<std::string>>();
    return r;
  });
}

Json check_result_to_json(const CheckResult& r) {
  Json j = {{"check", r.name},   {"p", r.p},           {"rows", r.rows},
            {"depth", r.depth},  {"passed", r.passed}, {"witness", nullptr},
            {"detail", r.detail}, {"elapsed_ms", r.elapsed_ms}, {"seed", nullptr}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

CheckResult check_result_from_json(const Json& j) {
  return guarded("check result", [&] {
    CheckResult r;
    r.name = j.at("check").get<std::string>();
    r.p = j.at("p").get<Residue>();
    r.rows = j.at("rows").get<std::vector<std::vector<Residue>>>();
    r.depth = j.at("depth").get<unsigned>();
    r.passed = j.at("passed").get<bool>();
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
    r.detail = j.at("detail").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  });
}

std::string to_json_lines(const std::vector<CheckResult>& rs) {
  std::string out;
  for (const auto& r : rs) out += check_result_to_json(r).dump() + "\n";
  return out;
}

std::vector<CheckResult> from_json_lines(const std::string& text) {
  std::vector<CheckResult> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(check_result_from_json(parse_json(line)));
  return out;
}

Json quotient_to_json(const QuotientGroup& q) {
  Json out = Json::array();
  for (const auto& g : q.elements()) out.push_back(portrait_to_json(g));
  return out;
}

Classification classification_from_string(const std::string& s) {
  for (auto c : {Classification::Constant, Classification::Symmetric, Classification::Regular})
    if (to_string(c) == s) return c;
  throw ParseError("unknown classification '" + s + "'");
}

std::vector<FpVec> parse_rows(Residue p, const std::string& text) {
  std::vector<FpVec> rows;
  std::istringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<std::int64_t> entries;
    std::istringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(e, &used);
      } catch (const std::exception&) {
        throw ParseError("row entry '" + e + "' is not an integer");
      }
      if (e.find_first_not_of(" \t", used) != std::string::npos)
        throw ParseError("row entry '" + e + "' is not an integer");
      entries.push_back(v);
    }
    if (entries.empty()) throw ParseError("empty row in '" + text + "'");
    rows.emplace_back(p, entries);
  }
  if (rows.empty()) throw ParseError("no rows given");
  return rows;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace mggs
