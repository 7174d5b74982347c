#include "formcone/report.hpp"

#include <algorithm>
#include <chrono>

#include "formcone/errors.hpp"
#include "formcone/truncation.hpp"

namespace formcone {

using json = nlohmann::ordered_json;

namespace {

json polys(const std::vector<Polynomial>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

json grade_value(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json("inf");
}

std::string show(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

json grade_json(const GradeReport& g) {
  json out;
  out["value"] = grade_value(g.value);
  out["method"] = g.method;
  out["generators"] = polys(g.generators);
  json seq = json::array();
  for (const auto& e : g.sequence) seq.push_back({{"form", e.representative.str()}, {"degree", e.degree}});
  out["sequence"] = seq;
  out["sources"] = polys(g.sources);
  out["koszul_index"] = g.koszul_index ? json(*g.koszul_index) : json(nullptr);
  out["koszul_cycle"] = polys(g.koszul_cycle.components);
  out["lzero_n"] = g.lzero_n ? json(*g.lzero_n) : json(nullptr);
  out["lzero_witness"] = polys(g.lzero_witness);
  return out;
}

json record_json(const LZeroRecord& r) {
  return {{"n", r.n},
          {"vanishing", r.vanishing},
          {"stabilized_l", r.stabilized_l},
          {"certified", r.certified},
          {"status", r.status},
          {"generators", polys(r.quotient_generators)}};
}

json table_json(const std::vector<LZeroRecord>& t) {
  json out = json::array();
  for (const auto& r : t) out.push_back(record_json(r));
  return out;
}

json params_json(const SessionParams& p) {
  return {{"n_max", p.n_max},
          {"l_max", p.l_max},
          {"window", p.window},
          {"degree_cap", p.degree_cap},
          {"probe_cap", p.probe_cap},
          {"search_random", p.search_random},
          {"search_extra_degree", p.search_extra_degree},
          {"max_reductions", p.max_reductions}};
}

json presentation_json(const GradedQuotientPresentation& g, const RingPtr& ambient) {
  json out;
  out["variables"] = g.ring->names();
  out["weights"] = g.weights;
  json ymap;
  for (std::size_t j = 0; j < g.num_y(); ++j) ymap[g.ring->names()[g.num_x + j]] = g.q_generators[j].str();
  out["y_map"] = ymap;
  out["ideal"] = polys(g.ideal.gb().elements());
  auto cone = as_cone_ideal(g, ambient);
  out["cone"] = cone ? polys(cone->gb().elements()) : json(nullptr);
  return out;
}

json skeleton(Command cmd, const SessionSpec& spec) {
  json j;
  j["command"] = command_names()[static_cast<std::size_t>(cmd)];
  j["data"] = json::object();
  j["verdict"] = nullptr;
  j["depth"] = nullptr;
  j["dim"] = nullptr;
  j["grade"] = nullptr;
  j["sop"] = nullptr;
  j["lzero_table"] = nullptr;
  j["band"] = nullptr;
  j["certificates"] = json::object();
  j["timings"] = json::object();
  j["parameters"] = params_json(spec.params);
  return j;
}

std::string join(const json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + arr[i].get<std::string>();
  return s;
}

std::string lzero_verdict(const LZeroScan& scan, unsigned n_max) {
  if (scan.first_nonvanishing) return "nonvanishing at n = " + std::to_string(*scan.first_nonvanishing);
  return "vanishes for all n <= " + std::to_string(n_max);
}

std::string table_text(const std::vector<LZeroRecord>& t) {
  std::string s = "  n  vanishing  l  status      generators\n";
  for (const auto& r : t) {
    std::string line = "  " + std::to_string(r.n);
    line.resize(5, ' ');
    line += r.vanishing ? "yes        " : "no         ";
    line += std::to_string(r.stabilized_l);
    line.resize(19, ' ');
    line += r.status;
    line.resize(31, ' ');
    line += join(polys(r.quotient_generators));
    s += line + "\n";
  }
  return s;
}

void criterion_into(json& j, std::string& text, const CriterionReport& rep) {
  j["verdict"] = rep.cm_verdict ? "Cohen-Macaulay" : "NOT Cohen-Macaulay";
  j["depth"] = grade_value(rep.depth.value);
  j["dim"] = rep.dim ? json(*rep.dim) : json(nullptr);
  j["grade"] = grade_value(rep.grade_direct.value);
  j["sop"] = rep.sop_flag;
  j["lzero_table"] = table_json(rep.lzero_table);
  j["band"] = rep.predicted_band ? json::array({rep.predicted_band->first, rep.predicted_band->second})
                                 : json(nullptr);
  j["certificates"]["depth"] = grade_json(rep.depth);
  j["certificates"]["grade_direct"] = grade_json(rep.grade_direct);
  j["certificates"]["grade_recursion"] = grade_json(rep.grade_recursion);
  j["data"]["notes"] = rep.notes;
  text += "verdict: " + j["verdict"].get<std::string>() + "\n";
  text += "depth: " + show(rep.depth.value) + "\n";
  text += "dim: " + (rep.dim ? std::to_string(*rep.dim) : std::string("undefined")) + "\n";
  text += "grade: " + show(rep.grade_direct.value) + " (Koszul), " +
          show(rep.grade_recursion.value) + " (recursion)\n";
  text += std::string("system of parameters: ") + (rep.sop_flag ? "yes" : "no") + "\n";
  if (rep.predicted_band)
    text += "band: [" + std::to_string(rep.predicted_band->first) + ", " +
            std::to_string(rep.predicted_band->second) + "]\n";
  text += "lzero:\n" + table_text(rep.lzero_table);
  for (const auto& n : rep.notes) text += "note: " + n + "\n";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gb",    "formring", "hilbert",  "dim",
                                              "depth", "lzero",    "grade",    "cm-check",
                                              "full-report", "emit-cas"};
  return names;
}

std::optional<Command> parse_command(std::string_view name) {
  const auto& names = command_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Command>(it - names.begin());
}

CommandReport run_command(Command cmd, const SessionSpec& spec) {
  if (cmd == Command::emit_cas) throw InputError("emit-cas produces a script, not a report");
  auto start = std::chrono::steady_clock::now();
  CommandReport out;
  json& j = out.json;
  j = skeleton(cmd, spec);
  std::string& text = out.text;
  auto ctx = build_context(spec);
  auto lp = lzero_params(spec.params);
  const auto& g = ctx.form_module();

  switch (cmd) {
    case Command::gb: {
      j["data"]["base"] = polys(ctx.base_ring_ideal()->gb().elements());
      j["data"]["module"] = polys(ctx.module_ideal()->gb().elements());
      j["verdict"] = "ok";
      text += "base: " + join(j["data"]["base"]) + "\nmodule: " + join(j["data"]["module"]) + "\n";
      break;
    }
    case Command::formring: {
      j["data"]["presentation"] = presentation_json(g, ctx.ring());
      j["verdict"] = "ok";
      text += "presentation: " + g.str() + "\n";
      for (auto& [y, f] : j["data"]["presentation"]["y_map"].items())
        text += "  " + y + " = " + f.get<std::string>() + "\n";
      if (!j["data"]["presentation"]["cone"].is_null())
        text += "cone: (" + join(j["data"]["presentation"]["cone"]) + ")\n";
      break;
    }
    case Command::hilbert: {
      auto h = hilbert_function(g, spec.params.n_max);
      j["data"]["hilbert"] = h;
      try {
        auto oracle = hilbert_by_colength(ctx, spec.params.n_max);
        FORMCONE_ASSERT(oracle == h, "Hilbert function disagrees with colength differences");
        j["data"]["colength_check"] = true;
      } catch (const MathError&) {
        j["data"]["colength_check"] = nullptr;
      }
      j["verdict"] = "ok";
      text += "hilbert:";
      for (auto v : h) text += " " + std::to_string(v);
      text += "\n";
      break;
    }
    case Command::dim: {
      auto d = graded_dim(g);
      auto dm = krull_dim(*ctx.module_ideal());
      FORMCONE_ASSERT(d == dm, "dim G_M(q) differs from dim M");
      j["dim"] = d ? json(*d) : json(nullptr);
      j["data"]["dim_module"] = dm ? json(*dm) : json(nullptr);
      j["verdict"] = "ok";
      text += "dim: " + (d ? std::to_string(*d) : std::string("undefined (M = 0)")) + "\n";
      break;
    }
    case Command::depth: {
      auto d = depth(g);
      j["depth"] = grade_value(d.value);
      j["certificates"]["depth"] = grade_json(d);
      j["verdict"] = "ok";
      text += "depth: " + show(d.value) + "\n";
      break;
    }
    case Command::lzero: {
      auto scan = lzero_scan(ctx, lp, false);
      j["lzero_table"] = table_json(scan.records);
      j["verdict"] = lzero_verdict(scan, lp.n_max);
      j["data"]["budget_hit"] = scan.budget_hit;
      text += "lzero: " + j["verdict"].get<std::string>() + "\n" + table_text(scan.records);
      break;
    }
    case Command::grade: {
      std::vector<Polynomial> forms;
      for (const auto& f : system_forms(ctx)) forms.push_back(f.representative);
      auto direct = koszul_grade(g, forms);
      auto rec = grade_via_recursion(ctx, lp);
      FORMCONE_ASSERT(direct.value == rec.value, "grade mismatch: Koszul " + show(direct.value) +
                                                     ", recursion " + show(rec.value));
      j["grade"] = grade_value(direct.value);
      j["certificates"]["grade_direct"] = grade_json(direct);
      j["certificates"]["grade_recursion"] = grade_json(rec);
      j["verdict"] = "ok";
      text += "grade: " + show(direct.value) + "\n";
      break;
    }
    case Command::cm_check:
    case Command::full_report: {
      auto rep = criterion_report(ctx, lp);
      criterion_into(j, text, rep);
      if (cmd == Command::full_report) {
        j["data"]["presentation"] = presentation_json(g, ctx.ring());
        try {
          j["data"]["hilbert"] = hilbert_function(g, spec.params.n_max);
        } catch (const MathError&) {
          j["data"]["hilbert"] = nullptr;
        }
        auto vr = vanishing_regularity_check(ctx, lp);
        json vr_json;
        vr_json["lzero_all_vanish"] = vr.lzero_all_vanish;
        vr_json["regular_exists"] = vr.regular_exists;
        vr_json["agree"] = vr.agree;
        vr_json["status"] = vr.status;
        vr_json["annihilator_witness"] = vr.annihilator_witness ? json(vr.annihilator_witness->str()) : json(nullptr);
        vr_json["regular_witness"] = vr.regular_witness ? json(vr.regular_witness->b.str()) : json(nullptr);
        j["certificates"]["vanishing_regularity"] = vr_json;
        text += "presentation: " + g.str() + "\n";
        if (!j["data"]["hilbert"].is_null()) {
          text += "hilbert:";
          for (auto v : j["data"]["hilbert"]) text += " " + std::to_string(v.get<std::size_t>());
          text += "\n";
        }
        text += "regular element in a*G: " + std::string(vr.regular_exists ? "yes" : "no") +
                " (" + vr.status + ")\n";
      }
      break;
    }
    case Command::emit_cas:
      break;
  }
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  j["timings"]["total_ms"] = ms;
  return out;
}

std::string emit_cas_script(const SessionSpec& spec, std::string_view dialect) {
  const auto& names = spec.ring->names();
  const Field& k = spec.ring->field();
  std::vector<std::string> all = names;
  std::vector<std::string> ys;
  for (std::size_t j = 0; j < spec.q.size(); ++j) {
    ys.push_back(fresh_name("y" + std::to_string(j + 1), all));
    all.push_back(ys.back());
  }
  std::string t = fresh_name("T", all);
  auto list = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  std::vector<std::string> module_gens;
  for (const auto& f : spec.base) module_gens.push_back(f.str());
  for (const auto& f : spec.module) module_gens.push_back(f.str());
  std::vector<std::string> rees_gens = module_gens;
  for (std::size_t j = 0; j < spec.q.size(); ++j)
    rees_gens.push_back(ys[j] + " - (" + spec.q[j].str() + ")*" + t);
  std::vector<std::string> qs;
  for (const auto& f : spec.q) qs.push_back(f.str());
  std::vector<std::string> xy = names;
  xy.insert(xy.end(), ys.begin(), ys.end());

  if (dialect == "macaulay2") {
    for (const auto& n : all)
      if (n.find('_') != std::string::npos)
        throw InputError("unsupported construct for macaulay2: variable name '" + n + "'");
    if (k.is_prime_field() && k.characteristic() > 32749)
      throw InputError("unsupported construct for macaulay2: characteristic above 32749");
    std::string kk = k.is_prime_field() ? "ZZ/" + std::to_string(k.characteristic()) : "QQ";
    std::string degs;
    for (std::size_t i = 0; i < xy.size(); ++i) degs += std::string(i ? "," : "") + (i < names.size() ? "0" : "1");
    std::string s;
    s += "-- Form ring of M = P/IM with respect to q; prints the presentation, dim and depth.\n";
    s += "needsPackage \"Depth\";\n";
    s += "kk = " + kk + ";\n";
    s += "S = kk[" + t + ", " + list(xy) + ", MonomialOrder => Eliminate 1];\n";
    s += "J = ideal(" + (rees_gens.empty() ? std::string("0_S") : list(rees_gens)) + ");\n";
    s += "H = selectInSubring(1, gens gb J);\n";
    s += "R = kk[" + list(xy) + ", Degrees => {" + degs + "}];\n";
    s += "F = ideal sub(H, R) + ideal(" + (qs.empty() ? std::string("0_R") : list(qs)) + ");\n";
    s += "G = R/F;\n";
    s += "print toString gens gb F;\n";
    s += "print dim G;\n";
    s += "print depth G;\n";
    return s;
  }
  if (dialect == "singular") {
    std::string ch = k.is_prime_field() ? std::to_string(k.characteristic()) : "0";
    std::string s;
    s += "// Form ring of M = P/IM with respect to q; prints the presentation, dim and depth.\n";
    s += "LIB \"elim.lib\";\nLIB \"homolog.lib\";\n";
    s += "ring S = " + ch + ",(" + t + "," + list(xy) + "),dp;\n";
    s += "ideal J = " + (rees_gens.empty() ? std::string("0") : list(rees_gens)) + ";\n";
    s += "ideal H = eliminate(J, " + t + ");\n";
    s += "ring R = " + ch + ",(" + list(xy) + "),dp;\n";
    s += "ideal F = imap(S, H);\n";
    if (!qs.empty()) s += "F = F + ideal(" + list(qs) + ");\n";
    s += "F = std(F);\nprint(F);\nprint(dim(F));\n";
    s += "qring G = F;\nprint(depth(freemodule(1)));\n";
    return s;
  }
  throw InputError("unknown dialect '" + std::string(dialect) + "' (expected macaulay2 or singular)");
}

}  // namespace formcone
