/* Copyright (C) 2026 arrsheaf developers
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "arrsheaf/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "arrsheaf/charcycle.hpp"
#include "arrsheaf/errors.hpp"
#include "arrsheaf/salvetti.hpp"

namespace arrsheaf {

namespace {

struct CommonOpts {
  std::string file;
  std::string ls;
  std::string s;
  std::string format = "json";
  std::optional<int> beta3_flag;
  std::vector<std::string> user_dims;
  bool no_oracle = false;
  bool exhaustive = false;
  std::string batch;
  int jobs = 1;
  int q = 3;
  int decone_index = 0;
  bool pushforward = false;
  bool do_essentialize = false;
};

LocalSystem system_for(const CommonOpts& o, int r) {
  if (!o.s.empty()) return LocalSystem::equal_monodromy(Rational::parse(o.s), r);
  if (o.ls.empty()) throw ParseError("a local system is required (--ls or --s)");
  LocalSystem l = LocalSystem::parse_list(o.ls);
  if (l.r() != r)
    throw ParseError("local system has " + std::to_string(l.r()) +
                     " entries but the arrangement has " + std::to_string(r));
  return l;
}

LengthOptions length_options(const CommonOpts& o) {
  LengthOptions opt;
  opt.strategy.allow_oracle = !o.no_oracle;
  opt.strategy.beta3_override = o.beta3_flag;
  opt.exhaustive = o.exhaustive;
  for (const auto& kv : o.user_dims) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("--dim expects edge=value");
    opt.user_dims[std::stoi(kv.substr(0, eq))] = std::stoll(kv.substr(eq + 1));
  }
  return opt;
}

void emit(const json& j, const CommonOpts& o, std::ostream& out) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  // text rendering: flat key/value lines, arrays inline
  std::function<void(const json&, const std::string&)> walk =
      [&](const json& v, const std::string& prefix) {
        if (v.is_object()) {
          for (auto it = v.begin(); it != v.end(); ++it)
            walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
          int k = 0;
          for (const auto& item : v) walk(item, prefix + "[" + std::to_string(k++) + "]");
        } else {
          out << prefix << ": " << v.dump() << "\n";
        }
      };
  walk(j, "");
}

json length_json(const Arrangement& a, const LocalSystem& l, Workspace& ws,
                 const LengthOptions& opt) {
  const LengthReport rep = exact_length(a, l, ws, opt);
  json j = rep.to_json(*ws.poset(a));
  j["ls"] = l.to_json();
  return j;
}

int cmd_length(const CommonOpts& o, std::ostream& out) {
  const Arrangement a = Arrangement::load(o.file);
  const LengthOptions opt = length_options(o);
  if (!o.batch.empty()) {
    std::ifstream in(o.batch);
    if (!in) throw ParseError("cannot open batch file: " + o.batch);
    json jb;
    try {
      in >> jb;
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid batch JSON: ") + e.what());
    }
    if (!jb.is_array()) throw ParseError("batch file must hold a JSON array of local systems");
    std::vector<LocalSystem> systems;
    for (const auto& item : jb) {
      LocalSystem l = LocalSystem::from_json(item);
      if (l.r() != a.r()) throw ParseError("batch entry has the wrong tuple length");
      systems.push_back(std::move(l));
    }
    std::vector<json> results(systems.size());
    if (o.jobs > 1) {
      // each evaluation gets its own workspace; results are value-identical
      std::vector<std::future<json>> futs;
      for (const auto& l : systems)
        futs.push_back(std::async(std::launch::async, [&a, l, &opt] {
          Workspace ws;
          return length_json(a, l, ws, opt);
        }));
      for (std::size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
      Workspace ws;
      for (std::size_t i = 0; i < systems.size(); ++i)
        results[i] = length_json(a, systems[i], ws, opt);
    }
    json jout = json::array();
    bool undetermined = false;
    for (auto& r : results) {
      undetermined = undetermined || r["exact"].is_null();
      jout.push_back(std::move(r));
    }
    emit(jout, o, out);
    return undetermined ? kExitUndetermined : kExitOk;
  }
  Workspace ws;
  const LocalSystem l = system_for(o, a.r());
  const json j = length_json(a, l, ws, opt);
  emit(j, o, out);
  return j["exact"].is_null() ? kExitUndetermined : kExitOk;
}

int cmd_arr(const CommonOpts& o, std::ostream& out) {
  Arrangement a = Arrangement::load(o.file);
  if (o.do_essentialize) {
    emit(essentialize(a).to_json(), o, out);
    return kExitOk;
  }
  Workspace ws;
  emit(ws.poset(a)->to_json(), o, out);
  return kExitOk;
}

int cmd_cc(const CommonOpts& o, std::ostream& out) {
  const Arrangement a = Arrangement::load(o.file);
  Workspace ws;
  const auto poset = ws.poset(a);
  if (o.pushforward) {
    emit(cc_pushforward(a, ws).to_json(*poset), o, out);
    return kExitOk;
  }
  const LocalSystem l = system_for(o, a.r());
  if (a.n() == 2) {
    emit(cc_ic_dim2(a, l, ws).to_json(*poset), o, out);
    return kExitOk;
  }
  const auto s = l.equal_value();
  if (!s) throw PreconditionError("CC of the intersection complex in C^3 needs equal monodromy");
  if (s->is_zero()) {
    // the constant sheaf: IC is the shifted constant sheaf on C^n
    CharCycle cc;
    cc.mult.assign(poset->size(), 0);
    cc.mult[poset->ambient_id()] = 1;
    emit(cc.to_json(*poset), o, out);
    return kExitOk;
  }
  StrategyOptions opt;
  opt.allow_oracle = !o.no_oracle;
  opt.beta3_override = o.beta3_flag;
  emit(cc_ic_dim3_equal(a, *s, ws, opt).to_json(*poset), o, out);
  return kExitOk;
}

int cmd_ih(const CommonOpts& o, std::ostream& out) {
  const Arrangement a = Arrangement::load(o.file);
  Workspace ws;
  const LocalSystem l = system_for(o, a.r());
  if (a.n() == 2) {
    emit(ih_dim2(a, l, ws).to_json(), o, out);
    return kExitOk;
  }
  const auto s = l.equal_value();
  if (!s) throw PreconditionError("IH in C^3 needs equal monodromy");
  if (s->is_zero()) {
    emit(json{{"ih", {1, 0, 0, 0}}, {"euler", -1}}, o, out);
    return kExitOk;
  }
  StrategyOptions opt;
  opt.allow_oracle = !o.no_oracle;
  opt.beta3_override = o.beta3_flag;
  emit(ih_dim3_equal(a, *s, ws, opt).to_json(), o, out);
  return kExitOk;
}

int cmd_ps(const CommonOpts& o, std::ostream& out) {
  const Arrangement a = Arrangement::load(o.file);
  Workspace ws;
  if (o.s.empty()) throw ParseError("ps needs --s p/q");
  StrategyOptions opt;
  opt.allow_oracle = !o.no_oracle;
  opt.beta3_override = o.beta3_flag;
  emit(ps_report(a, Rational::parse(o.s), ws, opt).to_json(), o, out);
  return kExitOk;
}

json factored_json(const FactoredPoly& p) {
  json coeffs = json::array();
  const IntPolynomial expanded = p.expand();
  for (const Int& c : expanded.coeffs()) coeffs.push_back(to_longlong(c));
  return json{{"factored", p.str()}, {"coeffs", coeffs}};
}

int cmd_milnor(const CommonOpts& o, std::ostream& out) {
  const Arrangement a = Arrangement::load(o.file);
  Workspace ws;
  const MilnorData md = delta_polynomials(a, ws, o.beta3_flag);
  json j{{"chiF_over_r", md.chi_over_r},
         {"n3", md.n3},
         {"beta3", json{{"value", md.beta3}, {"provenance", provenance_name(md.beta3_prov)}}},
         {"delta0", factored_json(md.delta0)},
         {"delta1", factored_json(md.delta1)},
         {"delta2", factored_json(md.delta2)}};
  if (!o.s.empty()) {
    const Rational s = Rational::parse(o.s);
    StrategyOptions opt;
    opt.allow_oracle = !o.no_oracle;
    opt.beta3_override = o.beta3_flag;
    const auto [h1, h2] = eigenspace_dims(a, s, ws, opt);
    json je{{"s", s.mod1().str()}};
    je["h1"] = h1.determined() ? json(*h1.value) : json(nullptr);
    je["h2"] = h2.determined() ? json(*h2.value) : json(nullptr);
    je["provenance"] = provenance_name(h1.prov);
    j["eigenspace"] = je;
  }
  emit(j, o, out);
  return kExitOk;
}

int cmd_oracle_betti(const CommonOpts& o, std::ostream& out) {
  const Arrangement a = Arrangement::load(o.file);
  const LocalSystem l = system_for(o, a.r());
  const auto b = twisted_betti(a, l);
  emit(json{{"betti", {b[0], b[1], b[2]}}}, o, out);
  return kExitOk;
}

int cmd_oracle_coned(const CommonOpts& o, std::ostream& out) {
  const Arrangement a = Arrangement::load(o.file);
  Workspace ws;
  const LocalSystem l = system_for(o, a.r());
  const long long v = complement_cohomology(a, l, o.q, o.decone_index, &ws);
  emit(json{{"q", o.q}, {"value", v}, {"provenance", "oracle"}}, o, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants of rank-one local systems on arrangement complements"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_common = [&](CLI::App* sub, bool needs_ls) {
    sub->add_option("file", o.file, "arrangement JSON file")->required();
    sub->add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (needs_ls) {
      auto* ls = sub->add_option("--ls", o.ls, "comma list of rational exponents");
      auto* s = sub->add_option("--s", o.s, "equal-monodromy exponent p/q");
      ls->excludes(s);
    }
  };

  auto* arr = app.add_subcommand("arr", "intersection poset and lattice invariants");
  add_common(arr, false);
  arr->add_flag("--essentialize", o.do_essentialize, "emit the essentialized arrangement");

  auto* length = app.add_subcommand("length", "length report for the direct image");
  add_common(length, true);
  length->add_option("--beta3", o.beta3_flag, "override the mod-3 Aomoto invariant");
  length->add_option("--dim", o.user_dims, "user-supplied local dimension edge=value");
  length->add_flag("--no-oracle", o.no_oracle, "disable the Salvetti oracle");
  length->add_flag("--exhaustive", o.exhaustive, "cross-check all deletion orders");
  length->add_option("--batch", o.batch, "JSON array of local systems");
  length->add_option("--jobs", o.jobs, "evaluate a batch concurrently");

  auto* cc = app.add_subcommand("cc", "characteristic cycle of the intersection complex");
  add_common(cc, true);
  cc->add_flag("--pushforward", o.pushforward, "cycle of the full direct image instead");
  cc->add_option("--beta3", o.beta3_flag, "override the mod-3 Aomoto invariant");
  cc->add_flag("--no-oracle", o.no_oracle, "disable the Salvetti oracle");

  auto* ih = app.add_subcommand("ih", "intersection-cohomology Betti numbers");
  add_common(ih, true);
  ih->add_option("--beta3", o.beta3_flag, "override the mod-3 Aomoto invariant");
  ih->add_flag("--no-oracle", o.no_oracle, "disable the Salvetti oracle");

  auto* ps = app.add_subcommand("ps", "dual-route triple-point comparison");
  add_common(ps, true);
  ps->add_option("--beta3", o.beta3_flag, "override the mod-3 Aomoto invariant");

  auto* milnor = app.add_subcommand("milnor", "Milnor fiber data and Delta polynomials");
  add_common(milnor, false);
  milnor->add_option("--s", o.s, "eigenvalue exponent for eigenspace dimensions");
  milnor->add_option("--beta3", o.beta3_flag, "override the mod-3 Aomoto invariant");

  auto* oracle = app.add_subcommand("oracle", "twisted-cohomology oracle");
  oracle->require_subcommand(1);
  auto* betti = oracle->add_subcommand("betti", "twisted Betti numbers of a line arrangement");
  add_common(betti, true);
  auto* coned = oracle->add_subcommand("coned", "cohomology of a central cone complement");
  add_common(coned, true);
  coned->add_option("--q", o.q, "cohomology degree")->required();
  coned->add_option("--decone", o.decone_index, "hyperplane sent to infinity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*arr) return cmd_arr(o, out);
    if (*length) return cmd_length(o, out);
    if (*cc) return cmd_cc(o, out);
    if (*ih) return cmd_ih(o, out);
    if (*ps) return cmd_ps(o, out);
    if (*milnor) return cmd_milnor(o, out);
    if (*betti) return cmd_oracle_betti(o, out);
    if (*coned) return cmd_oracle_coned(o, out);
    err << "error: no subcommand\n";
    return kExitParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const UndeterminedError& e) {
    err << "undetermined: " << e.what() << "\n";
    return kExitUndetermined;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace arrsheaf
