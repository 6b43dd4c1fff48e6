// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command dispatch for the `matroid` tool. Exit status: 0 on success,
// 1 when a check or verification fails, 2 on malformed input.

#ifndef MATROID_TOOLS_CLI_HPP_
#define MATROID_TOOLS_CLI_HPP_

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid/all.hpp"
#include "matroid/dot.hpp"
#include "matroid/generate.hpp"
#include "matroid/json_io.hpp"

namespace matroid::cli {

using Json = nlohmann::json;

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string ReadText(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

inline Json ReadJson(const std::string& path, std::istream& in) {
  const std::string text = ReadText(path, in);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void WriteText(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

inline std::string Render(const Json& j) { return j.dump(2) + "\n"; }

inline Matroid LoadMatroid(const std::string& path, std::istream& in) {
  return Build(json_io::SpecFromJson(ReadJson(path, in)));
}

// Either --pair (an object with "m1" and "m2") or --m1 and --m2. The second
// matroid is re-indexed onto the first one's ground order.
struct PairInputs {
  std::string m1;
  std::string m2;
  std::string pair;
};

inline std::pair<Matroid, Matroid> LoadPair(const PairInputs& inputs, std::istream& in) {
  Matroid m1, m2;
  if (!inputs.pair.empty()) {
    const Json j = ReadJson(inputs.pair, in);
    if (!j.is_object() || !j.contains("m1") || !j.contains("m2")) {
      throw InputError(inputs.pair + ": expected an object with \"m1\" and \"m2\"");
    }
    m1 = Build(json_io::SpecFromJson(j.at("m1"), "m1"));
    m2 = Build(json_io::SpecFromJson(j.at("m2"), "m2"));
  } else {
    if (inputs.m1.empty() || inputs.m2.empty()) throw InputError("need --m1 and --m2, or --pair");
    m1 = LoadMatroid(inputs.m1, in);
    m2 = LoadMatroid(inputs.m2, in);
  }
  return {m1, AlignTo(m2, m1.ground())};
}

struct GraphInputs {
  std::string graph;
  std::string instance;
  std::vector<std::string> s;
  std::vector<std::string> t;
};

inline MengerInstance LoadInstance(const GraphInputs& inputs, std::istream& in) {
  if (!inputs.instance.empty()) return json_io::InstanceFromJson(ReadJson(inputs.instance, in));
  if (inputs.graph.empty()) throw InputError("need --graph with --s/--t, or --instance");
  Multigraph g = json_io::GraphFromJson(ReadJson(inputs.graph, in));
  auto s = json_io::VerticesFromLabels(g, inputs.s);
  auto t = json_io::VerticesFromLabels(g, inputs.t);
  return MakeInstance(std::move(g), std::move(s), std::move(t));
}

inline void AddPairOptions(CLI::App* cmd, PairInputs& p) {
  cmd->add_option("--m1", p.m1, "First matroid (FamilySpec JSON, '-' for stdin)");
  cmd->add_option("--m2", p.m2, "Second matroid");
  cmd->add_option("--pair", p.pair, "JSON object with \"m1\" and \"m2\"");
}

inline void AddGraphOptions(CLI::App* cmd, GraphInputs& g) {
  cmd->add_option("--graph", g.graph, "Graph JSON");
  cmd->add_option("--s", g.s, "Source-side vertices")->delimiter(',');
  cmd->add_option("--t", g.t, "Target-side vertices")->delimiter(',');
  cmd->add_option("--instance", g.instance, "Instance JSON with graph, S and T");
}

}  // namespace detail

inline int Run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Certificate-producing matroid union, intersection and Menger solver", "matroid"};
  app.require_subcommand(1, 1);
  std::string output = "-";

  std::string system_path;
  auto* check_axioms = app.add_subcommand("check-axioms", "Exhaustively test the independence axioms");
  check_axioms->add_option("--system", system_path, "Explicit set system JSON")->required();

  std::string matroid_path;
  std::vector<std::string> subset;
  bool subset_given = false;
  auto* rank = app.add_subcommand("rank", "Rank and closure of a subset");
  rank->add_option("--matroid", matroid_path, "Matroid JSON")->required();
  auto* set_opt = rank->add_option("--set", subset, "Subset (default: whole ground set)")->delimiter(',');

  detail::PairInputs pair_inputs;
  std::string dot_path;
  bool with_min_rank = false;
  auto* intersect = app.add_subcommand("intersect", "Maximum common independent set with certificate");
  detail::AddPairOptions(intersect, pair_inputs);
  intersect->add_option("--dot", dot_path, "Write the exchange digraph as DOT");
  intersect->add_flag("--min-rank", with_min_rank, "Also report the exhaustive min-rank value");

  auto* union_cmd = app.add_subcommand("union", "Maximal union of independent sets as a base pair");
  detail::AddPairOptions(union_cmd, pair_inputs);

  detail::GraphInputs graph_inputs;
  auto* menger = app.add_subcommand("menger", "Disjoint S-T paths with a one-per-path separator");
  detail::AddGraphOptions(menger, graph_inputs);
  menger->add_option("--dot", dot_path, "Write paths and separator as DOT");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Re-verify an intersection or Menger certificate");
  verify->add_option("--cert", cert_path, "Certificate JSON")->required();
  detail::AddPairOptions(verify, pair_inputs);
  detail::AddGraphOptions(verify, graph_inputs);

  int bound = kDefaultEnumerationBound;
  auto* orthogonality = app.add_subcommand("orthogonality", "Check |C ∩ C*| != 1 over all circuit/cocircuit pairs");
  orthogonality->add_option("--matroid", matroid_path, "Matroid JSON")->required();
  orthogonality->add_option("--bound", bound, "Enumeration bound on the ground-set size");

  std::uint64_t seed = 1;
  std::string kind = "pair";
  int max_ground = 8;
  int max_vertices = 10;
  auto* gen = app.add_subcommand("gen", "Emit a random instance");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--kind", kind, "pair | menger")->check(CLI::IsMember({"pair", "menger"}));
  gen->add_option("--max-ground", max_ground, "Largest ground set for pairs")->check(CLI::Range(1, 20));
  gen->add_option("--max-vertices", max_vertices, "Largest vertex count for graphs")->check(CLI::Range(2, 20));

  for (auto* cmd : {check_axioms, rank, intersect, union_cmd, menger, verify, orthogonality, gen}) {
    cmd->add_option("-o,--output", output, "Output path ('-' for stdout)");
  }

  std::vector<std::string> argv_reversed(args.rbegin(), args.rend());
  try {
    app.parse(argv_reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return kInputError;
  }
  subset_given = set_opt->count() > 0;

  try {
    if (*check_axioms) {
      const ExplicitSystem system = json_io::SystemFromJson(detail::ReadJson(system_path, io.in));
      const AxiomReport report = CheckAxioms(system);
      detail::WriteText(output, detail::Render(json_io::AxiomReportToJson(system.ground(), report)), io.out);
      return report.ok() ? kOk : kCheckFailed;
    }
    if (*rank) {
      const Matroid m = detail::LoadMatroid(matroid_path, io.in);
      const ElementSet x = subset_given ? m.ground().Parse(subset) : m.ground().All();
      Json j{{"set", json_io::SetToJson(m.ground(), x)},
             {"rank", m.Rank(x)},
             {"independent", m.IsIndependent(x)},
             {"closure", json_io::SetToJson(m.ground(), Closure(m, x))}};
      detail::WriteText(output, detail::Render(j), io.out);
      return kOk;
    }
    if (*intersect) {
      auto [m1, m2] = detail::LoadPair(pair_inputs, io.in);
      const IntersectionRun run = RunIntersection(m1, m2);
      Json j = json_io::CertificateToJson(m1.ground(), run.certificate);
      if (with_min_rank) j["min_rank"] = MinRankValue(m1, m2);
      if (!dot_path.empty()) detail::WriteText(dot_path, dot::ExchangeDigraphDot(m1.ground(), run), io.out);
      detail::WriteText(output, detail::Render(j), io.out);
      return kOk;
    }
    if (*union_cmd) {
      auto [m1, m2] = detail::LoadPair(pair_inputs, io.in);
      const PairState bases = MaximizeUnion(m1, m2);
      Json j{{"B1", json_io::SetToJson(m1.ground(), bases.first)},
             {"B2", json_io::SetToJson(m1.ground(), bases.second)},
             {"union", json_io::SetToJson(m1.ground(), bases.Union())},
             {"size", bases.Union().size()}};
      detail::WriteText(output, detail::Render(j), io.out);
      return kOk;
    }
    if (*menger) {
      const MengerInstance inst = detail::LoadInstance(graph_inputs, io.in);
      const MengerCertificate cert = SolveMenger(inst);
      if (!dot_path.empty()) detail::WriteText(dot_path, dot::MengerDot(inst, cert), io.out);
      detail::WriteText(output, detail::Render(json_io::MengerToJson(inst.graph, cert)), io.out);
      return kOk;
    }
    if (*verify) {
      const Json cert = detail::ReadJson(cert_path, io.in);
      Json result;
      if (cert.is_object() && cert.contains("paths")) {
        const MengerInstance inst = detail::LoadInstance(graph_inputs, io.in);
        const MengerCheck check = VerifyMenger(inst, json_io::MengerFromJson(inst.graph, cert));
        result = Json{{"kind", "menger"}, {"ok", check.ok}};
        if (!check.ok) result["reason"] = check.reason;
      } else {
        auto [m1, m2] = detail::LoadPair(pair_inputs, io.in);
        const CertificateCheck check =
            VerifyCertificate(m1, m2, json_io::CertificateFromJson(m1.ground(), cert));
        result = Json{{"kind", "intersection"}, {"ok", check.ok}};
        if (!check.ok) result["reason"] = check.reason;
      }
      detail::WriteText(output, detail::Render(result), io.out);
      return result["ok"].get<bool>() ? kOk : kCheckFailed;
    }
    if (*orthogonality) {
      const Matroid m = detail::LoadMatroid(matroid_path, io.in);
      const OrthogonalityReport report = CheckOrthogonality(m, bound);
      Json j{{"ok", report.ok}};
      if (report.counterexample) {
        j["circuit"] = json_io::SetToJson(m.ground(), report.counterexample->first);
        j["cocircuit"] = json_io::SetToJson(m.ground(), report.counterexample->second);
      }
      detail::WriteText(output, detail::Render(j), io.out);
      return report.ok ? kOk : kCheckFailed;
    }
    if (*gen) {
      generate::Rng rng(seed);
      Json j;
      if (kind == "pair") {
        auto [a, b] = generate::RandomPair(rng, max_ground);
        j = Json{{"m1", json_io::SpecToJson(*a)}, {"m2", json_io::SpecToJson(*b)}};
      } else {
        j = json_io::InstanceToJson(generate::RandomMengerInstance(rng, max_vertices));
      }
      detail::WriteText(output, detail::Render(j), io.out);
      return kOk;
    }
  } catch (const InputError& e) {
    io.err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    io.err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    io.err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace matroid::cli

#endif  // MATROID_TOOLS_CLI_HPP_
