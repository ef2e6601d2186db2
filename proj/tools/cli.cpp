#include "cli.hpp"
#include <algorithm>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jslat/builtin.hpp"
#include "jslat/distributivity.hpp"
#include "jslat/dlat.hpp"
#include "jslat/io.hpp"
#include "jslat/pierce.hpp"
#include "jslat/search.hpp"
#include "jslat/spectrum.hpp"
#include "jslat/verify.hpp"

namespace jslat::cli {

namespace {

using nlohmann::json;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error: return 3;
    case Errc::size_guard: return 4;
    default: return 2;
  }
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

int cmd_analyze(const std::string& path, bool as_json, bool with_dlat,
                std::ostream& out) {
  JoinSemilattice L = load_structure_file(path);
  AnalysisReport r = analyze(L, with_dlat);
  if (as_json)
    out << report_to_json_text(r) << "\n";
  else
    out << report_to_text(r);
  return 0;
}

int cmd_pierce(const std::string& path, bool as_json, std::ostream& out) {
  JoinSemilattice L = load_structure_file(path);
  const ElemSet one = ElemSet::single(L.top());
  if (as_json) {
    json rows = json::array();
    for (Elem a = 0; a < L.size(); ++a) {
      ElemSet sc = supercomplements(L, one, a);
      json names = json::array();
      for (int x = sc.first(); x >= 0; x = sc.next(x))
        names.push_back(L.name(static_cast<Elem>(x)));
      rows.push_back({{"a", L.name(a)}, {"set", names}});
    }
    out << json{{"supercomplements", rows}}.dump(2) << "\n";
    return 0;
  }
  // the table layout: one column per element
  std::vector<std::string> row1, row2;
  for (Elem a = 0; a < L.size(); ++a) {
    row1.push_back(L.name(a));
    ElemSet sc = supercomplements(L, one, a);
    row2.push_back(sc == L.all() ? "L" : render_subset(L, sc));
  }
  std::vector<std::size_t> widths(row1.size());
  for (std::size_t i = 0; i < row1.size(); ++i)
    widths[i] = std::max(row1[i].size(), row2[i].size());
  out << "If a =    ";
  for (std::size_t i = 0; i < row1.size(); ++i)
    out << "| " << pad(row1[i], widths[i]) << " ";
  out << "\n(1:a) =   ";
  for (std::size_t i = 0; i < row2.size(); ++i)
    out << "| " << pad(row2[i], widths[i]) << " ";
  out << "\n";
  return 0;
}

int cmd_spectrum(const std::string& path, bool as_json, std::ostream& out) {
  JoinSemilattice L = load_structure_file(path);
  MaxSpectrum s = spec_max(L);
  if (as_json) {
    json j;
    json pts = json::array();
    for (const ElemSet& p : s.points) {
      json names = json::array();
      for (int x = p.first(); x >= 0; x = p.next(x))
        names.push_back(L.name(static_cast<Elem>(x)));
      pts.push_back(names);
    }
    j["points"] = pts;
    json coz = json::array();
    for (Elem a = 0; a < L.size(); ++a)
      coz.push_back({{"a", L.name(a)}, {"points", s.coz[a].members()}});
    j["coz"] = coz;
    j["injective"] = s.injective;
    j["t1"] = is_t1_topology(s.topology);
    j["discrete"] = is_discrete(s.topology);
    json opens = json::array();
    for (const ElemSet& u : s.topology.opens) opens.push_back(u.members());
    j["topology"] = opens;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "points (" << s.npoints() << "):\n";
  for (int i = 0; i < s.npoints(); ++i)
    out << "  m" << i << " = " << render_subset(L, s.points[i]) << "\n";
  out << "coz table:\n";
  for (Elem a = 0; a < L.size(); ++a) {
    out << "  coz " << L.name(a) << " = {";
    bool first = true;
    for (int x = s.coz[a].first(); x >= 0; x = s.coz[a].next(x)) {
      if (!first) out << ",";
      out << "m" << x;
      first = false;
    }
    out << "}\n";
  }
  out << "opens: " << s.topology.opens.size()
      << (is_t1_topology(s.topology) ? ", T1" : ", not T1")
      << (is_discrete(s.topology) ? ", discrete" : "") << "\n"
      << "coz injective (conjunctive): " << (s.injective ? "yes" : "no")
      << "\n";
  return 0;
}

void print_hasse(const GeneratedLattice& g, const std::string& label,
                 std::ostream& out) {
  out << "hasse " << label << " (" << g.size() << " nodes):\n";
  // cover pairs: u < v with nothing strictly between
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v) {
      if (u == v || !g.elements[u].subset_of(g.elements[v])) continue;
      bool cover = true;
      for (int w = 0; w < g.size() && cover; ++w)
        if (w != u && w != v && g.elements[u].subset_of(g.elements[w]) &&
            g.elements[w].subset_of(g.elements[v]))
          cover = false;
      if (cover)
        out << "  " << render_point_set(g.universe_names, g.elements[u])
            << " -> " << render_point_set(g.universe_names, g.elements[v])
            << "\n";
    }
}

int cmd_dlat(const std::string& path, bool as_json, bool hasse,
             std::ostream& out) {
  JoinSemilattice L = load_structure_file(path);
  DlatR1Result r = dlat_r1_isomorphism(L);
  if (as_json) {
    json j;
    j["dl_size"] = r.dl_size;
    j["wl_size"] = r.wl_size;
    j["wbar_injective"] = r.w.injective;
    j["wbar_surjective"] = r.w.surjective;
    j["r1_isomorphism"] = r.isomorphism;
    if (hasse) {
      auto edges = [](const GeneratedLattice& g) {
        json e = json::array();
        for (int u = 0; u < g.size(); ++u)
          for (int v = 0; v < g.size(); ++v) {
            if (u == v || !g.elements[u].subset_of(g.elements[v])) continue;
            bool cover = true;
            for (int w = 0; w < g.size() && cover; ++w)
              if (w != u && w != v &&
                  g.elements[u].subset_of(g.elements[w]) &&
                  g.elements[w].subset_of(g.elements[v]))
                cover = false;
            if (cover) e.push_back({u, v});
          }
        return e;
      };
      j["dl_hasse"] = edges(r.w.dl);
      j["wl_hasse"] = edges(r.w.wl);
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "|dL| = " << r.dl_size << "\n|wL| = " << r.wl_size << "\n"
      << "w-bar injective:  " << (r.w.injective ? "yes" : "no") << "\n"
      << "w-bar surjective: " << (r.w.surjective ? "yes" : "no") << "\n"
      << "dL/R^1 isomorphic to wL: " << (r.isomorphism ? "yes" : "no")
      << "\n";
  if (hasse) {
    print_hasse(r.w.dl, "dL", out);
    print_hasse(r.w.wl, "wL", out);
  }
  return 0;
}

void print_rows(const std::vector<CheckRow>& rows, std::ostream& out) {
  for (const CheckRow& r : rows) {
    const char* tag = r.skipped ? "[SKIP]" : (r.pass ? "[PASS]" : "[FAIL]");
    out << tag << " " << pad(r.suite, 16) << r.check;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
  }
}

int cmd_verify(const std::optional<std::string>& path, bool builtin_corpus,
               const std::string& suite, std::ostream& out) {
  std::vector<CheckRow> rows;
  if (builtin_corpus) {
    for (const auto& [name, L] : builtin::corpus()) {
      std::vector<CheckRow> sub = verify_suite(suite, L);
      for (CheckRow& r : sub) {
        r.check = name + ": " + r.check;
        rows.push_back(std::move(r));
      }
    }
    if (suite == "all")
      for (CheckRow& r : verify_regressions()) rows.push_back(std::move(r));
  } else {
    JoinSemilattice L = load_structure_file(*path);
    rows = verify_suite(suite, L);
  }
  print_rows(rows, out);
  const bool ok = all_passed(rows);
  long passed = 0, failed = 0, skipped = 0;
  for (const CheckRow& r : rows) {
    if (r.skipped) ++skipped;
    else if (r.pass) ++passed;
    else ++failed;
  }
  out << passed << " passed, " << failed << " failed, " << skipped
      << " skipped\n";
  return ok ? 0 : 1;
}

json report_json(const ConjectureReport& rep) {
  json j;
  j["predicate"] = rep.predicate;
  j["description"] = rep.description;
  j["seed"] = rep.seed;
  j["max_size"] = rep.max_size;
  json census = json::array();
  for (const SizeCensus& c : rep.census)
    census.push_back({{"size", c.size},
                      {"tested", c.tested},
                      {"satisfied", c.satisfied},
                      {"violated", c.violated}});
  j["census"] = census;
  json wit = json::array();
  for (const WitnessRecord& w : rep.witnesses)
    wit.push_back({{"size", w.size},
                   {"document", json::parse(w.document_json)},
                   {"detail", w.detail}});
  j["witnesses"] = wit;
  j["notes"] = rep.notes;
  return j;
}

int cmd_search(const std::string& predicate, int max_size,
               std::uint64_t seed, const std::optional<std::string>& out_dir,
               std::ostream& out) {
  ConjectureReport rep = run_conjecture(predicate, max_size, seed);
  json j = report_json(rep);
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    std::ofstream rf(*out_dir + "/report.json");
    rf << j.dump(2) << "\n";
    int k = 0;
    for (const WitnessRecord& w : rep.witnesses) {
      std::ostringstream name;
      name << *out_dir << "/witness_" << std::setw(3) << std::setfill('0')
           << k++ << ".json";
      std::ofstream wf(name.str());
      wf << w.document_json << "\n";
    }
    out << "report and " << rep.witnesses.size() << " witness file(s) in "
        << *out_dir << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite join-semilattice analysis"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  bool no_dlat = false;
  bool hasse = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "full structure report");
  analyze_cmd->add_option("file", path)->required();
  analyze_cmd->add_flag("--json", as_json);
  analyze_cmd->add_flag("--no-dlat", no_dlat, "skip the dL/wL summary");

  auto* pierce_cmd =
      app.add_subcommand("pierce", "supercomplement table of the top");
  pierce_cmd->add_option("file", path)->required();
  pierce_cmd->add_flag("--json", as_json);

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "maximal-ideal spectrum");
  spectrum_cmd->add_option("file", path)->required();
  spectrum_cmd->add_flag("--json", as_json);

  auto* dlat_cmd = app.add_subcommand("dlat", "free distributive lattice");
  dlat_cmd->add_option("file", path)->required();
  dlat_cmd->add_flag("--json", as_json);
  dlat_cmd->add_flag("--hasse", hasse, "emit Hasse edge lists");

  std::string suite = "all";
  bool use_builtin = false;
  auto* verify_cmd = app.add_subcommand("verify", "run theorem suites");
  verify_cmd->add_option("file", path);
  verify_cmd->add_option("suite", suite)
      ->check(CLI::IsMember({"pierce", "spectrum", "distributivity", "dlat",
                             "all"}));
  verify_cmd->add_flag("--builtin", use_builtin, "use the built-in corpus");

  std::string predicate;
  int max_size = 6;
  std::uint64_t seed = 0;
  std::string out_dir;
  auto* search_cmd = app.add_subcommand("search", "conjecture harness");
  search_cmd->add_option("--predicate", predicate)->required();
  search_cmd->add_option("--max-size", max_size);
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--out", out_dir);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 3;
  }

  try {
    if (analyze_cmd->parsed())
      return cmd_analyze(path, as_json, !no_dlat, out);
    if (pierce_cmd->parsed()) return cmd_pierce(path, as_json, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(path, as_json, out);
    if (dlat_cmd->parsed()) return cmd_dlat(path, as_json, hasse, out);
    if (verify_cmd->parsed()) {
      // with --builtin the first positional is the suite name
      static const std::vector<std::string> suites = {
          "pierce", "spectrum", "distributivity", "dlat", "all"};
      if (use_builtin && !path.empty()) {
        if (std::find(suites.begin(), suites.end(), path) != suites.end() &&
            suite == "all") {
          suite = path;
          path.clear();
        } else {
          err << "error: --builtin takes a suite, not a file\n";
          return 3;
        }
      }
      if (!use_builtin && path.empty()) {
        err << "error: verify needs a file or --builtin\n";
        return 3;
      }
      return cmd_verify(use_builtin ? std::nullopt
                                    : std::optional<std::string>(path),
                        use_builtin, suite, out);
    }
    if (search_cmd->parsed())
      return cmd_search(predicate, max_size, seed,
                        out_dir.empty() ? std::nullopt
                                        : std::optional<std::string>(out_dir),
                        out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  err << "error: no subcommand\n";
  return 3;
}

}  // namespace jslat::cli
