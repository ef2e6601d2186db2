#include "jslat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jslat/distributivity.hpp"
#include "jslat/dlat.hpp"
#include "jslat/pierce.hpp"
#include "jslat/spectrum.hpp"

namespace jslat {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "jslat.analysis.v1";

json must_get(const json& j, const char* key) {
  if (!j.contains(key))
    raise(Errc::parse_error, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::vector<std::string> name_list(const JoinSemilattice& L,
                                   const ElemSet& s) {
  std::vector<std::string> out;
  for (int x = s.first(); x >= 0; x = s.next(x))
    out.push_back(L.name(static_cast<Elem>(x)));
  return out;
}

}  // namespace

JoinSemilattice parse_structure_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    raise(Errc::parse_error, "invalid JSON in structure document");
  if (!j.is_object()) raise(Errc::parse_error, "document is not an object");
  std::string kind;
  try {
    kind = must_get(j, "kind").get<std::string>();
  } catch (const json::exception& e) {
    raise(Errc::parse_error, e.what());
  }

  try {
    if (kind == "join_table") {
      auto names = must_get(j, "names").get<std::vector<std::string>>();
      auto raw = must_get(j, "table")
                     .get<std::vector<std::vector<std::int64_t>>>();
      std::vector<std::vector<Elem>> table;
      for (const auto& row : raw) {
        std::vector<Elem> r;
        for (std::int64_t v : row) {
          if (v < 0 || v > 0xffff)
            raise(Errc::range_error, "join table entry out of range");
          r.push_back(static_cast<Elem>(v));
        }
        table.push_back(std::move(r));
      }
      return JoinSemilattice::from_join_table(std::move(names), table);
    }
    if (kind == "set_family") {
      auto universe = must_get(j, "universe").get<std::vector<std::string>>();
      auto raw = must_get(j, "sets")
                     .get<std::vector<std::vector<std::string>>>();
      SetFamily f;
      f.point_names = universe;
      for (const auto& row : raw) {
        ElemSet s;
        for (const std::string& p : row) {
          auto it = std::find(universe.begin(), universe.end(), p);
          if (it == universe.end())
            raise(Errc::parse_error, "unknown point '" + p + "'");
          s.set(static_cast<int>(it - universe.begin()));
        }
        f.sets.push_back(s);
      }
      return JoinSemilattice::from_set_family(f);
    }
  } catch (const json::exception& e) {
    raise(Errc::parse_error, e.what());
  }
  raise(Errc::parse_error, "unknown document kind '" + kind + "'");
}

JoinSemilattice load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure_text(buf.str());
}

std::string structure_to_json_text(const JoinSemilattice& L) {
  json j;
  if (L.origin()) {
    const SetFamily& f = *L.origin();
    j["kind"] = "set_family";
    j["universe"] = f.point_names;
    json sets = json::array();
    for (const ElemSet& s : f.sets) {
      json row = json::array();
      for (int x = s.first(); x >= 0; x = s.next(x))
        row.push_back(f.point_names[x]);
      sets.push_back(row);
    }
    j["sets"] = sets;
  } else {
    j["kind"] = "join_table";
    j["names"] = L.names();
    json table = json::array();
    for (Elem a = 0; a < L.size(); ++a) {
      json row = json::array();
      for (Elem b = 0; b < L.size(); ++b) row.push_back(L.join(a, b));
      table.push_back(row);
    }
    j["table"] = table;
  }
  return j.dump(2);
}

AnalysisReport analyze(const JoinSemilattice& L, bool with_dlat) {
  AnalysisReport r;
  r.size = L.size();
  r.names = L.names();
  r.top = L.name(L.top());
  if (L.bottom()) r.bottom = L.name(*L.bottom());
  r.is_lattice = meet_structure(L).is_lattice();

  r.conjunctive = is_conjunctive(L);
  r.ideally_conjunctive = is_ideally_conjunctive(L).overall;
  DistributivityVerdict d = is_distributive(L);
  r.distributive = d.distributive;
  if (d.witness)
    r.distributivity_witness = std::vector<std::string>{
        L.name((*d.witness)[0]), L.name((*d.witness)[1]),
        L.name((*d.witness)[2])};

  IdealLattice idl = ideal_lattice(L);
  for (const ElemSet& I : idl.ideals) r.ideals.push_back(name_list(L, I));
  for (const ElemSet& p : prime_ideals(L))
    r.prime_ideals.push_back(name_list(L, p));
  for (const ElemSet& m : maximal_ideals(L))
    r.maximal_ideals.push_back(name_list(L, m));

  const ElemSet one = ElemSet::single(L.top());
  for (Elem a = 0; a < L.size(); ++a)
    r.supercomplements.push_back(
        {L.name(a), name_list(L, supercomplements(L, one, a))});

  if (auto w = max_not_prime_witness(L)) r.max_not_prime = name_list(L, *w);

  if (L.size() >= 2) {
    MaxSpectrum s = spec_max(L);
    SpectrumSummary ss;
    for (const ElemSet& p : s.points) ss.points.push_back(name_list(L, p));
    for (Elem a = 0; a < L.size(); ++a) {
      std::vector<int> pts;
      for (int i = s.coz[a].first(); i >= 0; i = s.coz[a].next(i))
        pts.push_back(i);
      ss.coz.push_back(pts);
    }
    ss.open_count = static_cast<long>(s.topology.opens.size());
    ss.t1 = is_t1_topology(s.topology);
    ss.discrete = is_discrete(s.topology);
    r.spectrum = std::move(ss);
  }

  if (with_dlat && r.conjunctive && L.size() >= 2) {
    DlatR1Result dr = dlat_r1_isomorphism(L);
    DlatSummary ds;
    ds.dl_size = dr.dl_size;
    ds.wl_size = dr.wl_size;
    ds.wbar_surjective = dr.w.surjective;
    ds.wbar_injective = dr.w.injective;
    ds.r1_isomorphism = dr.isomorphism;
    r.dlat = ds;
  }
  return r;
}

namespace {

json report_to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = kSchema;
  j["structure"] = {{"size", r.size},
                    {"names", r.names},
                    {"top", r.top},
                    {"is_lattice", r.is_lattice}};
  if (r.bottom) j["structure"]["bottom"] = *r.bottom;
  j["verdicts"] = {{"conjunctive", r.conjunctive},
                   {"ideally_conjunctive", r.ideally_conjunctive},
                   {"distributive", r.distributive}};
  if (r.distributivity_witness)
    j["distributivity_witness"] = *r.distributivity_witness;
  j["ideals"] = r.ideals;
  j["prime_ideals"] = r.prime_ideals;
  j["maximal_ideals"] = r.maximal_ideals;
  json sc = json::array();
  for (const SupercomplementRow& row : r.supercomplements)
    sc.push_back({{"a", row.element}, {"set", row.supercomplements}});
  j["supercomplements"] = sc;
  if (r.max_not_prime) j["max_not_prime"] = *r.max_not_prime;
  if (r.spectrum) {
    j["spectrum"] = {{"points", r.spectrum->points},
                     {"coz", r.spectrum->coz},
                     {"open_count", r.spectrum->open_count},
                     {"t1", r.spectrum->t1},
                     {"discrete", r.spectrum->discrete}};
  }
  if (r.dlat) {
    j["dlat"] = {{"dl_size", r.dlat->dl_size},
                 {"wl_size", r.dlat->wl_size},
                 {"wbar_surjective", r.dlat->wbar_surjective},
                 {"wbar_injective", r.dlat->wbar_injective},
                 {"r1_isomorphism", r.dlat->r1_isomorphism}};
  }
  return j;
}

}  // namespace

std::string report_to_json_text(const AnalysisReport& r) {
  return report_to_json(r).dump(2);
}

AnalysisReport report_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::parse_error, "invalid JSON report");
  try {
    if (must_get(j, "schema").get<std::string>() != kSchema)
      raise(Errc::parse_error, "unsupported report schema");
    AnalysisReport r;
    json s = must_get(j, "structure");
    r.size = must_get(s, "size").get<int>();
    r.names = must_get(s, "names").get<std::vector<std::string>>();
    r.top = must_get(s, "top").get<std::string>();
    if (s.contains("bottom")) r.bottom = s.at("bottom").get<std::string>();
    r.is_lattice = must_get(s, "is_lattice").get<bool>();
    json v = must_get(j, "verdicts");
    r.conjunctive = must_get(v, "conjunctive").get<bool>();
    r.ideally_conjunctive = must_get(v, "ideally_conjunctive").get<bool>();
    r.distributive = must_get(v, "distributive").get<bool>();
    if (j.contains("distributivity_witness"))
      r.distributivity_witness =
          j.at("distributivity_witness").get<std::vector<std::string>>();
    r.ideals = must_get(j, "ideals")
                   .get<std::vector<std::vector<std::string>>>();
    r.prime_ideals = must_get(j, "prime_ideals")
                         .get<std::vector<std::vector<std::string>>>();
    r.maximal_ideals = must_get(j, "maximal_ideals")
                           .get<std::vector<std::vector<std::string>>>();
    for (const json& row : must_get(j, "supercomplements")) {
      SupercomplementRow sr;
      sr.element = must_get(row, "a").get<std::string>();
      sr.supercomplements =
          must_get(row, "set").get<std::vector<std::string>>();
      r.supercomplements.push_back(std::move(sr));
    }
    if (j.contains("max_not_prime"))
      r.max_not_prime = j.at("max_not_prime").get<std::vector<std::string>>();
    if (j.contains("spectrum")) {
      json sp = j.at("spectrum");
      SpectrumSummary ss;
      ss.points = must_get(sp, "points")
                      .get<std::vector<std::vector<std::string>>>();
      ss.coz = must_get(sp, "coz").get<std::vector<std::vector<int>>>();
      ss.open_count = must_get(sp, "open_count").get<long>();
      ss.t1 = must_get(sp, "t1").get<bool>();
      ss.discrete = must_get(sp, "discrete").get<bool>();
      r.spectrum = std::move(ss);
    }
    if (j.contains("dlat")) {
      json dl = j.at("dlat");
      DlatSummary ds;
      ds.dl_size = must_get(dl, "dl_size").get<int>();
      ds.wl_size = must_get(dl, "wl_size").get<int>();
      ds.wbar_surjective = must_get(dl, "wbar_surjective").get<bool>();
      ds.wbar_injective = must_get(dl, "wbar_injective").get<bool>();
      ds.r1_isomorphism = must_get(dl, "r1_isomorphism").get<bool>();
      r.dlat = ds;
    }
    return r;
  } catch (const json::exception& e) {
    raise(Errc::parse_error, e.what());
  }
}

namespace {

std::string join_names(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i];
  }
  return out + "}";
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "structure: " << r.size << " elements, top = " << r.top;
  if (r.bottom) out << ", bottom = " << *r.bottom;
  out << (r.is_lattice ? ", lattice" : ", not a lattice") << "\n";
  out << "conjunctive:         " << (r.conjunctive ? "yes" : "no") << "\n";
  out << "ideally conjunctive: " << (r.ideally_conjunctive ? "yes" : "no")
      << "\n";
  out << "distributive:        " << (r.distributive ? "yes" : "no");
  if (r.distributivity_witness)
    out << "   (witness a=" << (*r.distributivity_witness)[0]
        << " <= " << (*r.distributivity_witness)[1] << " v "
        << (*r.distributivity_witness)[2] << ")";
  out << "\n";
  out << "ideals (" << r.ideals.size() << "):";
  for (const auto& I : r.ideals) out << " " << join_names(I);
  out << "\n";
  out << "prime ideals (" << r.prime_ideals.size() << "):";
  for (const auto& p : r.prime_ideals) out << " " << join_names(p);
  out << "\n";
  out << "maximal ideals (" << r.maximal_ideals.size() << "):";
  for (const auto& m : r.maximal_ideals) out << " " << join_names(m);
  out << "\n";
  out << "supercomplement table:\n";
  for (const auto& row : r.supercomplements) {
    bool everything =
        row.supercomplements.size() == static_cast<std::size_t>(r.size);
    out << "  (1:" << row.element << ") = "
        << (everything ? "L" : join_names(row.supercomplements)) << "\n";
  }
  if (r.max_not_prime)
    out << "non-prime maximal ideal: " << join_names(*r.max_not_prime)
        << "\n";
  if (r.spectrum) {
    out << "Spec_Max: " << r.spectrum->points.size() << " points, "
        << r.spectrum->open_count << " opens, "
        << (r.spectrum->t1 ? "T1" : "not T1")
        << (r.spectrum->discrete ? ", discrete" : "") << "\n";
  }
  if (r.dlat) {
    out << "dL: " << r.dlat->dl_size << " elements; wL: " << r.dlat->wl_size
        << "; w-bar " << (r.dlat->wbar_injective ? "injective" : "not injective")
        << (r.dlat->wbar_surjective ? ", surjective" : "")
        << "; dL/R1 = wL: " << (r.dlat->r1_isomorphism ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace jslat
