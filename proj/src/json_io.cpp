#include "simpsep/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace simpsep {

namespace {

std::string images_key(const std::vector<int>& images) {
  std::ostringstream os;
  for (std::size_t i = 0; i < images.size(); ++i) os << (i ? "," : "") << images[i];
  return os.str();
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, sep)) out.push_back(std::stoi(part));
  return out;
}

}  // namespace

Json to_json(const DeltaMor& f) {
  return Json{{"dom", f.dom}, {"cod", f.cod}, {"images", f.images}};
}

DeltaMor delta_from_json(const Json& j) {
  return DeltaMor(j.at("dom").get<int>(), j.at("cod").get<int>(),
                  j.at("images").get<std::vector<int>>());
}

Json to_json(const GammaMor& f) {
  return Json{{"dom", f.dom}, {"cod", f.cod}, {"blocks", f.blocks}};
}

GammaMor gamma_from_json(const Json& j) {
  return GammaMor(j.at("dom").get<int>(), j.at("cod").get<int>(),
                  j.at("blocks").get<std::vector<std::vector<int>>>());
}

Json to_json(const BaryPoint& t) {
  Json arr = Json::array();
  for (const Rat& c : t.coords) arr.push_back(rat_str(c));
  return arr;
}

BaryPoint bary_from_json(const Json& j) {
  std::vector<Rat> coords;
  for (const auto& s : j) coords.push_back(parse_rat(s.get<std::string>()));
  return BaryPoint(std::move(coords));
}

Json to_json(const IntervalFamily& f) {
  Json bounds = Json::object();
  for (const auto& [key, ab] : f.bounds) {
    bounds[std::to_string(key.first) + "," + std::to_string(key.second)] =
        Json::array({rat_str(ab.first), rat_str(ab.second)});
  }
  return Json{{"n", f.n}, {"bounds", std::move(bounds)}};
}

IntervalFamily intervals_from_json(const Json& j) {
  std::map<RatioKey, std::pair<Rat, Rat>> bounds;
  for (const auto& [key, val] : j.at("bounds").items()) {
    const auto ij = parse_int_list(key, ',');
    if (ij.size() != 2) throw std::invalid_argument("bad interval key: " + key);
    bounds[{ij[0], ij[1]}] = {parse_rat(val.at(0).get<std::string>()),
                              parse_rat(val.at(1).get<std::string>())};
  }
  return IntervalFamily(j.at("n").get<int>(), std::move(bounds));
}

Json to_json(const FiniteSSet& S) {
  Json cells = Json::object();
  Json faces = Json::object();
  for (int p = 0; p <= S.dim(); ++p) {
    Json ids = Json::array();
    for (int c = 0; c < S.cell_count(p); ++c) {
      const CellRef ref{p, c};
      ids.push_back(S.cell_id(ref));
      if (p == 0) continue;
      Json entries = Json::array();
      for (int i = 0; i <= p; ++i) {
        const auto& e = S.face(ref, i);
        entries.push_back(Json{{"epi", to_json(e.epi)}, {"cell", S.cell_id(e.cell)}});
      }
      faces[S.cell_id(ref)] = std::move(entries);
    }
    cells[std::to_string(p)] = std::move(ids);
  }
  return Json{{"dim", S.dim()}, {"cells", std::move(cells)}, {"faces", std::move(faces)}};
}

FiniteSSet sset_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 0) throw std::invalid_argument("sset: negative dim");
  std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(dim) + 1);
  const auto& cells = j.at("cells");
  for (int p = 0; p <= dim; ++p) {
    const auto key = std::to_string(p);
    if (cells.contains(key))
      ids[static_cast<std::size_t>(p)] = cells.at(key).get<std::vector<std::string>>();
  }
  // Cell ids must be resolvable before faces; build an index first.
  std::map<std::string, CellRef> index;
  for (int p = 0; p <= dim; ++p)
    for (std::size_t c = 0; c < ids[static_cast<std::size_t>(p)].size(); ++c) {
      if (!index.emplace(ids[static_cast<std::size_t>(p)][c], CellRef{p, static_cast<int>(c)}).second)
        throw std::invalid_argument("sset: duplicate cell id " + ids[static_cast<std::size_t>(p)][c]);
    }
  std::vector<std::vector<std::vector<FiniteSSet::FaceEntry>>> faces(
      static_cast<std::size_t>(dim) + 1);
  const Json empty = Json::object();
  const Json& face_doc = j.contains("faces") ? j.at("faces") : empty;
  for (int p = 0; p <= dim; ++p) {
    faces[static_cast<std::size_t>(p)].resize(ids[static_cast<std::size_t>(p)].size());
    for (std::size_t c = 0; c < ids[static_cast<std::size_t>(p)].size(); ++c) {
      if (p == 0) continue;
      const std::string& id = ids[static_cast<std::size_t>(p)][c];
      if (!face_doc.contains(id))
        throw std::invalid_argument("sset: missing face list for " + id);
      for (const auto& entry : face_doc.at(id)) {
        const std::string target = entry.at("cell").get<std::string>();
        const auto it = index.find(target);
        if (it == index.end())
          throw std::invalid_argument("sset: face of " + id + " references missing cell " + target);
        faces[static_cast<std::size_t>(p)][c].push_back(
            {delta_from_json(entry.at("epi")), it->second});
      }
    }
  }
  return FiniteSSet(dim, std::move(ids), std::move(faces));
}

Json family_to_json(const AdmissibleFamily& F) {
  Json table = Json::object();
  for (const auto& [sigma, entries] : F.table) {
    Json arr = Json::array();
    for (const Simplex& z : entries) arr.push_back(simplex_id(*F.sset, z));
    table[images_key(sigma)] = std::move(arr);
  }
  return Json{{"x", simplex_id(*F.sset, F.x)}, {"n", F.n}, {"N", F.N},
              {"table", std::move(table)}};
}

AdmissibleFamily family_from_json(const FiniteSSet& S, const Json& j) {
  AdmissibleFamily F;
  F.sset = &S;
  F.x = parse_simplex_id(S, j.at("x").get<std::string>());
  F.n = j.at("n").get<int>();
  F.N = j.at("N").get<int>();
  for (const auto& [key, entries] : j.at("table").items()) {
    const auto images = parse_int_list(key, ',');
    DeltaMor sigma(static_cast<int>(images.size()) - 1, F.n, images);
    if (!is_epi(sigma))
      throw std::invalid_argument("family: table key is not an epi: " + key);
    std::vector<Simplex> us;
    for (const auto& id : entries) us.push_back(parse_simplex_id(S, id.get<std::string>()));
    std::sort(us.begin(), us.end());
    F.table[images] = std::move(us);
  }
  return F;
}

Json to_json(const SeparationCertificate& cert) {
  const FiniteSSet& S = *cert.sset;
  Json evidence = Json::array();
  for (const EvidenceEntry& e : cert.evidence) {
    evidence.push_back(Json{
        {"k", e.k},
        {"f", e.f.blocks},
        {"g", e.g.blocks},
        {"f_onto", e.f_onto},
        {"g_onto", e.g_onto},
        {"kind", e.kind == EvidenceEntry::Kind::set_disjoint ? "set-disjoint" : "lp-infeasible"},
    });
  }
  Json points{
      {"p1", Json{{"cell", S.cell_id(cert.x.cell)}, {"coords", to_json(cert.alpha)}}},
      {"p2", Json{{"cell", S.cell_id(cert.y.cell)}, {"coords", to_json(cert.beta)}}},
  };
  Json j{
      {"version", 1},
      {"branch", cert.branch},
      {"n", cert.n},
      {"m", cert.m},
      {"N", cert.N},
      {"kmax", cert.kmax},
      {"eta", rat_str(cert.eta)},
      {"swapped", cert.swapped},
      {"points", std::move(points)},
      {"families", Json{{"U", family_to_json(cert.fam_u)}, {"V", family_to_json(cert.fam_v)}}},
      {"intervals", Json{{"I", to_json(cert.int_i)}, {"J", to_json(cert.int_j)}}},
      {"evidence", std::move(evidence)},
      {"sset", to_json(S)},
  };
  if (cert.branch == "same-cell")
    j["ratio_pair"] = Json::array({cert.ratio_k, cert.ratio_l});
  return j;
}

SeparationCertificate certificate_from_json(const FiniteSSet& S, const Json& j) {
  if (j.at("version").get<int>() != 1)
    throw std::invalid_argument("certificate: unsupported version");
  SeparationCertificate cert;
  cert.sset = &S;
  cert.branch = j.at("branch").get<std::string>();
  cert.n = j.at("n").get<int>();
  cert.m = j.at("m").get<int>();
  cert.N = j.at("N").get<int>();
  cert.kmax = j.at("kmax").get<int>();
  cert.eta = parse_rat(j.at("eta").get<std::string>());
  cert.swapped = j.at("swapped").get<bool>();
  if (j.contains("ratio_pair")) {
    cert.ratio_k = j.at("ratio_pair").at(0).get<int>();
    cert.ratio_l = j.at("ratio_pair").at(1).get<int>();
  }
  const auto& points = j.at("points");
  cert.x = cell_simplex(S, S.cell_by_id(points.at("p1").at("cell").get<std::string>()));
  cert.alpha = bary_from_json(points.at("p1").at("coords"));
  cert.y = cell_simplex(S, S.cell_by_id(points.at("p2").at("cell").get<std::string>()));
  cert.beta = bary_from_json(points.at("p2").at("coords"));
  cert.fam_u = family_from_json(S, j.at("families").at("U"));
  cert.fam_v = family_from_json(S, j.at("families").at("V"));
  cert.int_i = intervals_from_json(j.at("intervals").at("I"));
  cert.int_j = intervals_from_json(j.at("intervals").at("J"));
  for (const auto& e : j.at("evidence")) {
    EvidenceEntry entry;
    entry.k = e.at("k").get<int>();
    entry.f = GammaMor(cert.n, entry.k, e.at("f").get<std::vector<std::vector<int>>>());
    entry.g = GammaMor(cert.m, entry.k, e.at("g").get<std::vector<std::vector<int>>>());
    entry.f_onto = e.at("f_onto").get<bool>();
    entry.g_onto = e.at("g_onto").get<bool>();
    const auto kind = e.at("kind").get<std::string>();
    if (kind == "set-disjoint") entry.kind = EvidenceEntry::Kind::set_disjoint;
    else if (kind == "lp-infeasible") entry.kind = EvidenceEntry::Kind::lp_infeasible;
    else throw std::invalid_argument("certificate: unknown evidence kind " + kind);
    cert.evidence.push_back(std::move(entry));
  }
  return cert;
}

}  // namespace simpsep
