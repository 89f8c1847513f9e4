#include "multinet/document.hpp"

#include <fstream>
#include <sstream>

#include "multinet/error.hpp"

namespace multinet {

using nlohmann::json;

MultinetCandidate ArrangementDocument::to_candidate() const {
  try {
    std::vector<std::vector<MultiLine>> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      auto& ob = out.emplace_back();
      for (const auto& l : blocks[b]) {
        Vec3 v{parse_cyclo(l.coords[0], conductor), parse_cyclo(l.coords[1], conductor),
               parse_cyclo(l.coords[2], conductor)};
        ob.push_back({ProjLine(std::move(v)), l.mult});
      }
    }
    return MultinetCandidate(conductor, std::move(out));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

ArrangementDocument ArrangementDocument::from_candidate(const MultinetCandidate& a, std::optional<std::string> name,
                                                        json params) {
  ArrangementDocument doc;
  doc.conductor = a.conductor();
  for (const auto& block : a.blocks()) {
    auto& ob = doc.blocks.emplace_back();
    for (const auto& ml : block) ob.push_back({{ml.line[0].str(), ml.line[1].str(), ml.line[2].str()}, ml.mult});
  }
  doc.name = std::move(name);
  doc.params = std::move(params);
  return doc;
}

json ArrangementDocument::to_json() const {
  json j;
  j["conductor"] = conductor;
  j["blocks"] = json::array();
  for (const auto& block : blocks) {
    json jb = json::array();
    for (const auto& l : block) jb.push_back({{"coords", l.coords}, {"mult", l.mult}});
    j["blocks"].push_back(std::move(jb));
  }
  if (name || !params.empty()) {
    json meta = json::object();
    if (name) meta["name"] = *name;
    if (!params.empty()) meta["params"] = params;
    j["metadata"] = std::move(meta);
  }
  return j;
}

ArrangementDocument ArrangementDocument::from_json(const json& j) {
  auto fail = [](const std::string& what) -> ArrangementDocument {
    throw Error(ErrorKind::ParseError, what);
  };
  if (!j.is_object()) return fail("document must be a JSON object");
  if (!j.contains("conductor") || !j["conductor"].is_number_integer()) return fail("missing integer 'conductor'");
  if (!j.contains("blocks") || !j["blocks"].is_array()) return fail("missing array 'blocks'");

  ArrangementDocument doc;
  doc.conductor = j["conductor"].get<int>();
  if (doc.conductor < 1) return fail("conductor must be positive");
  for (const auto& jb : j["blocks"]) {
    if (!jb.is_array()) return fail("each block must be an array");
    auto& block = doc.blocks.emplace_back();
    for (const auto& jl : jb) {
      if (!jl.is_object() || !jl.contains("coords") || !jl["coords"].is_array() || jl["coords"].size() != 3)
        return fail("each line needs 'coords' with three strings");
      Line line;
      for (std::size_t i = 0; i < 3; ++i) {
        if (!jl["coords"][i].is_string()) return fail("coordinates must be coordinate-expression strings");
        line.coords[i] = jl["coords"][i].get<std::string>();
      }
      if (jl.contains("mult")) {
        if (!jl["mult"].is_number_integer() || jl["mult"].get<long>() < 1)
          return fail("'mult' must be a positive integer");
        line.mult = jl["mult"].get<int>();
      }
      block.push_back(std::move(line));
    }
  }
  if (j.contains("metadata")) {
    const auto& meta = j["metadata"];
    if (!meta.is_object()) return fail("'metadata' must be an object");
    if (meta.contains("name")) {
      if (!meta["name"].is_string()) return fail("'metadata.name' must be a string");
      doc.name = meta["name"].get<std::string>();
    }
    if (meta.contains("params")) doc.params = meta["params"];
  }
  return doc;
}

ArrangementDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IOError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return ArrangementDocument::from_json(j);
}

void save_document(const ArrangementDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IOError, "cannot write " + path);
  out << doc.to_json().dump(2) << "\n";
  if (!out) throw Error(ErrorKind::IOError, "write failed for " + path);
}

}  // namespace multinet
