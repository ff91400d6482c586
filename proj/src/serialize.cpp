#include "grc/serialize.hpp"

#include <cstdio>

#include "grc/error.hpp"

namespace grc {

namespace {

const Json& expect(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(Errc::ParseError, where + ": missing key '" + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(Errc::ParseError, where + ": expected an array of labels");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail(Errc::ParseError, where + ": labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) fail(Errc::ParseError, "rationals must be strings like \"1/2\"");
  return rat_from_string(j.get<std::string>());
}

Json dist_to_json(const Subdist& p) {
  Json out = Json::object();
  for (const auto& [i, value] : p.entries()) out[p.space().label(i)] = rat_to_json(value);
  return out;
}

Subdist dist_from_json(const Space& space, const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "a distribution must be an object");
  std::vector<std::pair<std::string, Rat>> entries;
  for (const auto& [key, value] : j.items()) entries.emplace_back(key, rat_from_json(value));
  return Subdist::make(space, entries);
}

Json matrix_to_json(const Matrix& m) {
  Json out;
  out["dom"] = m.dom().labels();
  out["cod"] = m.cod().labels();
  Json rows = Json::object();
  for (int i = 0; i < m.dom().size(); ++i) {
    if (m.row(i).empty()) continue;
    rows[m.dom().label(i)] = dist_to_json(m.row_dist(i));
  }
  out["rows"] = std::move(rows);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  Space dom = Space::of(string_list(expect(j, "dom", "matrix"), "matrix dom"));
  Space cod = Space::of(string_list(expect(j, "cod", "matrix"), "matrix cod"));
  const Json& rows = expect(j, "rows", "matrix");
  if (!rows.is_object()) fail(Errc::ParseError, "matrix rows must be an object");
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>> entries;
  for (const auto& [label, row] : rows.items()) {
    if (!row.is_object()) fail(Errc::ParseError, "row '" + label + "' must be an object");
    std::vector<std::pair<std::string, Rat>> sparse;
    for (const auto& [y, value] : row.items()) sparse.emplace_back(y, rat_from_json(value));
    entries.emplace_back(label, std::move(sparse));
  }
  return Matrix::make(std::move(dom), std::move(cod), entries);
}

Json pset_to_json(const PSet& s) {
  Json out;
  out["elements"] = s.elements().labels();
  Json partition = Json::array();
  for (int b = 0; b < s.block_count(); ++b) {
    Json block = Json::array();
    for (int i : s.block_members(b)) block.push_back(s.elements().label(i));
    partition.push_back(std::move(block));
  }
  out["partition"] = std::move(partition);
  return out;
}

PSet pset_from_json(const Json& j) {
  Space elements = Space::of(string_list(expect(j, "elements", "pset"), "pset elements"));
  const Json& partition = expect(j, "partition", "pset");
  if (!partition.is_array()) fail(Errc::ParseError, "partition must be an array of blocks");
  std::vector<std::vector<std::string>> blocks;
  for (const auto& block : partition) blocks.push_back(string_list(block, "partition block"));
  return PSet::make(std::move(elements), blocks);
}

std::string format_bits(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

Json ledger_to_json(const EntropyLedger& l) {
  Json out;
  out["h_phy"] = format_bits(l.h_phy);
  out["h_comp"] = format_bits(l.h_comp);
  out["h_nc"] = format_bits(l.h_nc);
  return out;
}

}  // namespace grc
