#include "fusionkit/ring_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fusionkit {

using ordered_json = nlohmann::ordered_json;

std::string ring_to_json(const FusionRing& r, int indent) {
  ordered_json j;
  j["rank"] = r.rank();
  j["labels"] = r.labels();
  j["unit"] = r.unit();
  j["dual"] = r.dual_map();
  auto coeffs = ordered_json::array();
  for (const auto& q : r.coeff_list()) coeffs.push_back({q[0], q[1], q[2], q[3]});
  j["coeffs"] = coeffs;
  if (!r.meta.empty()) j["meta"] = r.meta;
  return j.dump(indent);
}

FusionRing ring_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("ring JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rank") || !j.contains("unit") ||
      !j.contains("dual"))
    throw std::invalid_argument("ring JSON: missing rank/unit/dual");
  int rank = j["rank"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  std::vector<int> dual = j["dual"].get<std::vector<int>>();
  FusionRing r(rank, labels, j["unit"].get<int>(), dual);
  if (j.contains("coeffs"))
    for (const auto& q : j["coeffs"]) {
      if (!q.is_array() || q.size() != 4)
        throw std::invalid_argument("ring JSON: coeff entries must be [a,b,c,N]");
      r.set_coeff(q[0].get<int>(), q[1].get<int>(), q[2].get<int>(),
                  q[3].get<std::int64_t>());
    }
  if (j.contains("meta"))
    for (auto it = j["meta"].begin(); it != j["meta"].end(); ++it)
      r.meta[it.key()] = it.value().is_string() ? it.value().get<std::string>()
                                                : it.value().dump();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

} // namespace fusionkit
