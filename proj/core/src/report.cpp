#include "pipelat/report.hpp"

#include "json.hpp"

namespace pipelat {

bool Report::pass() const { return first_failure() == nullptr; }

const Check* Report::first_failure() const {
  for (const Check& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j[subject_key.empty() ? "subject" : subject_key] = subject;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["witness"] = nlohmann::ordered_json::parse(c.witness_json);
    j["checks"].push_back(cj);
  }
  return j.dump();
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i];
  }
  return out + "]";
}

}  // namespace pipelat
