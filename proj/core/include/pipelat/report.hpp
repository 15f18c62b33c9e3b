#pragma once

#include <string>
#include <vector>

namespace pipelat {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness_json = "null";  // serialized JSON value
};

struct Report {
  std::string subject_key;  // e.g. "omega"
  std::string subject;
  std::vector<Check> checks;

  bool pass() const;
  const Check* first_failure() const;
  std::string to_json() const;
};

// JSON helpers for building witnesses without exposing the JSON library.
std::string json_string(const std::string& s);
std::string json_array(const std::vector<std::string>& items);

}  // namespace pipelat
