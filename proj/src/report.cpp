#include "kdirac/report.hpp"

#include <sstream>

namespace kdirac {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json jc = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e = {{"name", c.name},
                        {"status", c.pass ? "pass" : "fail"},
                        {"expected", c.expected},
                        {"actual", c.actual}};
    if (!c.witness.is_null()) e["witness"] = c.witness;
    jc.push_back(std::move(e));
  }
  return {{"params", params},
          {"command", command},
          {"checks", jc},
          {"elapsed_ms", elapsed_ms}};
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "command,name,status,expected,actual\n";
  auto cell = [](const nlohmann::json& j) {
    std::string s = j.is_string() ? j.get<std::string>() : j.dump();
    std::string out;
    for (char ch : s) {
      if (ch == '"') out += "\"\"";
      else out += ch;
    }
    return '"' + out + '"';
  };
  for (const auto& c : checks)
    os << command << ',' << c.name << ',' << (c.pass ? "pass" : "fail") << ','
       << cell(c.expected) << ',' << cell(c.actual) << '\n';
  return os.str();
}

}  // namespace kdirac
