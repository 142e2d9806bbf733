#include "twlab/report.hpp"

#include "json.hpp"

namespace twlab {

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (c.pass) ++n;
  return n;
}

std::string Report::to_json_array(const std::string& case_key,
                                  const std::string& input_key) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json row;
    row[case_key] = c.name;
    row[input_key] = c.input;
    row["expected"] = c.expected;
    row["got"] = c.got;
    row["pass"] = c.pass;
    arr.push_back(std::move(row));
  }
  return arr.dump();
}

}  // namespace twlab
