#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace twlab {

// One verified case: a named law or scenario, the input it ran on, and the
// expected/actual displays. `pass` is authoritative; expected/got are for humans.
struct Check {
  std::string name;
  std::string input;
  std::string expected;
  std::string got;
  bool pass = false;
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  // convenience: pass iff the two displays agree
  void add_eq(std::string name, std::string input, std::string expected, std::string got) {
    bool ok = expected == got;
    checks_.push_back({std::move(name), std::move(input), std::move(expected), std::move(got), ok});
  }
  void merge(const Report& o) {
    checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end());
  }

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t total() const { return checks_.size(); }
  std::size_t passed() const;
  std::size_t failed() const { return total() - passed(); }
  bool all_pass() const { return passed() == total(); }

  // JSON array of {<case_key>, <input_key>, expected, got, pass} objects,
  // insertion-ordered; keys inside each object are alphabetical.
  std::string to_json_array(const std::string& case_key = "law",
                            const std::string& input_key = "input") const;

 private:
  std::vector<Check> checks_;
};

}  // namespace twlab
