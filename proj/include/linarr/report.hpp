#pragma once

// Verification reports shared by every check in the library.

#include <string>
#include <vector>

namespace linarr {

enum class Status { pass, fail, hypothesis_not_met, inconclusive };

std::string to_string(Status s);

struct Fact {
  std::string key;
  std::string value;
};

struct Check {
  std::string id;
  Status status = Status::pass;
  std::string detail;
  std::vector<Fact> facts;

  Check& fact(const std::string& key, const std::string& value);
  Check& fact(const std::string& key, long value);
};

class Report {
 public:
  Report(std::string suite, std::string target);

  const std::string& suite() const { return suite_; }
  const std::string& target() const { return target_; }
  const std::vector<Check>& checks() const { return checks_; }

  Check& add(std::string id, Status status, std::string detail = "");
  /// Adds a pass or fail check depending on `ok`.
  Check& expect(std::string id, bool ok, std::string detail = "");
  /// Appends the checks of another report, prefixing nothing.
  void merge(const Report& other);

  void set_target(std::string t) { target_ = std::move(t); }
  void set_seconds(double s) { seconds_ = s; }
  double seconds() const { return seconds_; }

  /// fail if any check failed; otherwise inconclusive if any was; otherwise
  /// hypothesis_not_met when no check passed; otherwise pass.
  Status overall() const;
  bool ok() const { return overall() != Status::fail; }

  std::string text() const;
  /// One `key=value` line per check and per fact.
  std::string records() const;

 private:
  std::string suite_;
  std::string target_;
  std::vector<Check> checks_;
  double seconds_ = 0;
};

}  // namespace linarr
