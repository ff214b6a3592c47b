#include "linarr/report.hpp"

#include <iomanip>
#include <sstream>

namespace linarr {

namespace {

std::string quoted(const std::string& v) {
  if (!v.empty() && v.find_first_of(" \t\"=") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::hypothesis_not_met:
      return "hypothesis-not-met";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

Check& Check::fact(const std::string& key, const std::string& value) {
  facts.push_back({key, value});
  return *this;
}

Check& Check::fact(const std::string& key, long value) { return fact(key, std::to_string(value)); }

Report::Report(std::string suite, std::string target) : suite_(std::move(suite)), target_(std::move(target)) {}

Check& Report::add(std::string id, Status status, std::string detail) {
  checks_.push_back({std::move(id), status, std::move(detail), {}});
  return checks_.back();
}

Check& Report::expect(std::string id, bool ok, std::string detail) {
  return add(std::move(id), ok ? Status::pass : Status::fail, std::move(detail));
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  seconds_ += other.seconds_;
}

Status Report::overall() const {
  bool any_pass = false, any_inconclusive = false;
  for (const auto& c : checks_) {
    if (c.status == Status::fail) return Status::fail;
    if (c.status == Status::inconclusive) any_inconclusive = true;
    if (c.status == Status::pass) any_pass = true;
  }
  if (any_inconclusive) return Status::inconclusive;
  if (!any_pass && !checks_.empty()) return Status::hypothesis_not_met;
  return Status::pass;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "suite " << suite_ << " on " << target_ << ": " << to_string(overall()) << " (" << std::fixed
     << std::setprecision(3) << seconds_ << " s)\n";
  std::size_t width = 0;
  for (const auto& c : checks_) width = std::max(width, c.id.size());
  for (const auto& c : checks_) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(18) << to_string(c.status);
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
    for (const auto& f : c.facts) os << "      " << f.key << " = " << f.value << "\n";
  }
  return os.str();
}

std::string Report::records() const {
  std::ostringstream os;
  const std::string head = "suite=" + quoted(suite_) + " target=" + quoted(target_);
  os << "record=summary " << head << " status=" << to_string(overall()) << " checks=" << checks_.size() << "\n";
  for (const auto& c : checks_) {
    os << "record=check " << head << " check=" << quoted(c.id) << " status=" << to_string(c.status);
    if (!c.detail.empty()) os << " detail=" << quoted(c.detail);
    os << "\n";
    for (const auto& f : c.facts)
      os << "record=fact " << head << " check=" << quoted(c.id) << " key=" << quoted(f.key)
         << " value=" << quoted(f.value) << "\n";
  }
  return os.str();
}

}  // namespace linarr
