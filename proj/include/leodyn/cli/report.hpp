#pragma once
// Command reports: named verdicts plus the inputs that produced them.

#include <string>
#include <vector>

#include "leodyn/cli/serialization.hpp"

namespace leodyn::cli {

enum class Status { pass, fail, info };

const char* to_string(Status s);
Status parse_status(const std::string& s);

struct Verdict {
  std::string name;
  Status status = Status::info;
  std::string value;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string command, json inputs = json::object())
      : command_(std::move(command)), inputs_(std::move(inputs)) {}

  // Throws InvalidArgument when the name is already used.
  void add(std::string name, Status status, std::string value = {});
  void check(std::string name, bool ok, std::string value = {}) {
    add(std::move(name), ok ? Status::pass : Status::fail, std::move(value));
  }
  void info(std::string name, std::string value) { add(std::move(name), Status::info, std::move(value)); }
  void add_artifact(std::string path) { artifacts_.push_back(std::move(path)); }

  const std::string& command() const { return command_; }
  const json& inputs() const { return inputs_; }
  json& inputs() { return inputs_; }
  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  const std::vector<std::string>& artifacts() const { return artifacts_; }
  const Verdict* find(const std::string& name) const;

  // No verdict failed.
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }

  json to_json() const;
  static Report from_json(const json& j);
  std::string human() const;

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::string command_;
  json inputs_ = json::object();
  std::vector<Verdict> verdicts_;
  std::vector<std::string> artifacts_;
};

}  // namespace leodyn::cli
