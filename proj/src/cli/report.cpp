#include "leodyn/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "leodyn/core/errors.hpp"

namespace leodyn::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
  }
  return "info";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "info") return Status::info;
  throw ParseError("unknown verdict status \"" + s + "\"");
}

void Report::add(std::string name, Status status, std::string value) {
  if (find(name) != nullptr) throw InvalidArgument("duplicate verdict name \"" + name + "\"");
  verdicts_.push_back({std::move(name), status, std::move(value)});
}

const Verdict* Report::find(const std::string& name) const {
  auto it = std::find_if(verdicts_.begin(), verdicts_.end(), [&](const Verdict& v) { return v.name == name; });
  return it == verdicts_.end() ? nullptr : &*it;
}

bool Report::passed() const {
  return std::none_of(verdicts_.begin(), verdicts_.end(), [](const Verdict& v) { return v.status == Status::fail; });
}

json Report::to_json() const {
  json verdicts = json::array();
  for (const Verdict& v : verdicts_) verdicts.push_back({{"name", v.name}, {"status", to_string(v.status)}, {"value", v.value}});
  return {{"command", command_},
          {"inputs", inputs_},
          {"verdicts", std::move(verdicts)},
          {"artifacts", artifacts_},
          {"passed", passed()}};
}

Report Report::from_json(const json& j) {
  try {
    Report r(j.at("command").get<std::string>(), j.at("inputs"));
    for (const json& v : j.at("verdicts")) {
      r.add(v.at("name").get<std::string>(), parse_status(v.at("status").get<std::string>()),
            v.at("value").get<std::string>());
    }
    for (const json& a : j.at("artifacts")) r.add_artifact(a.get<std::string>());
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string Report::human() const {
  std::ostringstream out;
  out << "leodyn " << command_ << "\n";
  for (const auto& [key, value] : inputs_.items()) {
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const Verdict& v : verdicts_) {
    const char* tag = v.status == Status::pass ? "[PASS]" : v.status == Status::fail ? "[FAIL]" : "[INFO]";
    out << tag << " " << v.name;
    if (!v.value.empty()) out << ": " << v.value;
    out << "\n";
  }
  for (const std::string& a : artifacts_) out << "wrote " << a << "\n";
  out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace leodyn::cli
