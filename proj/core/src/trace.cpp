#include "canon/trace.hpp"

#include "json.hpp"

namespace canon {

using nlohmann::json;

void Trace::validate() const {
  if (states.empty()) throw CanonError("trace has no states");
  if (steps.size() + 1 != states.size()) {
    throw CanonError("trace has " + std::to_string(states.size()) + " states but " +
                     std::to_string(steps.size()) + " steps");
  }
  for (size_t i = 0; i < steps.size(); ++i) {
    PresSet expect = states[i];
    for (int32_t f : steps[i].removed) expect.erase(f);
    for (int32_t f : steps[i].added) expect.insert(f);
    if (expect != states[i + 1]) {
      throw CanonError("trace step " + std::to_string(i) +
                       " does not transform its source state into its target state");
    }
  }
}

std::string dump_trace(const Trace& trace,
                       const std::function<std::string(int32_t)>& show_formula) {
  json j;
  j["terminated"] = trace.terminated;
  j["states"] = json::array();
  for (const auto& s : trace.states) {
    json st = json::array();
    for (int32_t f : s) st.push_back(show_formula(f));
    j["states"].push_back(st);
  }
  j["steps"] = json::array();
  for (const auto& step : trace.steps) {
    json js;
    js["kind"] = step.kind;
    js["added"] = json::array();
    for (int32_t f : step.added) js["added"].push_back(show_formula(f));
    js["removed"] = json::array();
    for (int32_t f : step.removed) js["removed"].push_back(show_formula(f));
    j["steps"].push_back(js);
  }
  return j.dump(2) + "\n";
}

Trace parse_trace(const std::string& json_text,
                  const std::function<int32_t(const std::string&)>& parse_formula) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw CanonError(std::string("trace is not valid JSON: ") + e.what());
  }
  Trace t;
  try {
    t.terminated = j.value("terminated", true);
    for (const auto& st : j.at("states")) {
      PresSet s;
      for (const auto& f : st) s.insert(parse_formula(f.get<std::string>()));
      t.states.push_back(std::move(s));
    }
    if (j.contains("steps")) {
      for (const auto& js : j.at("steps")) {
        Trace::Step step;
        step.kind = js.at("kind").get<std::string>();
        for (const auto& f : js.at("added")) step.added.insert(parse_formula(f.get<std::string>()));
        for (const auto& f : js.at("removed")) {
          step.removed.insert(parse_formula(f.get<std::string>()));
        }
        t.steps.push_back(std::move(step));
      }
    }
  } catch (const json::exception& e) {
    throw CanonError(std::string("trace is missing fields: ") + e.what());
  }
  t.validate();
  return t;
}

}  // namespace canon
