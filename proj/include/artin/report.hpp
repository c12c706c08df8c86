#ifndef ARTIN_REPORT_HPP_
#define ARTIN_REPORT_HPP_

// Verification reports: an ordered list of claims, each verified by
// computation, falsified, taken from the literature, or cut off by the
// time budget.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/deadline.hpp"

namespace artin {

enum class StepStatus { Verified, Falsified, AssumedTheory, BudgetExhausted };

inline char const* to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Verified: return "verified";
    case StepStatus::Falsified: return "falsified";
    case StepStatus::AssumedTheory: return "assumed-theory";
    case StepStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

inline StepStatus parse_step_status(std::string const& s) {
  for (auto st : {StepStatus::Verified, StepStatus::Falsified, StepStatus::AssumedTheory,
                  StepStatus::BudgetExhausted}) {
    if (s == to_string(st)) return st;
  }
  throw std::invalid_argument("unknown step status: " + s);
}

// Results from the literature that a report may rely on without computation.
inline std::vector<std::string> const& citation_whitelist() {
  static std::vector<std::string> const list{
      "Brieskorn-Saito: the center of an irreducible spherical Artin group is infinite cyclic, generated by "
      "Delta or Delta^2",
      "Bessis-Springer: every torsion element of a spherical Artin group modulo its center is conjugate to a "
      "power of a basic element, so the listed orders are all torsion orders",
      "Rolfsen-Zhu: pure Artin groups of spherical type are bi-orderable, hence have no generalized torsion",
      "Behrstock-Margalit: every injection of a finite-index subgroup of the extended mapping class group of "
      "the thrice-punctured torus into itself is induced by a conjugation",
      "commensurator of A-bar[D4]: it is the extended mapping class group of the thrice-punctured torus, "
      "isomorphic to A-bar[D4] x| (S3 x Z2)",
      "central quotients: commensurable spherical Artin groups have commensurable central quotients",
      "pure kernel: the image of the pure Artin group of type D4 modulo center is the kernel K, normally "
      "generated by the squares of the standard generators",
  };
  return list;
}

inline bool is_whitelisted_citation(std::string const& c) {
  auto const& l = citation_whitelist();
  return std::find(l.begin(), l.end(), c) != l.end();
}

struct ReportStep {
  std::string claim_id;
  std::string statement;
  StepStatus status = StepStatus::Verified;
  std::optional<std::string> witness;
  long long runtime_ms = 0;
};

struct VerificationReport {
  std::string pipeline;
  std::vector<ReportStep> steps;

  std::size_t count(StepStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [s](auto const& st) { return st.status == s; }));
  }

  bool falsified() const { return count(StepStatus::Falsified) > 0; }

  ReportStep const* find(std::string const& id) const {
    for (auto const& s : steps) {
      if (s.claim_id == id) return &s;
    }
    return nullptr;
  }

  void append(VerificationReport const& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  }
};

inline nlohmann::json to_json(VerificationReport const& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (auto const& s : r.steps) {
    steps.push_back({{"claim_id", s.claim_id},
                     {"statement", s.statement},
                     {"status", to_string(s.status)},
                     {"witness", s.witness ? nlohmann::json(*s.witness) : nlohmann::json(nullptr)},
                     {"runtime_ms", s.runtime_ms}});
  }
  return {{"pipeline", r.pipeline}, {"steps", steps}};
}

inline VerificationReport report_from_json(nlohmann::json const& j) {
  VerificationReport r;
  r.pipeline = j.at("pipeline").get<std::string>();
  for (auto const& s : j.at("steps")) {
    ReportStep st;
    st.claim_id = s.at("claim_id").get<std::string>();
    st.statement = s.at("statement").get<std::string>();
    st.status = parse_step_status(s.at("status").get<std::string>());
    if (!s.at("witness").is_null()) st.witness = s.at("witness").get<std::string>();
    st.runtime_ms = s.at("runtime_ms").get<long long>();
    r.steps.push_back(std::move(st));
  }
  return r;
}

// Problems with the shape of a report (empty list means valid): required
// keys and types, and a whitelisted citation on every assumed-theory step.
inline std::vector<std::string> validate_report_json(nlohmann::json const& j) {
  std::vector<std::string> errs;
  if (!j.is_object()) return {"report is not an object"};
  if (!j.contains("pipeline") || !j["pipeline"].is_string()) errs.push_back("missing string 'pipeline'");
  if (!j.contains("steps") || !j["steps"].is_array()) {
    errs.push_back("missing array 'steps'");
    return errs;
  }
  for (auto const& s : j["steps"]) {
    std::string id = s.contains("claim_id") && s["claim_id"].is_string() ? s["claim_id"].get<std::string>() : "?";
    if (id == "?") errs.push_back("step without string claim_id");
    if (!s.contains("statement") || !s["statement"].is_string()) errs.push_back(id + ": missing statement");
    if (!s.contains("runtime_ms") || !s["runtime_ms"].is_number_integer()) errs.push_back(id + ": bad runtime_ms");
    if (!s.contains("witness") || !(s["witness"].is_null() || s["witness"].is_string())) {
      errs.push_back(id + ": witness must be string or null");
    }
    if (!s.contains("status") || !s["status"].is_string()) {
      errs.push_back(id + ": missing status");
      continue;
    }
    try {
      if (parse_step_status(s["status"].get<std::string>()) == StepStatus::AssumedTheory) {
        if (!s["witness"].is_string() || !is_whitelisted_citation(s["witness"].get<std::string>())) {
          errs.push_back(id + ": assumed-theory step without a whitelisted citation");
        }
      }
    } catch (std::invalid_argument const& e) {
      errs.push_back(id + ": " + e.what());
    }
  }
  return errs;
}

// The outcome of one computed step.
struct Outcome {
  bool ok = false;
  std::string witness;
};

// Runs steps in order, timing them and mapping budget exhaustion and
// unexpected errors to statuses.
class StepRunner {
 public:
  StepRunner(VerificationReport& report, Deadline deadline) : report_(report), deadline_(deadline) {}

  Deadline const& deadline() const noexcept { return deadline_; }

  void run(std::string id, std::string statement, std::function<Outcome()> const& body) {
    ReportStep st{std::move(id), std::move(statement), StepStatus::Verified, std::nullopt, 0};
    if (deadline_.expired()) {
      st.status = StepStatus::BudgetExhausted;
      st.witness = "not started: budget exhausted";
      report_.steps.push_back(std::move(st));
      return;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      st.status = o.ok ? StepStatus::Verified : StepStatus::Falsified;
      st.witness = o.witness;
    } catch (BudgetExhausted const& e) {
      st.status = StepStatus::BudgetExhausted;
      st.witness = e.what();
    } catch (std::exception const& e) {
      st.status = StepStatus::Falsified;
      st.witness = std::string("error: ") + e.what();
    }
    st.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                        .count();
    report_.steps.push_back(std::move(st));
  }

  // A step whose outcome was computed elsewhere.
  void record(std::string id, std::string statement, StepStatus status, std::string witness, long long ms = 0) {
    report_.steps.push_back({std::move(id), std::move(statement), status, std::move(witness), ms});
  }

  void assume(std::string id, std::string statement, std::string const& citation) {
    if (!is_whitelisted_citation(citation)) throw std::logic_error("citation not whitelisted: " + citation);
    report_.steps.push_back({std::move(id), std::move(statement), StepStatus::AssumedTheory, citation, 0});
  }

 private:
  VerificationReport& report_;
  Deadline deadline_;
};

inline void print_table(std::ostream& os, VerificationReport const& r) {
  os << "pipeline: " << r.pipeline << "\n";
  for (auto const& s : r.steps) {
    os << std::left << std::setw(17) << to_string(s.status) << std::setw(34) << s.claim_id << s.statement;
    if (s.witness && !s.witness->empty()) os << "  [" << *s.witness << "]";
    os << "  (" << s.runtime_ms << " ms)\n";
  }
  os << "verified " << r.count(StepStatus::Verified) << ", falsified " << r.count(StepStatus::Falsified)
     << ", assumed-theory " << r.count(StepStatus::AssumedTheory) << ", budget-exhausted "
     << r.count(StepStatus::BudgetExhausted) << "\n";
}

}  // namespace artin

#endif  // ARTIN_REPORT_HPP_
