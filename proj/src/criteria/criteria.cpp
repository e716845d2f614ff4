#include "ahpeval/criteria/criteria.hpp"

#include <set>

#include "ahpeval/error.hpp"

namespace ahpeval::criteria {

std::vector<std::string> CriteriaSet::ids() const {
  std::vector<std::string> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) out.push_back(c.id);
  return out;
}

std::optional<std::size_t> CriteriaSet::index_of(std::string_view id) const {
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (criteria[k].id == id) return k;
  }
  return std::nullopt;
}

const Criterion& CriteriaSet::at(std::string_view id) const {
  if (auto k = index_of(id)) return criteria[*k];
  throw Error(ErrorKind::kNotFound, "unknown criterion '" + std::string(id) + "'");
}

void validate(const CriteriaSet& set) {
  if (set.criteria.size() < 2) {
    throw ValidationError(ErrorKind::kInvalidCriteria, "criteria",
                          "a criteria set needs at least 2 criteria");
  }
  std::set<std::string> seen;
  for (std::size_t k = 0; k < set.criteria.size(); ++k) {
    const auto& c = set.criteria[k];
    const std::string path = "criteria[" + std::to_string(k) + "]";
    if (c.id.empty()) {
      throw ValidationError(ErrorKind::kInvalidCriteria, path + ".id", "criterion id is empty");
    }
    if (c.id.find_first_of(" \t\r\n,") != std::string::npos) {
      throw ValidationError(ErrorKind::kInvalidCriteria, path + ".id",
                            "criterion id '" + c.id + "' contains whitespace or a comma");
    }
    if (!seen.insert(c.id).second) {
      throw ValidationError(ErrorKind::kInvalidCriteria, path + ".id",
                            "duplicate criterion id '" + c.id + "'");
    }
    if (c.anchors.size() != 3) {
      throw ValidationError(ErrorKind::kInvalidCriteria, path + ".anchors",
                            "criterion '" + c.id + "' needs anchors for exactly 1, 3 and 5");
    }
    for (int level : {1, 3, 5}) {
      const auto it = c.anchors.find(level);
      if (it == c.anchors.end() || it->second.empty()) {
        throw ValidationError(ErrorKind::kInvalidCriteria,
                              path + ".anchors." + std::to_string(level),
                              "criterion '" + c.id + "' lacks anchor text for level " +
                                  std::to_string(level));
      }
    }
  }
}

CriteriaSet builtin_ci_criteria() {
  CriteriaSet set;
  set.name = "ci-cyber-range";
  set.version = "1.0";
  set.provenance = "Built-in cyber range evaluation criteria tailored to critical infrastructure";
  set.criteria = {
      {"C1", "Realism & Fidelity",
       "Accurate replication of IT/OT stacks, protocols, timing, physics, and artifacts",
       "Critical for CI skill transfer; reproduce ICS/SCADA, protocol semantics, and process "
       "effects.",
       {"Supported ICS protocols/devices", "timing accuracy", "HIL/physics simulators",
        "realistic logs/traffic"},
       {{1, "IT-only, no ICS"},
        {3, "Some ICS protocols/basic simulation"},
        {5, "Rich ICS environment with physics/HIL and authentic artifacts"}}},
      {"C2", "Security & Isolation",
       "Safe containment of malware, tenant isolation, secure access, and auditability",
       "CI scenarios may use sensitive data or real malware; leakage unacceptable",
       {"Network segmentation", "virtualization isolation", "RBAC/ABAC+MFA",
        "separate red/blue spaces", "logging/reset procedures"},
       {{1, "Weak isolation/shared credentials"},
        {3, "Per-tenant environment + basic authentication"},
        {5, "Hardened containment, full audit, strict operation policies"}}},
      {"C3", "Scalability",
       "Capacity for users/nodes, stability under load, dynamic resource scaling",
       "Sector drills may need hundreds of participants, long simulations",
       {"Max concurrent users/nodes", "clustering/cloud burst", "auto-scaling",
        "long-duration stability", "QoS"},
       {{1, "Small (<=10 users), unstable"},
        {3, "Medium (~50 users), manual scaling"},
        {5, "Large (>=200 users), smooth elastic scaling"}}},
      {"C4", "Flexibility & Extensibility",
       "Ease of scenario creation and integration of new assets/tools",
       "CI sectors vary; adapt quickly to new devices, threats, and tools",
       {"SDK/APIs", "import custom VM/container images", "vendor-neutral libraries",
        "external testbed interfacing"},
       {{1, "Closed, fixed templates"},
        {3, "Configurable, limited plugins"},
        {5, "Open APIs, rich libraries, hybrid integrations"}}},
      {"C5", "Maintainability", "Effort to patch, update, and manage content",
       "CI systems evolve slowly, threats fast, the CR must be easily updatable.",
       {"Patch/upgrade frequency", "automated pipelines", "infrastructure-as-code",
        "version control", "OSS vs proprietary"},
       {{1, "Manual, brittle updates"},
        {3, "Semi-automated, regular updates"},
        {5, "Full CI/CD, versioned artifacts, rollback"}}},
      {"C6", "Usability", "Learnability and efficiency for instructors/trainees",
       "CI trainees may be OT engineers; must be intuitive and operator-friendly.",
       {"GUI scenario builder", "clear dashboards/HMIs", "instructor controls",
        "one-click resets", "documentation"},
       {{1, "Steep learning curve, expert-only"},
        {3, "Average usability"},
        {5, "Highly intuitive, efficient management"}}},
      {"C7", "Accessibility", "Practical access models (remote, thin client, federated)",
       "CI exercises often cross organization/site boundaries; remote secure access key.",
       {"Web-based access", "VPN/tunneling", "low-bandwidth tolerance", "SSO/federated auth",
        "multi-tenancy"},
       {{1, "On-site only"},
        {3, "Remote but requires a special client"},
        {5, "Browser/zero-client, robust federated remote access"}}},
      {"C8", "Training Effectiveness & Measurement",
       "Telemetry, scoring, analytics, AAR, skills mapping",
       "CI requires evidence of improved readiness and skill gap analysis",
       {"Built-in scoring engine", "user action logging", "timeline/AAR tools",
        "skills framework mapping", "reporting"},
       {{1, "Minimal/manual feedback"},
        {3, "Basic scoring + replay"},
        {5, "Rich analytics, dashboards, automated skill tracking"}}},
      {"C9", "Cost & Resource Efficiency",
       "Total cost vs. training value; efficiency of resource use",
       "CI organizations face budget/resource limits; efficient scaling is key",
       {"License model", "hardware/cloud cost", "staff effort",
        "use of virtual vs physical assets", "node density per host"},
       {{1, "Very high cost, inefficient"},
        {3, "Moderate cost, average efficiency"},
        {5, "Excellent cost efficiency, flexible pricing"}}},
      {"C10", "Vendor Support & Ecosystem",
       "Support, documentation, training, updates, community",
       "Ongoing vendor/community engagement ensures resilience and sector relevance",
       {"SLA", "documentation", "training/certs", "update cadence", "user community",
        "sector-specific scenarios"},
       {{1, "Minimal support/docs, no ecosystem"},
        {3, "Standard support + some scenarios"},
        {5, "Robust SLAs, rich libraries, active CI community"}}},
  };
  return set;
}

}  // namespace ahpeval::criteria
