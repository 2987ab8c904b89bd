#pragma once

#include <string>
#include <vector>

namespace ifnstat {

/// Outcome of a sampled axiom check.
///
/// `worst_violation` is the largest amount by which the axiom failed over the
/// samples (0 when it never failed). Strict-inequality axioms report a unit
/// violation for each failing sample, since they have no natural magnitude.
struct AxiomReport {
    std::string axiom;
    bool passed = true;
    double worst_violation = 0.0;
    double tolerance = 0.0;
    std::vector<double> witness;
};

/// Running maximum of violations together with the first input tuple that
/// attained it.
class ViolationTracker {
  public:
    explicit ViolationTracker(double tolerance) : tolerance_(tolerance) {}

    void observe(double violation, std::vector<double> witness) {
        if (violation > worst_) {
            worst_ = violation;
            witness_ = std::move(witness);
        }
    }

    template <typename... Ts>
    void observe_at(double violation, Ts... coords) {
        if (violation > worst_) {
            worst_ = violation;
            witness_ = {static_cast<double>(coords)...};
        }
    }

    AxiomReport report(std::string axiom) const {
        return AxiomReport{std::move(axiom), worst_ <= tolerance_, worst_, tolerance_, witness_};
    }

  private:
    double tolerance_;
    double worst_ = 0.0;
    std::vector<double> witness_;
};

inline bool all_passed(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace ifnstat
