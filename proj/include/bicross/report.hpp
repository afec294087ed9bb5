#pragma once

#include <string>
#include <vector>

namespace bicross {

/// One violated law instance, with the witness tuple that triggered it.
struct Violation {
    std::string law;
    std::vector<long> witness;
    std::string detail;
};

/// Result of an exhaustive verification scan. Verifiers never throw on a
/// failed law; they record every violation (storing up to a cap) instead.
struct Report {
    std::string subject;
    long checks = 0;
    long violation_count = 0;
    std::vector<Violation> violations;

    static constexpr long kMaxStored = 64;

    bool pass() const { return violation_count == 0; }

    void add(std::string law, std::vector<long> witness, std::string detail = {}) {
        ++violation_count;
        if (static_cast<long>(violations.size()) < kMaxStored)
            violations.push_back({std::move(law), std::move(witness), std::move(detail)});
    }

    void merge(const Report& o) {
        checks += o.checks;
        violation_count += o.violation_count;
        for (const auto& v : o.violations) {
            if (static_cast<long>(violations.size()) >= kMaxStored) break;
            violations.push_back(v);
        }
    }

    std::string summary() const;
};

} // namespace bicross
