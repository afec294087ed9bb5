#include "bicross/report.hpp"

#include <sstream>

namespace bicross {

std::string Report::summary() const {
    std::ostringstream os;
    os << subject << ": " << (pass() ? "pass" : "FAIL") << " (" << checks << " checks";
    if (!pass()) os << ", " << violation_count << " violations";
    os << ")";
    if (!pass()) {
        for (size_t i = 0; i < violations.size() && i < 4; ++i) {
            const auto& v = violations[i];
            os << "\n  " << v.law << " at (";
            for (size_t j = 0; j < v.witness.size(); ++j)
                os << (j ? "," : "") << v.witness[j];
            os << ")";
            if (!v.detail.empty()) os << " " << v.detail;
        }
    }
    return os.str();
}

} // namespace bicross
