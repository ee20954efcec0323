#include "segre/verdict.hpp"

namespace segre {

std::string statusName(Status s) {
    switch (s) {
        case Status::Proved: return "proved";
        case Status::Refuted: return "refuted";
        case Status::Unknown: return "unknown_up_to";
    }
    return "?";
}

std::string Verdict::str() const {
    std::string s = statusName(status);
    if (status == Status::Unknown) {
        s += "(" + std::to_string(order) + ")";
        if (!witness.empty()) s += " [" + witness + "]";
        return s;
    }
    if (order > 0) s += "(" + std::to_string(order) + ")";
    if (!witness.empty()) s += " [" + witness + "]";
    return s;
}

}  // namespace segre
