#pragma once

#include <string>

namespace segre {

enum class Status { Proved, Refuted, Unknown };

/// Three-valued, truncation-aware answer.  Proved and Refuted carry an exact
/// witness; Unknown records the truncation (or jet) order the search reached.
struct Verdict {
    Status status = Status::Unknown;
    std::string witness;
    int order = 0;  // Proved: witnessing order when meaningful; Unknown: bound K

    static Verdict proved(std::string witness, int order = 0) {
        return {Status::Proved, std::move(witness), order};
    }
    static Verdict refuted(std::string witness, int order = 0) {
        return {Status::Refuted, std::move(witness), order};
    }
    static Verdict unknownUpTo(int order, std::string note = "") {
        return {Status::Unknown, std::move(note), order};
    }

    bool isProved() const { return status == Status::Proved; }
    bool isRefuted() const { return status == Status::Refuted; }
    bool isUnknown() const { return status == Status::Unknown; }

    std::string str() const;
};

std::string statusName(Status s);

}  // namespace segre
