#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace homore {

// Full expanded evidence for a failed identity; lhs != rhs exactly.
struct Counterexample {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string property;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::string bounds;
    std::int64_t millis = 0;
    std::optional<std::uint64_t> seed;

    static Report passed(std::string property, std::string bounds) {
        Report r;
        r.property = std::move(property);
        r.bounds = std::move(bounds);
        return r;
    }

    static Report failed(std::string property, std::string bounds, Counterexample ce) {
        Report r;
        r.property = std::move(property);
        r.bounds = std::move(bounds);
        r.pass = false;
        r.counterexample = std::move(ce);
        return r;
    }
};

}  // namespace homore
