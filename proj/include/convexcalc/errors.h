#pragma once

#include <stdexcept>
#include <string>

namespace convexcalc {

// Exit-code mapping used by the CLI: precondition failures -> 2,
// numeric tolerance exhaustion -> 3, parse errors -> 4.

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct precision_exhausted : std::runtime_error {
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

struct surgery_stuck : precondition_error {
    explicit surgery_stuck(const std::string& what) : precondition_error(what) {}
};

struct malformed_arc : precondition_error {
    explicit malformed_arc(const std::string& what) : precondition_error(what) {}
};

struct monodromy_fixes_curve : precondition_error {
    explicit monodromy_fixes_curve(const std::string& what) : precondition_error(what) {}
};

struct overtwisted_input : precondition_error {
    explicit overtwisted_input(const std::string& what) : precondition_error(what) {}
};

struct boundary_mismatch : precondition_error {
    explicit boundary_mismatch(const std::string& what) : precondition_error(what) {}
};

} // namespace convexcalc
