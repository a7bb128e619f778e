#pragma once

#include <stdexcept>
#include <string>

namespace lieblocks {

// Bad input: mismatched dimensions, out-of-range indices, unparsable text.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Capacity guards: requests beyond the supported desk scale.
class capacity_error : public std::invalid_argument {
public:
    explicit capacity_error(const std::string& what) : std::invalid_argument(what) {}
};

class parse_error : public domain_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : domain_error(what + " (at offset " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// Runtime witnesses of theorems the computation leans on.  None of these may
// ever fire on valid input; each firing is a genuine internal contradiction.
class sentinel_error : public std::logic_error {
public:
    sentinel_error(const std::string& kind, const std::string& what)
        : std::logic_error(kind + ": " + what), kind_(kind) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class integrality_violation : public sentinel_error {
public:
    explicit integrality_violation(const std::string& what)
        : sentinel_error("IntegralityViolation", what) {}
};

class p_integrality_violation : public sentinel_error {
public:
    explicit p_integrality_violation(const std::string& what)
        : sentinel_error("PIntegralityViolation", what) {}
};

class separation_failure : public sentinel_error {
public:
    explicit separation_failure(const std::string& what)
        : sentinel_error("SeparationFailure", what) {}
};

class rank_deficient : public sentinel_error {
public:
    explicit rank_deficient(const std::string& what)
        : sentinel_error("RankDeficient", what) {}
};

class method_disagreement : public sentinel_error {
public:
    explicit method_disagreement(const std::string& what)
        : sentinel_error("MethodDisagreement", what) {}
};

class not_invariant : public sentinel_error {
public:
    explicit not_invariant(const std::string& what)
        : sentinel_error("NotInvariant", what) {}
};

class decomposition_incomplete : public sentinel_error {
public:
    explicit decomposition_incomplete(const std::string& what)
        : sentinel_error("DecompositionIncomplete", what) {}
};

class cap_exceeded : public sentinel_error {
public:
    explicit cap_exceeded(const std::string& what)
        : sentinel_error("CapExceeded", what) {}
};

class arithmetic_overflow : public sentinel_error {
public:
    explicit arithmetic_overflow(const std::string& what)
        : sentinel_error("ArithmeticOverflow", what) {}
};

} // namespace lieblocks
