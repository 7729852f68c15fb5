#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pedigrad {

// Malformed input text (segment literals, alignment rows, chromology JSON).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a model invariant
// (bad patch sizes, allele length mismatch, unknown cone, failed morphism).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A bounded computation (congruence closure, fiber enumeration) ran out of
// its configured budget. Distinct from a negative answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Counts abstract work units against a limit.
class Budget {
public:
    explicit Budget(std::size_t limit) : limit_(limit) {}

    void charge(std::size_t units, const char* activity) {
        used_ += units;
        if (used_ > limit_)
            throw BudgetExceeded(std::string(activity) + ": budget of " +
                                 std::to_string(limit_) + " work units exceeded");
    }

    std::size_t used() const { return used_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
    std::size_t used_ = 0;
};

} // namespace pedigrad
