#pragma once

#include <stdexcept>
#include <string>

namespace pcr {

struct DimensionTooLarge : std::runtime_error {
    explicit DimensionTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct RowWeightNot2 : std::runtime_error {
    explicit RowWeightNot2(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionCap : std::runtime_error {
    explicit DimensionCap(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVector : std::runtime_error {
    explicit ZeroVector(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyCone : std::runtime_error {
    explicit EmptyCone(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionNot2 : std::runtime_error {
    explicit DimensionNot2(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotADivisor : std::runtime_error {
    explicit NotADivisor(const std::string& what) : std::runtime_error(what) {}
};

struct Disconnected : std::runtime_error {
    explicit Disconnected(const std::string& what) : std::runtime_error(what) {}
};

struct NotRegular : std::runtime_error {
    explicit NotRegular(const std::string& what) : std::runtime_error(what) {}
};

struct NoPrimitiveFactor : std::runtime_error {
    explicit NoPrimitiveFactor(const std::string& what) : std::runtime_error(what) {}
};

// Parse errors carry the location so the CLI can report file:line:column.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : std::runtime_error(what), line(line_), column(column_) {}
};

}  // namespace pcr
