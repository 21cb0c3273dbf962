#pragma once

#include <stdexcept>
#include <string>

namespace monodromy {

// Cross-check failure between two routes that must agree exactly.
// The CLI maps this to exit code 1; bad user input maps to exit code 2.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

struct OutOfRange : std::invalid_argument {
    explicit OutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

struct OddDimension : std::invalid_argument {
    explicit OddDimension(const std::string& what) : std::invalid_argument(what) {}
};

struct RealEigenvalue : std::invalid_argument {
    explicit RealEigenvalue(const std::string& what) : std::invalid_argument(what) {}
};

struct ScopeError : std::invalid_argument {
    explicit ScopeError(const std::string& what) : std::invalid_argument(what) {}
};

struct BadVanishingCycle : std::invalid_argument {
    explicit BadVanishingCycle(const std::string& what) : std::invalid_argument(what) {}
};

struct NonUnitConditioning : std::invalid_argument {
    explicit NonUnitConditioning(const std::string& what) : std::invalid_argument(what) {}
};

struct NotSymmetric : std::invalid_argument {
    explicit NotSymmetric(const std::string& what) : std::invalid_argument(what) {}
};

struct NotUnitary : std::invalid_argument {
    explicit NotUnitary(const std::string& what) : std::invalid_argument(what) {}
};

struct NotUnitaryGenerator : std::invalid_argument {
    explicit NotUnitaryGenerator(const std::string& what) : std::invalid_argument(what) {}
};

struct BadSignature : std::invalid_argument {
    explicit BadSignature(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace monodromy
