#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnor {

// Base class for everything thrown by the kernel.
struct KernelError : std::runtime_error {
    explicit KernelError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- poly-core ----

struct ParseError : KernelError {
    std::size_t position;  // 1-based character offset into the input text
    ParseError(const std::string& msg, std::size_t pos)
        : KernelError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariable : ParseError {
    UnknownVariable(const std::string& name, std::size_t pos)
        : ParseError("unknown variable '" + name + "'", pos) {}
};

struct NoWeights : KernelError {
    explicit NoWeights(const std::string& msg) : KernelError(msg) {}
};

struct AmbiguousWeights : KernelError {
    explicit AmbiguousWeights(const std::string& msg) : KernelError(msg) {}
};

// ---- engine ----

struct IterationBudgetExceeded : KernelError {
    explicit IterationBudgetExceeded(const std::string& msg) : KernelError(msg) {}
};

struct ExactDivisionFailure : KernelError {
    explicit ExactDivisionFailure(const std::string& msg) : KernelError(msg) {}
};

struct NoStabilization : KernelError {
    explicit NoStabilization(const std::string& msg) : KernelError(msg) {}
};

struct PreconditionViolation : KernelError {
    explicit PreconditionViolation(const std::string& msg) : KernelError(msg) {}
};

// ---- derlog ----

struct NotIsolated : KernelError {
    explicit NotIsolated(const std::string& msg) : KernelError(msg) {}
};

struct NotWeightedHomogeneous : KernelError {
    explicit NotWeightedHomogeneous(const std::string& msg) : KernelError(msg) {}
};

struct TangencyFailure : KernelError {
    int derivation_index;
    int equation_index;
    TangencyFailure(int di, int hi)
        : KernelError("derivation #" + std::to_string(di) + " is not tangent: xi(h_" +
                      std::to_string(hi) + ") is not a member of (h)"),
          derivation_index(di),
          equation_index(hi) {}
};

struct AxisRestrictionNonvanishing : KernelError {
    explicit AxisRestrictionNonvanishing(const std::string& msg) : KernelError(msg) {}
};

// ---- invariants ----

struct NotPrimitiveMember : PreconditionViolation {
    explicit NotPrimitiveMember(const std::string& msg) : PreconditionViolation(msg) {}
};

struct NotTransversalA1 : KernelError {
    explicit NotTransversalA1(const std::string& msg) : KernelError(msg) {}
};

struct InfiniteNu : KernelError {
    explicit InfiniteNu(const std::string& msg) : KernelError(msg) {}
};

struct NotIsolatedSeries : KernelError {
    int k;
    explicit NotIsolatedSeries(int k_)
        : KernelError("f_k does not define an isolated singularity at k = " + std::to_string(k_) +
                      "; retry with a larger k"),
          k(k_) {}
};

struct NotAligned : KernelError {
    explicit NotAligned(const std::string& msg) : KernelError(msg) {}
};

struct DegenerateTorsion : KernelError {
    explicit DegenerateTorsion(const std::string& msg) : KernelError(msg) {}
};

struct NotInGSquared : KernelError {
    explicit NotInGSquared(const std::string& msg) : KernelError(msg) {}
};

struct DegenerateQuadric : KernelError {
    explicit DegenerateQuadric(const std::string& msg) : KernelError(msg) {}
};

// Raised when a quotient that is expected to be finite dimensional is not.
struct InfiniteDimension : KernelError {
    explicit InfiniteDimension(const std::string& msg) : KernelError(msg) {}
};

// ---- cli / file ingestion ----

struct SchemaError : KernelError {
    explicit SchemaError(const std::string& msg) : KernelError(msg) {}
};

}  // namespace milnor
