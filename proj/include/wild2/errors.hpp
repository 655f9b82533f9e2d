#pragma once

#include <stdexcept>
#include <string>

namespace wild2 {

// Raised when a result would have no known unit bits at the current working
// precision. Callers are expected to escalate precision and retry; see
// precision_cap_bits() for the hard ceiling.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct NonSquareInput : std::runtime_error {
    explicit NonSquareInput(const std::string& what) : std::runtime_error(what) {}
};

struct NotAQuadraticField : std::runtime_error {
    explicit NotAQuadraticField(const std::string& what) : std::runtime_error(what) {}
};

struct WrongGaloisClass : std::runtime_error {
    explicit WrongGaloisClass(const std::string& what) : std::runtime_error(what) {}
};

struct NotTotallyRamified : std::runtime_error {
    explicit NotTotallyRamified(const std::string& what) : std::runtime_error(what) {}
};

// An extension step came out unramified on a field whose residue degree is
// already 2. No tested c should ever trigger this; it exists so the tower
// engine can report the violation instead of silently misclassifying.
struct ResidueDegreeOverflow : std::runtime_error {
    explicit ResidueDegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Row table failed to match exactly one family. Indicates a data error in the
// congruence table, not bad input.
struct RowCoverageError : std::logic_error {
    explicit RowCoverageError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr long precision_cap_bits = 1L << 16;

// Internal-consistency check that survives NDEBUG builds.
inline void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

}  // namespace wild2
