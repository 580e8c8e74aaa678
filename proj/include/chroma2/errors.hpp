#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chroma2 {

// Every semantic failure in the library throws Error with a machine-checkable
// kind plus a human-readable message. Witness payloads (vertex/edge ids,
// line/column) ride along in `witness` so callers and tests can inspect them.
enum class ErrorKind {
    bad_argument,        // malformed parameters, unusable values
    bad_parity,          // parameter must be odd
    size_guard,          // instance exceeds the documented exact-solver bound
    cap_exceeded,        // cycle-search cap violated
    not_prime,           // projective-plane order must be prime
    invalid_rotation,    // rotation system inconsistent with the graph
    disconnected,        // operation requires a connected graph
    precondition,        // documented operation precondition failed
    adjacent_suppressible, // two adjacent suppressible degree-2 vertices
    unclassifiable_edge, // derived edge fits no structural type
    hypotheses_too_tight,// scaled clique-pair hypotheses infeasible
    pigeonhole_failure,  // save-a-color pigeonhole found no common target
    format,              // input file malformed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, std::vector<long long> witness = {})
        : std::runtime_error(msg), kind_(kind), witness_(std::move(witness)) {}

    ErrorKind kind() const { return kind_; }
    const std::vector<long long>& witness() const { return witness_; }

private:
    ErrorKind kind_;
    std::vector<long long> witness_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::bad_argument: return "bad_argument";
        case ErrorKind::bad_parity: return "bad_parity";
        case ErrorKind::size_guard: return "size_guard";
        case ErrorKind::cap_exceeded: return "cap_exceeded";
        case ErrorKind::not_prime: return "not_prime";
        case ErrorKind::invalid_rotation: return "invalid_rotation";
        case ErrorKind::disconnected: return "disconnected";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::adjacent_suppressible: return "adjacent_suppressible";
        case ErrorKind::unclassifiable_edge: return "unclassifiable_edge";
        case ErrorKind::hypotheses_too_tight: return "hypotheses_too_tight";
        case ErrorKind::pigeonhole_failure: return "pigeonhole_failure";
        case ErrorKind::format: return "format";
    }
    return "unknown";
}

} // namespace chroma2
