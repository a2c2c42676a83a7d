#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace iso {

enum class errc {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    parse_error,
    disconnected,
    not_bipartite,
    too_small,
    improper_input,
    wrong_k,
    not_bad_edge,
    unassigned_vertex,
    not_three_colorable,
    algorithm_stalled,
    budget_exceeded,
    isolated_vertex,
    bad_parameter,
    retries_exhausted,
    bound_violated,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::parse_error: return "ParseError";
        case errc::disconnected: return "Disconnected";
        case errc::not_bipartite: return "NotBipartite";
        case errc::too_small: return "TooSmall";
        case errc::improper_input: return "ImproperInput";
        case errc::wrong_k: return "WrongK";
        case errc::not_bad_edge: return "NotBadEdge";
        case errc::unassigned_vertex: return "UnassignedVertex";
        case errc::not_three_colorable: return "Not3Colorable";
        case errc::algorithm_stalled: return "AlgorithmStalled";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::isolated_vertex: return "IsolatedVertex";
        case errc::bad_parameter: return "BadParameter";
        case errc::retries_exhausted: return "RetriesExhausted";
        case errc::bound_violated: return "BoundViolated";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Search ran out of its node budget. Carries what was established so far:
/// every size <= lower_bound_proven was exhausted, and upper_bound (when
/// present) is the size of a feasible incumbent. Callers must treat the
/// instance as unsolved.
class BudgetError : public Error {
public:
    BudgetError(std::string msg, std::uint64_t nodes, int lower_bound_proven,
                std::optional<int> upper_bound)
        : Error(errc::budget_exceeded, std::move(msg)),
          nodes(nodes),
          lower_bound_proven(lower_bound_proven),
          upper_bound(upper_bound) {}

    std::uint64_t nodes;
    int lower_bound_proven;
    std::optional<int> upper_bound;
};

/// The rotation-sweep loop failed to make progress. This is a guarded
/// diagnostic, never silent nontermination; the trace text records every
/// sweep up to the stall.
class StallError : public Error {
public:
    StallError(std::string msg, std::string trace)
        : Error(errc::algorithm_stalled, std::move(msg)), trace(std::move(trace)) {}

    std::string trace;
};

}  // namespace iso
