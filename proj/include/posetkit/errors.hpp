#pragma once

#include <stdexcept>
#include <string>

namespace posetkit {

// Every failure the library reports, as one enum so callers (and the CLI)
// can map conditions to exit codes without string matching.
enum class Errc {
    usage_error,              // mismatched subset/poset binding, bad argument
    unknown_label,
    duplicate_label,
    cycle_detected,           // antisymmetry violation
    not_transitive,
    size_limit_exceeded,      // exhaustive operation asked to run past the cap
    internal_lemma_violation, // a proved property failed: implementation bug
    invalid_selector,
    empty_poset,
    not_a_chain,
    not_inflationary,
    cap_exceeded,
    precondition_failed,
    malformed_input,
    unknown_strategy,
    order_inconsistent,       // equal() disagrees with leq antisymmetry
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace posetkit
