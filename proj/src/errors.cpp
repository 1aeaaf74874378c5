#include "posetkit/errors.hpp"

namespace posetkit {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::usage_error: return "usage_error";
    case Errc::unknown_label: return "unknown_label";
    case Errc::duplicate_label: return "duplicate_label";
    case Errc::cycle_detected: return "cycle_detected";
    case Errc::not_transitive: return "not_transitive";
    case Errc::size_limit_exceeded: return "size_limit_exceeded";
    case Errc::internal_lemma_violation: return "internal_lemma_violation";
    case Errc::invalid_selector: return "invalid_selector";
    case Errc::empty_poset: return "empty_poset";
    case Errc::not_a_chain: return "not_a_chain";
    case Errc::not_inflationary: return "not_inflationary";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::precondition_failed: return "precondition_failed";
    case Errc::malformed_input: return "malformed_input";
    case Errc::unknown_strategy: return "unknown_strategy";
    case Errc::order_inconsistent: return "order_inconsistent";
    }
    return "unknown";
}

} // namespace posetkit
