#pragma once

#include <stdexcept>
#include <string>

namespace sposet {

enum class errc {
    no_bottom,
    non_boolean,
    rank_gap,
    bad_atoms,
    bad_subset,
    not_order_ideal,
    not_nested,
    invalid_orientation,
    unknown_label,
    duplicate_label,
    bad_input,
    non_termination,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::no_bottom: return "NoBottom";
        case errc::non_boolean: return "NonBoolean";
        case errc::rank_gap: return "RankGap";
        case errc::bad_atoms: return "BadAtoms";
        case errc::bad_subset: return "BadSubset";
        case errc::not_order_ideal: return "NotOrderIdeal";
        case errc::not_nested: return "NotNested";
        case errc::invalid_orientation: return "InvalidOrientation";
        case errc::unknown_label: return "UnknownLabel";
        case errc::duplicate_label: return "DuplicateLabel";
        case errc::bad_input: return "BadInput";
        case errc::non_termination: return "NonTermination";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

// All module errors carry a code plus the witnessing object (a face label,
// a cover pair, ...) so callers can produce machine-readable rejections.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message, std::string witness = "")
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          witness_(std::move(witness)) {}

    errc code() const { return code_; }
    const std::string& witness() const { return witness_; }

private:
    errc code_;
    std::string witness_;
};

}  // namespace sposet
