#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lct {

enum class ErrorCode {
    empty_input,
    malformed_integer,
    inconsistent_tree,
    not_a_permutation,
    rank_mismatch,
    not_lyndon,
    table_mismatch,
    out_of_range,
    index_mismatch,
    single_leaf,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carried by every failing library operation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace lct
