#pragma once

#include <stdexcept>
#include <string>

namespace lhx {

enum class Errc {
    invalid_argument = 1,
    non_positive_x,
    non_positive_alpha,
    truncation_failure,
    unsupported_order,
    reduction_divergence,
    radius_too_large,
    tail_too_large,
    quadrature_divergence,
    unknown_lemma,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace lhx
