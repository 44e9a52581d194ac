#include "lhx/error.hpp"

namespace lhx {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::non_positive_x: return "NonPositiveX";
        case Errc::non_positive_alpha: return "NonPositiveAlpha";
        case Errc::truncation_failure: return "TruncationFailure";
        case Errc::unsupported_order: return "UnsupportedOrder";
        case Errc::reduction_divergence: return "ReductionDivergence";
        case Errc::radius_too_large: return "RadiusTooLarge";
        case Errc::tail_too_large: return "TailTooLarge";
        case Errc::quadrature_divergence: return "QuadratureDivergence";
        case Errc::unknown_lemma: return "UnknownLemma";
    }
    return "Unknown";
}

}  // namespace lhx
