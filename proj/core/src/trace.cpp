#include "chx/trace.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace chx {

namespace {

constexpr std::array<std::pair<Justification, std::string_view>, 12> kTagNames{{
    {Justification::pontrjagin_invariance, "pontrjagin-invariance"},
    {Justification::sw_invariance, "sw-invariance"},
    {Justification::hodge_symmetry, "hodge-symmetry"},
    {Justification::serre_duality, "serre-duality"},
    {Justification::kodaira_vanishing, "kodaira-vanishing"},
    {Justification::rr, "rr"},
    {Justification::integrality, "integrality"},
    {Justification::divisibility, "divisibility"},
    {Justification::fujiki, "fujiki"},
    {Justification::miyaoka, "miyaoka"},
    {Justification::bb_decomposition, "bb-decomposition"},
    {Justification::lefschetz, "lefschetz"},
}};

}  // namespace

std::string_view to_string(Justification j) {
    for (const auto& [tag, name] : kTagNames) {
        if (tag == j) {
            return name;
        }
    }
    throw std::invalid_argument("unknown justification tag");
}

Justification justification_from_string(std::string_view text) {
    for (const auto& [tag, name] : kTagNames) {
        if (name == text) {
            return tag;
        }
    }
    throw std::invalid_argument("unknown justification tag: " + std::string(text));
}

}  // namespace chx
