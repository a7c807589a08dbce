#include "orthofix/contraction.hpp"

namespace orthofix {

std::string_view kind_name(ContractionKind kind)
{
    switch (kind) {
    case ContractionKind::banach_perp:
        return "banach_perp";
    case ContractionKind::ciric:
        return "ciric";
    case ContractionKind::kannan:
        return "kannan";
    case ContractionKind::chatterjea:
        return "chatterjea";
    case ContractionKind::generalized_perp:
        return "generalized_perp";
    case ContractionKind::unrestricted_lipschitz:
        return "unrestricted_lipschitz";
    }
    return "unknown";
}

ContractionKind parse_kind(std::string_view name)
{
    for (auto kind : all_contraction_kinds) {
        if (kind_name(kind) == name) {
            return kind;
        }
    }
    throw InputError("unknown contraction kind '" + std::string(name) + "'");
}

Rat admissible_bound(ContractionKind kind)
{
    if (kind == ContractionKind::kannan || kind == ContractionKind::chatterjea) {
        return Rat(1, 2);
    }
    return Rat(1);
}

} // namespace orthofix
