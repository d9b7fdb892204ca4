#pragma once

#include <vector>

#include "bsato/monomial.hpp"
#include "bsato/rational.hpp"

namespace bsato {

// One jump of a multiplier-ideal family: at alpha the ideal drops to the
// monomial ideal minimally generated by gens.
struct MultiplierRow {
    Rational alpha;
    std::vector<Monomial> gens;
};

// Jump table: alphas strictly increasing, ideals strictly decreasing.
struct MultiplierTable {
    std::vector<MultiplierRow> rows;
};

} // namespace bsato
