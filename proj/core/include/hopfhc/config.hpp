#pragma once

#include "hopfhc/errors.hpp"
#include "hopfhc/scalar.hpp"

#include <string>
#include <vector>

namespace hopfhc {

/// Parsed run configuration. Text format: UTF-8, one `key = value` per line,
/// `#` comments, nested parameters dotted (`algebra.q = 2`). Unknown keys are
/// errors.
struct RunConfig {
    std::string algebra;               // k | kC2 | kS3 | sweedler4 | uq_sl2
    Scalar q = Scalar(2);              // uq_sl2 only
    bool q_symbolic = false;           // algebra.q = symbolic
    int cap = 3;                       // uq_sl2 degree cap
    std::string coefficient = "trivial"; // trivial | modular_pair | coalgebra_self | trivial_coaction
    std::string delta = "counit";      // modular_pair character
    std::string sigma;                 // modular_pair grouplike word name
    std::vector<std::string> ideal;    // trivial_coaction generators
    std::string theory;                // check | hochschild | cyclic | uq_vanishing
    std::string route = "coinvariant_quotient"; // p_image | coinvariant_quotient | both
    int max_degree = 2;
    std::string output;                // report path; empty = stdout
};

RunConfig parse_config(const std::string& text);

} // namespace hopfhc
