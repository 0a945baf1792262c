#pragma once

#include <string_view>
#include <vector>

#include "qmock/rational.hpp"

namespace qmock {

enum class Recursion { t1id, t9, t919, t9201, t9202, t920c, t920d, corB };

const std::vector<Recursion>& all_recursions();
std::string_view recursion_name(Recursion r);
Recursion parse_recursion(std::string_view s);

/// Which reading of a recursion to evaluate. `literal` keeps the summation
/// bounds and constants exactly as first stated, which differs from the
/// corrected form only for t919 (m-range) and corB (m-range and the factor 2
/// on the pair sum).
enum class Reading { corrected, literal };

/// The weighted sum over m of mock theta coefficients.
Rational lhs_recursion(Recursion r, int n, Reading reading = Reading::corrected);
/// The divisor-sum side.
Rational rhs_theorem(Recursion r, int n, Reading reading = Reading::corrected);

}  // namespace qmock
