#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qmock/qseries.hpp"

namespace qmock {

enum class MockName { f, omega, B, nu2, Ftilde, omegaEven, omegaOdd };

std::string_view mock_name_str(MockName n);
/// Accepts "f", "omega", "B", "nu2", "Ftilde", "omegaEven", "omegaOdd".
MockName parse_mock_name(std::string_view s);

/// The defining q-hypergeometric sum, truncated below q^order.
QSeries eulerian_series(MockName name, int order);
/// The Appell-Lerch (bilateral sum over product) form; f, omega and B only.
QSeries appell_form(MockName name, int order);

enum class Parity { even, odd };
/// Keeps the even or odd powers of q of an x-free series.
QSeries parity_part(const QSeries& a, Parity parity);
/// a(q) -> a(-q)
QSeries negate_q(const QSeries& a);

/// Coefficient of q^n; 0 for negative or non-integral n. Backed by a shared,
/// thread-safe cache that grows on demand.
Rational coeff_c(MockName name, const Rational& n);
/// Coefficients from q^0 on, at least count of them, from the same cache.
std::shared_ptr<const std::vector<Rational>> coefficient_table(MockName name, int count);

}  // namespace qmock
