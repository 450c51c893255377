#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracspec/grid.hpp"
#include "fracspec/spectral_ops.hpp"
#include "fracspec/test_functions.hpp"

namespace fracspec {

/// Sign chi(s) in {+1, -1} chosen so that chi(s) cos(s pi / 2) >= 0:
/// +1 when s/2 mod 2 lies in [0, 1/2] or [3/2, 2), -1 on (1/2, 3/2).
/// The closed brackets keep chi = +1 at odd integers (where cos vanishes)
/// and chi(0) = +1 extends the rule to s = 0.
int chi(double s);

/// One resolvent factor 1 + chi(s) * symbol(xi, s, side). Its squared
/// modulus is bounded below by 1 + |2 pi xi|^{2s}, so the factor never
/// vanishes and the induced map is invertible bin by bin.
std::complex<double> factor_symbol(double xi, double s, Side side);

struct OrderFactor {
    double order;
    Side side;
};

/// Ordered factors (s_i, side_i) of a composite multiplier together with a
/// total order s >= sum s_i; the residual tau = s - sum s_i is the order
/// left over after applying the map. Defaults total to sum s_i (tau = 0).
class OrderDecomposition {
public:
    OrderDecomposition() = default;
    explicit OrderDecomposition(std::vector<OrderFactor> factors,
                                std::optional<double> total_order = std::nullopt);

    /// Text form: comma-separated `s:side` pairs with side L or R, e.g.
    /// "0.5:L,1:R". Empty text is the empty decomposition.
    static OrderDecomposition parse(std::string_view text,
                                    std::optional<double> total_order = std::nullopt);

    std::span<const OrderFactor> factors() const { return factors_; }
    double total_order() const { return total_; }
    double factor_sum() const;
    double residual_tau() const { return total_ - factor_sum(); }
    bool empty() const { return factors_.empty(); }

    std::string to_text() const;

private:
    std::vector<OrderFactor> factors_;
    double total_ = 0.0;
};

/// f(xi) = prod_i (1 + chi(s_i) (+-2 pi i xi)^{s_i}); empty product is 1.
std::complex<double> composite_symbol(double xi, const OrderDecomposition& decomp);

/// u with u_hat = f * v_hat. Realizes v + chi(s) D^s v = u factor by factor.
SampledFunction forward_map(const SampledFunction& v, const OrderDecomposition& decomp);

/// v with v_hat = u_hat / f. Safe everywhere since |f| >= 1.
SampledFunction inverse_map(const SampledFunction& u, const OrderDecomposition& decomp);

/// Largest normalized weak-derivative defect over the battery:
///
///   max_psi |(u, D^{mu,opp} psi) - (w, psi)| / (||u|| ||psi|| + ||w|| ||psi||)
///
/// where opp is the side opposite to `side` (testing a left weak derivative
/// pairs u against right derivatives of the test functions, and vice versa).
/// Zero u and w give residual 0; an empty battery is an error.
double weak_derivative_residual(const SampledFunction& u, const SampledFunction& w, double mu,
                                Side side, std::span<const TestFunctionSpec> battery);

/// Default battery: five bumps of radius 1 centered at -2, -1, 0, 1, 2.
std::vector<TestFunctionSpec> default_battery();

/// Grid diagnostics for order-s regularity. No boolean verdict: a finite
/// grid cannot decide membership, so callers get the norm, where the
/// seminorm mass sits, and the high-frequency decay rate instead.
struct MembershipReport {
    double order;
    double norm;
    double seminorm;
    /// Share of seminorm^2 carried by bins with |xi| >= xi_max / 2.
    double top_octave_fraction;
    /// Log-log slope of |u_hat|^2 against |xi| over the top two octaves;
    /// absent when the spectrum vanishes there.
    std::optional<double> spectral_slope;
};

MembershipReport membership_report(const SampledFunction& u, double s);

}  // namespace fracspec
