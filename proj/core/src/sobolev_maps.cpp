#include "fracspec/sobolev_maps.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "fracspec/transform.hpp"

namespace fracspec {

namespace {
constexpr double kPi = std::numbers::pi;
}

int chi(double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidOrderError("chi: order must be nonnegative");
    // Pattern of s/2 with period 2: +1 on [0, 1/2] and [3/2, 2), -1 on
    // (1/2, 3/2). The closed endpoints land on the odd integers s, where
    // cos(s pi / 2) = 0, so chi cos >= 0 holds everywhere.
    const double half = std::fmod(0.5 * s, 2.0);
    return (half <= 0.5 || half >= 1.5) ? 1 : -1;
}

std::complex<double> factor_symbol(double xi, double s, Side side) {
    return 1.0 + static_cast<double>(chi(s)) * symbol(xi, s, side);
}

OrderDecomposition::OrderDecomposition(std::vector<OrderFactor> factors,
                                       std::optional<double> total_order)
    : factors_(std::move(factors)) {
    for (const OrderFactor& f : factors_)
        if (!(f.order >= 0.0) || !std::isfinite(f.order))
            throw InvalidOrderError("decomposition factors must be nonnegative");
    const double sum = factor_sum();
    total_ = total_order.value_or(sum);
    if (!(total_ >= sum))
        throw InvalidInputError("total order must be at least the sum of the factors");
}

double OrderDecomposition::factor_sum() const {
    double sum = 0.0;
    for (const OrderFactor& f : factors_) sum += f.order;
    return sum;
}

OrderDecomposition OrderDecomposition::parse(std::string_view text,
                                             std::optional<double> total_order) {
    std::vector<OrderFactor> factors;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = text.find(',', pos);
            const std::string_view token =
                text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                 : comma - pos);
            const std::size_t colon = token.find(':');
            if (colon == std::string_view::npos || colon + 2 != token.size())
                throw ParseError("decomposition factor must look like `0.5:L`, got `" +
                                 std::string(token) + "`");
            double order = 0.0;
            const char* first = token.data();
            const char* last = token.data() + colon;
            const auto [ptr, ec] = std::from_chars(first, last, order);
            if (ec != std::errc() || ptr != last)
                throw ParseError("bad order in decomposition factor `" + std::string(token) + "`");
            const char side_char = token[colon + 1];
            Side side;
            if (side_char == 'L')
                side = Side::left;
            else if (side_char == 'R')
                side = Side::right;
            else
                throw ParseError("decomposition side must be L or R in `" + std::string(token) +
                                 "`");
            factors.push_back(OrderFactor{order, side});
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return OrderDecomposition(std::move(factors), total_order);
}

std::string OrderDecomposition::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        char buf[32];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), factors_[i].order);
        out.append(buf, ptr);
        out += ':';
        out += factors_[i].side == Side::left ? 'L' : 'R';
    }
    return out;
}

std::complex<double> composite_symbol(double xi, const OrderDecomposition& decomp) {
    std::complex<double> f{1.0, 0.0};
    for (const OrderFactor& factor : decomp.factors())
        f *= factor_symbol(xi, factor.order, factor.side);
    return f;
}

SampledFunction forward_map(const SampledFunction& v, const OrderDecomposition& decomp) {
    if (decomp.empty()) return v;
    return apply_multiplier(v, [&decomp](double xi) { return composite_symbol(xi, decomp); });
}

SampledFunction inverse_map(const SampledFunction& u, const OrderDecomposition& decomp) {
    if (decomp.empty()) return u;
    // Invert the multiplier the forward map actually applied, including its
    // real-part rule at the unpaired bin, so the round trip is exact bin by
    // bin. The factor lower bound keeps every value at modulus >= 1.
    std::vector<std::complex<double>> values = multiplier_values(
        u.grid(), [&decomp](double xi) { return composite_symbol(xi, decomp); });
    for (std::complex<double>& z : values) z = 1.0 / z;
    return apply_multiplier_values(u, values);
}

double weak_derivative_residual(const SampledFunction& u, const SampledFunction& w, double mu,
                                Side side, std::span<const TestFunctionSpec> battery) {
    if (battery.empty())
        throw InvalidInputError("weak_derivative_residual: battery must not be empty");
    if (!(mu > 0.0)) throw InvalidOrderError("weak_derivative_residual: order must be positive");
    require_same_grid(u.grid(), w.grid());

    const double u_norm = l2_norm(u);
    const double w_norm = l2_norm(w);
    double worst = 0.0;
    for (const TestFunctionSpec& spec : battery) {
        const SampledFunction psi = sample(spec, u.grid());
        const SampledFunction dpsi = spectral_rl_derivative(psi, mu, opposite(side));
        const double lhs = inner_product(u, dpsi);
        const double rhs = inner_product(w, psi);
        const double denom = (u_norm + w_norm) * l2_norm(psi);
        const double r = denom > 0.0 ? std::abs(lhs - rhs) / denom : 0.0;
        worst = std::max(worst, r);
    }
    return worst;
}

std::vector<TestFunctionSpec> default_battery() {
    std::vector<TestFunctionSpec> battery;
    for (double center : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        TestFunctionSpec spec;
        spec.family = TestFamily::bump;
        spec.center = center;
        spec.support_radius = 1.0;
        battery.push_back(spec);
    }
    return battery;
}

MembershipReport membership_report(const SampledFunction& u, double s) {
    const Spectrum spec = dft(u);
    const GridSpec& g = spec.grid();
    const int half = g.points() / 2;
    const double xi_max = std::abs(g.frequency(-half));
    const SobolevNorm norms = sobolev_norm(spec, s);

    double total = 0.0, top = 0.0;
    for (int i = 0; i < g.points(); ++i) {
        const double xi = g.frequency(i - half);
        const double weighted =
            std::pow(std::abs(2.0 * kPi * xi), 2.0 * s) * std::norm(spec.coeffs()[static_cast<std::size_t>(i)]);
        total += weighted;
        if (std::abs(xi) >= 0.5 * xi_max) top += weighted;
    }

    // Least-squares slope of log |u_hat|^2 against log |xi| over the top two
    // octaves, skipping empty bins.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (int i = 0; i < g.points(); ++i) {
        const double xi = std::abs(g.frequency(i - half));
        const double power = std::norm(spec.coeffs()[static_cast<std::size_t>(i)]);
        if (xi < 0.25 * xi_max || power <= 0.0) continue;
        const double lx = std::log(xi);
        const double ly = std::log(power);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    std::optional<double> slope;
    if (count >= 2) {
        const double denom = count * sxx - sx * sx;
        if (denom > 0.0) slope = (count * sxy - sx * sy) / denom;
    }

    return MembershipReport{s, norms.norm, norms.seminorm, total > 0.0 ? top / total : 0.0, slope};
}

}  // namespace fracspec
