#include "mcurve/credit_model.hpp"

#include <cmath>
#include <ostream>

#include "mcurve/errors.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

void CreditParams::validate() const {
    if (!(recovery >= 0.0 && recovery <= 1.0)) throw DomainError("recovery outside [0, 1]");
    if (!(default_probability >= 0.0 && default_probability <= 1.0)) {
        throw DomainError("default probability outside [0, 1]");
    }
}

double survival_factor(const CreditParams& p) { return 1.0 - p.lgd() * p.default_probability; }

double risky_bond_price(double discount, const CreditParams& p) { return discount * survival_factor(p); }

double risky_libor(double risky_discount, double tau) {
    if (!(risky_discount > 0.0)) throw DomainError("risky discount factor must be positive");
    if (!(tau > 0.0)) throw DomainError("accrual must be positive");
    return (1.0 / risky_discount - 1.0) / tau;
}

double discount_from_libor(double libor, double tau) { return 1.0 / (1.0 + libor * tau); }

FraContract make_fra(CivilDate T1, CivilDate T2, double strike, DayCount dc, FraStyle style, double notional,
                     int omega) {
    if (!(T1 < T2)) throw OrderingError("FRA fixing " + T1.iso() + " is not before payment " + T2.iso());
    return FraContract{T1, T2, strike, notional, omega, style, year_fraction(T1, T2, dc)};
}

double fra_std_price(const FraContract& c, double pd1, double pd2, const CreditParams& p) {
    return c.notional * c.omega * (pd1 / survival_factor(p) - pd2 * (1.0 + c.strike * c.accrual));
}

double fra_mkt_price(const FraContract& c, double pd1, double pd2, const CreditParams& p) {
    return c.notional * c.omega * (pd1 - pd2 * (1.0 + c.strike * c.accrual) * survival_factor(p));
}

double fra_price(const FraContract& c, double pd1, double pd2, const CreditParams& p) {
    return c.style == FraStyle::Standard ? fra_std_price(c, pd1, pd2, p) : fra_mkt_price(c, pd1, pd2, p);
}

double fra_equilibrium_rate(double pd1, double pd2, const CreditParams& p, double tau) {
    return (pd1 / pd2 / survival_factor(p) - 1.0) / tau;
}

double riskfree_forward(double pd1, double pd2, double tau) { return (pd1 / pd2 - 1.0) / tau; }

double basis_over_riskfree(double pd1, double pd2, const CreditParams& p, double tau) {
    // K* - F_d = (P_d1/P_d2)(1/R - 1)/tau; written this way it is exactly zero when R = 1.
    const double r = survival_factor(p);
    return pd1 / pd2 * ((1.0 - r) / r) / tau;
}

std::vector<CreditSweepRow> credit_sweep(const std::vector<double>& lgds, const std::vector<double>& qs, double pd1,
                                         double pd2, double tau) {
    if (!(pd1 > 0.0 && pd2 > 0.0)) throw DomainError("discount factors must be positive");
    if (!(tau > 0.0)) throw DomainError("accrual must be positive");
    std::vector<CreditSweepRow> rows;
    for (double lgd : lgds) {
        for (double q : qs) {
            const CreditParams p = CreditParams::from_lgd(lgd, q);
            p.validate();
            if (survival_factor(p) <= 0.0) throw DomainError("LGD*Q = 1 leaves no surviving value");
            const double fd = riskfree_forward(pd1, pd2, tau);
            rows.push_back({p, tau, pd1, pd2, fd + basis_over_riskfree(pd1, pd2, p, tau), fd});
        }
    }
    return rows;
}

void write_credit_sweep(std::ostream& out, const std::vector<CreditSweepRow>& rows) {
    out << "LGD,Q,tau,Pd1,Pd2,K_star_pct,Fd_pct,basis_bp\n";
    for (const auto& r : rows) {
        out << text::format_general(r.params.lgd(), 10) << ',' << text::format_general(r.params.default_probability, 10)
            << ',' << text::format_general(r.tau, 10) << ',' << text::format_general(r.pd1, 12) << ','
            << text::format_general(r.pd2, 12) << ',' << text::format_fixed(r.k_star * 100.0, 6) << ','
            << text::format_fixed(r.forward * 100.0, 6) << ',' << text::format_fixed(r.basis() * 1e4, 4) << '\n';
    }
}

}  // namespace mcurve
