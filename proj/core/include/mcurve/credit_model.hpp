#pragma once

#include <iosfwd>
#include <vector>

#include "mcurve/date.hpp"
#include "mcurve/daycount.hpp"

namespace mcurve {

/// Recovery of the average Libor bank and its forward default probability over [T1, T2].
struct CreditParams {
    double recovery = 1.0;
    double default_probability = 0.0;

    static CreditParams from_lgd(double lgd, double q) { return {1.0 - lgd, q}; }
    double lgd() const noexcept { return 1.0 - recovery; }
    /// Throws DomainError unless both recovery and Q lie in [0, 1].
    void validate() const;
};

/// R = 1 - LGD * Q, in [0, 1].
double survival_factor(const CreditParams& p);

/// P_x = P_d * R.
double risky_bond_price(double discount, const CreditParams& p);

/// (1/P_x - 1)/tau. Throws DomainError unless P_x > 0 and tau > 0.
double risky_libor(double risky_discount, double tau);
/// 1/(1 + L*tau), the inverse of risky_libor.
double discount_from_libor(double libor, double tau);

enum class FraStyle { Standard, Market };

struct FraContract {
    CivilDate fixing;
    CivilDate payment;
    double strike = 0.0;
    double notional = 1.0;
    /// +1 payer, -1 receiver of the fixed rate.
    int omega = +1;
    FraStyle style = FraStyle::Standard;
    /// tau(T1, T2).
    double accrual = 0.0;
};

/// Builds a contract with the accrual from `dc`. Throws OrderingError unless T1 < T2.
FraContract make_fra(CivilDate T1, CivilDate T2, double strike, DayCount dc = DayCount::Act360,
                     FraStyle style = FraStyle::Standard, double notional = 1.0, int omega = +1);

/// N*omega*[P_d1/R - P_d2*(1 + K*tau)].
double fra_std_price(const FraContract& c, double pd1, double pd2, const CreditParams& p);
/// N*omega*[P_d1 - P_d2*(1 + K*tau)*R], i.e. the standard price times R.
double fra_mkt_price(const FraContract& c, double pd1, double pd2, const CreditParams& p);
/// Dispatches on the contract style.
double fra_price(const FraContract& c, double pd1, double pd2, const CreditParams& p);

/// K* = [(P_d1/P_d2)/R - 1]/tau, zeroing both styles.
double fra_equilibrium_rate(double pd1, double pd2, const CreditParams& p, double tau);

/// Risk-free forward (P_d1/P_d2 - 1)/tau.
double riskfree_forward(double pd1, double pd2, double tau);

/// K* - F_d >= 0.
double basis_over_riskfree(double pd1, double pd2, const CreditParams& p, double tau);

struct CreditSweepRow {
    CreditParams params;
    double tau = 0.0;
    double pd1 = 0.0;
    double pd2 = 0.0;
    double k_star = 0.0;
    double forward = 0.0;

    double basis() const noexcept { return k_star - forward; }
};

/// Every combination of the LGD and Q grids on one pair of discount factors, LGD-major.
std::vector<CreditSweepRow> credit_sweep(const std::vector<double>& lgds, const std::vector<double>& qs, double pd1,
                                         double pd2, double tau);

/// `LGD,Q,tau,Pd1,Pd2,K_star_pct,Fd_pct,basis_bp`.
void write_credit_sweep(std::ostream& out, const std::vector<CreditSweepRow>& rows);

}  // namespace mcurve
