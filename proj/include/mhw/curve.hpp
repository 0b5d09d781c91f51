#pragma once

#include <vector>

#include "mhw/date.hpp"
#include "mhw/schedule.hpp"

namespace mhw {

enum class Interpolation {
  // Linear in log discount on Act/365 time, i.e. piecewise-flat instantaneous
  // forwards; the last forward extrapolates flat.
  LinearLogDiscount,
};

// Dated discount-factor term structure. The reference date carries discount
// factor 1 and is prepended as the first pillar. Immutable once built.
class Curve {
 public:
  Curve() = default;
  Curve(Date reference, std::vector<Date> pillar_dates, std::vector<double> discount_factors,
        Interpolation interpolation = Interpolation::LinearLogDiscount);

  Date reference_date() const { return ref_; }

  // Act/365 year fraction from the reference date.
  double time(Date d) const;

  double df(Date d) const;

  // Pillars including the reference date row.
  const std::vector<Date>& pillar_dates() const { return dates_; }
  std::vector<double> pillar_discounts() const;

  Interpolation interpolation() const { return interp_; }

 private:
  double log_df_at(double t) const;

  Date ref_;
  std::vector<Date> dates_;
  std::vector<double> times_;
  std::vector<double> log_dfs_;
  Interpolation interp_ = Interpolation::LinearLogDiscount;
};

// Term structure of fictitious discounts encoding forward Libor rates of a
// fixed tenor (6m in the Euro market).
struct PseudoCurve {
  Curve curve;
  int tenor_months = 6;

  Date reference_date() const { return curve.reference_date(); }
  double df(Date d) const { return curve.df(d); }
};

// B(t0; t1, t2) = B(t0,t2) / B(t0,t1), requires t0 <= t1 <= t2.
double forward_discount(const Curve& c, Date t1, Date t2);

// Multiplicative basis between the two curves over [t1, t2].
double spread(const Curve& disc, const PseudoCurve& pseudo, Date t1, Date t2);

// Spread over [T, T + tenor] with the pseudo-curve's own tenor, end date
// rolled modified-following.
double spread(const Curve& disc, const PseudoCurve& pseudo, Date t);

// Forward basis point value: sum of accrual-weighted forward discounts from
// the leg start to each payment date.
double bpv(const Curve& disc, const LegSchedule& fixed);

// Expected floating-leg flows in units of the leg-start forward numeraire:
// 1 - B(start, end) plus the spread correction sum. Equals the spot value
// when the leg starts at the curve reference.
double floating_leg_value(const Curve& disc, const PseudoCurve& pseudo,
                          const LegSchedule& floating);

// Forward par rate: floating_leg_value / bpv.
double swap_rate(const Curve& disc, const PseudoCurve& pseudo, const LegSchedule& fixed,
                 const LegSchedule& floating);

}  // namespace mhw
