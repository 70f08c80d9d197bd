#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcurve/date.hpp"

namespace mcurve {

enum class QuoteKind { Deposit, Fra, Ois, Swap, BasisSwap, Cds, EcbFacility };

/// CSV codes: DEPO, FRA, OIS, SWAP, BASIS, CDS, ECB.
std::string_view to_code(QuoteKind kind);
QuoteKind parse_quote_kind(std::string_view code);

/// Identity of a quoted instrument. `key` and `tenor` are held in canonical text form
/// (see canonical_key), so "OIS,12M" and "OIS,1Y" name the same instrument.
struct InstrumentRef {
    QuoteKind kind = QuoteKind::Deposit;
    std::string key;
    std::string tenor;

    InstrumentRef() = default;
    /// Throws ParseError if the key or tenor text is malformed for the kind.
    InstrumentRef(QuoteKind kind, std::string_view key, std::string_view tenor = {});

    /// "KIND,key" or "KIND,key,tenor".
    std::string label() const;

    friend auto operator<=>(const InstrumentRef&, const InstrumentRef&) = default;
    friend bool operator==(const InstrumentRef&, const InstrumentRef&) = default;
};

/// Start and end of an FRA key such as "6Mx12M".
struct FraPeriod {
    Period start;
    Period end;

    /// Throws ParseError; requires start < end.
    static FraPeriod parse(std::string_view key);
    /// Months form, e.g. "6Mx12M".
    std::string to_string() const;
};

/// ECB keys recognised in ECB rows.
namespace ecb_key {
inline constexpr std::string_view deposit_facility = "DEPOSIT_FACILITY";
inline constexpr std::string_view current_account = "CURRENT_ACCOUNT";
inline constexpr std::string_view required_reserves = "REQUIRED_RESERVES";
inline constexpr std::string_view eonia_volume = "EONIA_VOLUME";
inline constexpr std::string_view deposit_facility_rate = "DEPOSIT_FACILITY_RATE";
inline constexpr std::string_view marginal_lending_rate = "MARGINAL_LENDING_RATE";
inline constexpr std::string_view eonia = "EONIA";
}  // namespace ecb_key

/// True for ECB keys carrying a rate (percent in files) rather than an amount (EUR millions in files).
bool is_ecb_rate_key(std::string_view key);

/// A single market observation. Rates are decimal fractions; ECB amounts are EUR.
struct Quote {
    InstrumentRef id;
    double value = 0.0;
    CivilDate asof;

    /// Underlying index tenor from the tenor column, if any.
    std::optional<Period> underlying_tenor() const;
    /// Basis swaps carry "short/long" in the tenor column.
    std::pair<Period, Period> basis_tenors() const;

    friend bool operator==(const Quote&, const Quote&) = default;
};

/// Quotes sharing one as-of date, at most one per instrument.
class QuoteSet {
public:
    QuoteSet() = default;
    explicit QuoteSet(CivilDate asof) : asof_(asof) {}

    std::optional<CivilDate> asof() const noexcept { return asof_; }

    /// Throws DuplicateQuoteError, or ConfigurationError when the quote's as-of differs.
    void insert(Quote q);

    /// Exact lookup.
    const Quote* find(const InstrumentRef& id) const;
    /// First quote of `kind` whose key matches, whatever its tenor column.
    const Quote* find(QuoteKind kind, std::string_view key) const;
    /// Throws ConfigurationError if absent.
    const Quote& at(const InstrumentRef& id) const;

    std::vector<const Quote*> of_kind(QuoteKind kind) const;

    std::size_t size() const noexcept { return quotes_.size(); }
    bool empty() const noexcept { return quotes_.empty(); }

    auto begin() const { return quotes_.begin(); }
    auto end() const { return quotes_.end(); }

    friend bool operator==(const QuoteSet&, const QuoteSet&) = default;

private:
    std::optional<CivilDate> asof_;
    std::map<InstrumentRef, Quote> quotes_;
};

/// Parses the `kind,key,value,tenor,asof` CSV. Blank lines and lines starting with '#' are skipped.
/// Rows must share one as-of date. Throws ParseError (with line), DuplicateQuoteError.
QuoteSet load_quotes(std::istream& in);

/// Same schema, rows may span several as-of dates; returns one QuoteSet per date.
std::map<CivilDate, QuoteSet> load_quote_history(std::istream& in);

/// Writes the CSV schema back. Numbers are emitted in the shortest form that re-loads to the same double.
void write_quotes(std::ostream& out, const QuoteSet& q);

/// Merges quote sets sharing an as-of. Throws DuplicateQuoteError / ConfigurationError.
QuoteSet merge(std::span<const QuoteSet> sets);

// ---------------------------------------------------------------------------
// Validation

enum class Severity { Warning, Error };
enum class FindingKind { Range, NonMonotone, Missing };

struct Finding {
    Severity severity = Severity::Error;
    FindingKind kind = FindingKind::Range;
    std::string instrument;
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> findings;

    std::size_t error_count() const;
    std::size_t warning_count() const;
    bool ok() const { return error_count() == 0; }
};

struct ValidationOptions {
    /// Rates below this floor are range errors. -1.0 means -100%.
    double rate_floor = -1.0;
};

/// Range errors for rates below the floor and negative ECB amounts, warnings for non-monotone
/// deposit strips, and missing-instrument errors against `required`.
ValidationReport validate_quotes(const QuoteSet& q, const ValidationOptions& options = {},
                                 std::span<const InstrumentRef> required = {});

// ---------------------------------------------------------------------------
// ECB data

/// One day of ECB standing-facility and reserve data. Amounts in EUR, rates as fractions.
struct EcbSnapshot {
    CivilDate date;
    double deposit_facility_amount = 0.0;
    double current_account_amount = 0.0;
    double required_reserves = 0.0;
    double deposit_facility_rate = 0.0;
    double marginal_lending_rate = 0.0;
    double eonia_fixing = 0.0;
    double eonia_volume = 0.0;

    /// Throws DomainError on negative amounts or an inverted corridor.
    void validate() const;
};

/// Pulls the ECB rows of a quote set into a snapshot. Missing rows default to zero unless
/// listed in `required`; a missing required key throws ConfigurationError.
EcbSnapshot ecb_snapshot(const QuoteSet& q, std::span<const std::string_view> required = {});

/// Canonical spelling of a quote key for a kind (period keys canonicalised, FRA keys in months).
std::string canonical_key(QuoteKind kind, std::string_view key);

}  // namespace mcurve
