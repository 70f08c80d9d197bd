#include "mcurve/market_data.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "mcurve/errors.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

namespace {

constexpr std::array<std::pair<QuoteKind, std::string_view>, 7> kCodes{{
    {QuoteKind::Deposit, "DEPO"},
    {QuoteKind::Fra, "FRA"},
    {QuoteKind::Ois, "OIS"},
    {QuoteKind::Swap, "SWAP"},
    {QuoteKind::BasisSwap, "BASIS"},
    {QuoteKind::Cds, "CDS"},
    {QuoteKind::EcbFacility, "ECB"},
}};

constexpr std::array<std::string_view, 7> kEcbKeys{
    ecb_key::deposit_facility, ecb_key::current_account,       ecb_key::required_reserves, ecb_key::eonia_volume,
    ecb_key::deposit_facility_rate, ecb_key::marginal_lending_rate, ecb_key::eonia,
};

constexpr double kPercent = 100.0;

bool is_period_keyed(QuoteKind kind) {
    return kind == QuoteKind::Deposit || kind == QuoteKind::Ois || kind == QuoteKind::Swap ||
           kind == QuoteKind::BasisSwap;
}

std::string canonical_tenor(QuoteKind kind, std::string_view tenor) {
    const std::string t = text::trim(tenor);
    if (t.empty()) return t;
    if (kind == QuoteKind::BasisSwap) {
        const auto slash = t.find('/');
        if (slash == std::string::npos) throw ParseError(0, "basis tenor must be 'short/long', got '" + t + "'");
        return Period::parse(std::string_view(t).substr(0, slash)).to_string() + "/" +
               Period::parse(std::string_view(t).substr(slash + 1)).to_string();
    }
    return Period::parse(t).to_string();
}

/// Decimal places between the file unit and the internal unit.
int file_shift(const InstrumentRef& id) {
    if (id.kind == QuoteKind::EcbFacility && !is_ecb_rate_key(id.key)) return 6;
    return -2;
}

// Scaling is done on the decimal text so "1.560" loads as the double nearest 0.0156.
double from_file(const InstrumentRef& id, std::string_view text) { return text::parse_scaled(text, file_shift(id)); }

std::string to_file(const InstrumentRef& id, double v) { return text::format_scaled(v, -file_shift(id)); }

}  // namespace

std::string_view to_code(QuoteKind kind) {
    for (const auto& [k, code] : kCodes) {
        if (k == kind) return code;
    }
    return "?";
}

QuoteKind parse_quote_kind(std::string_view code) {
    const std::string c = text::upper(text::trim(code));
    for (const auto& [k, name] : kCodes) {
        if (name == c) return k;
    }
    throw ParseError(0, "unknown quote kind '" + std::string(code) + "'");
}

bool is_ecb_rate_key(std::string_view key) {
    return key == ecb_key::deposit_facility_rate || key == ecb_key::marginal_lending_rate || key == ecb_key::eonia;
}

std::string canonical_key(QuoteKind kind, std::string_view key) {
    const std::string k = text::trim(key);
    if (k.empty()) throw ParseError(0, "empty instrument key");
    if (is_period_keyed(kind)) return Period::parse(k).to_string();
    if (kind == QuoteKind::Fra) return FraPeriod::parse(k).to_string();
    if (kind == QuoteKind::EcbFacility) {
        const std::string u = text::upper(k);
        if (std::find(kEcbKeys.begin(), kEcbKeys.end(), u) == kEcbKeys.end()) {
            throw ParseError(0, "unknown ECB key '" + k + "'");
        }
        return u;
    }
    return k;
}

InstrumentRef::InstrumentRef(QuoteKind kind_, std::string_view key_, std::string_view tenor_)
    : kind(kind_), key(canonical_key(kind_, key_)), tenor(canonical_tenor(kind_, tenor_)) {}

std::string InstrumentRef::label() const {
    std::string out = std::string(to_code(kind)) + "," + key;
    if (!tenor.empty()) out += "," + tenor;
    return out;
}

FraPeriod FraPeriod::parse(std::string_view key) {
    const std::string k = text::upper(text::trim(key));
    const auto x = k.find('X');
    if (x == std::string::npos) throw ParseError(0, "FRA key must look like 6Mx12M, got '" + std::string(key) + "'");
    FraPeriod p{Period::parse(std::string_view(k).substr(0, x)), Period::parse(std::string_view(k).substr(x + 1))};
    if (!p.start.months() || !p.end.months()) {
        throw ParseError(0, "FRA key needs month/year periods, got '" + std::string(key) + "'");
    }
    if (*p.start.months() >= *p.end.months()) {
        throw ParseError(0, "FRA start must precede end in '" + std::string(key) + "'");
    }
    return p;
}

std::string FraPeriod::to_string() const {
    return std::to_string(*start.months()) + "Mx" + std::to_string(*end.months()) + "M";
}

std::optional<Period> Quote::underlying_tenor() const {
    if (id.tenor.empty() || id.kind == QuoteKind::BasisSwap) return std::nullopt;
    return Period::parse(id.tenor);
}

std::pair<Period, Period> Quote::basis_tenors() const {
    const auto slash = id.tenor.find('/');
    if (id.kind != QuoteKind::BasisSwap || slash == std::string::npos) {
        throw ConfigurationError(id.label() + " carries no basis tenor pair");
    }
    return {Period::parse(std::string_view(id.tenor).substr(0, slash)),
            Period::parse(std::string_view(id.tenor).substr(slash + 1))};
}

// ---------------------------------------------------------------------------

void QuoteSet::insert(Quote q) {
    if (asof_ && *asof_ != q.asof) {
        throw ConfigurationError(q.id.label() + " has as-of " + q.asof.iso() + ", expected " + asof_->iso());
    }
    if (!std::isfinite(q.value)) throw DomainError(q.id.label() + " has a non-finite value");
    if (quotes_.contains(q.id)) throw DuplicateQuoteError("duplicate quote " + q.id.label());
    asof_ = q.asof;
    auto id = q.id;
    quotes_.emplace(std::move(id), std::move(q));
}

const Quote* QuoteSet::find(const InstrumentRef& id) const {
    auto it = quotes_.find(id);
    return it == quotes_.end() ? nullptr : &it->second;
}

const Quote* QuoteSet::find(QuoteKind kind, std::string_view key) const {
    const std::string k = canonical_key(kind, key);
    for (const auto& [id, q] : quotes_) {
        if (id.kind == kind && id.key == k) return &q;
    }
    return nullptr;
}

const Quote& QuoteSet::at(const InstrumentRef& id) const {
    if (const Quote* q = find(id)) return *q;
    throw ConfigurationError("missing quote " + id.label());
}

std::vector<const Quote*> QuoteSet::of_kind(QuoteKind kind) const {
    std::vector<const Quote*> out;
    for (const auto& [id, q] : quotes_) {
        if (id.kind == kind) out.push_back(&q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

constexpr std::string_view kHeader = "kind,key,value,tenor,asof";

template <typename Sink>
void read_rows(std::istream& in, Sink&& sink) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = text::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        if (!header_seen) {
            std::string compact;
            for (char c : trimmed) {
                if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(char(std::tolower(static_cast<unsigned char>(c))));
            }
            if (compact != kHeader) throw ParseError(line_no, "expected header '" + std::string(kHeader) + "'");
            header_seen = true;
            continue;
        }
        const auto fields = text::split(trimmed, ',');
        if (fields.size() != 5) {
            throw ParseError(line_no, "expected 5 fields, got " + std::to_string(fields.size()));
        }
        Quote q;
        try {
            q.id = InstrumentRef(parse_quote_kind(fields[0]), fields[1], fields[3]);
            q.value = from_file(q.id, fields[2]);
            q.asof = CivilDate::parse(text::trim(fields[4]));
        } catch (const ParseError& e) {
            throw ParseError(line_no, e.what());
        }
        if (!std::isfinite(q.value)) throw ParseError(line_no, "non-finite value");
        try {
            sink(std::move(q));
        } catch (const DuplicateQuoteError& e) {
            throw DuplicateQuoteError("line " + std::to_string(line_no) + ": " + e.what());
        } catch (const ConfigurationError& e) {
            throw ParseError(line_no, e.what());
        }
    }
}

}  // namespace

QuoteSet load_quotes(std::istream& in) {
    QuoteSet out;
    read_rows(in, [&](Quote q) { out.insert(std::move(q)); });
    return out;
}

std::map<CivilDate, QuoteSet> load_quote_history(std::istream& in) {
    std::map<CivilDate, QuoteSet> out;
    read_rows(in, [&](Quote q) {
        auto [it, inserted] = out.try_emplace(q.asof, q.asof);
        it->second.insert(std::move(q));
    });
    return out;
}

void write_quotes(std::ostream& out, const QuoteSet& q) {
    out << kHeader << '\n';
    for (const auto& [id, quote] : q) {
        out << to_code(id.kind) << ',' << id.key << ',' << to_file(id, quote.value) << ',' << id.tenor << ','
            << quote.asof.iso() << '\n';
    }
}

QuoteSet merge(std::span<const QuoteSet> sets) {
    QuoteSet out;
    for (const auto& s : sets) {
        for (const auto& [id, q] : s) out.insert(q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation

std::size_t ValidationReport::error_count() const {
    return std::size_t(std::count_if(findings.begin(), findings.end(),
                                     [](const Finding& f) { return f.severity == Severity::Error; }));
}

std::size_t ValidationReport::warning_count() const { return findings.size() - error_count(); }

ValidationReport validate_quotes(const QuoteSet& q, const ValidationOptions& options,
                                 std::span<const InstrumentRef> required) {
    ValidationReport report;
    for (const auto& [id, quote] : q) {
        const bool amount = id.kind == QuoteKind::EcbFacility && !is_ecb_rate_key(id.key);
        if (amount && quote.value < 0.0) {
            report.findings.push_back({Severity::Error, FindingKind::Range, id.label(), "negative amount"});
        } else if (!amount && id.kind != QuoteKind::BasisSwap && quote.value < options.rate_floor) {
            report.findings.push_back({Severity::Error, FindingKind::Range, id.label(),
                                       "rate " + text::format_general(quote.value * kPercent, 6) +
                                           "% below floor " + text::format_general(options.rate_floor * kPercent, 6) +
                                           "%"});
        }
    }

    auto deposits = q.of_kind(QuoteKind::Deposit);
    std::sort(deposits.begin(), deposits.end(), [](const Quote* a, const Quote* b) {
        return Period::parse(a->id.key) < Period::parse(b->id.key);
    });
    for (std::size_t i = 1; i < deposits.size(); ++i) {
        if (deposits[i]->value < deposits[i - 1]->value) {
            report.findings.push_back({Severity::Warning, FindingKind::NonMonotone, deposits[i]->id.label(),
                                       "deposit strip decreases after " + deposits[i - 1]->id.key});
        }
    }

    for (const auto& id : required) {
        if (!q.find(id)) {
            report.findings.push_back({Severity::Error, FindingKind::Missing, id.label(), "required instrument missing"});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// ECB

void EcbSnapshot::validate() const {
    if (deposit_facility_amount < 0.0 || current_account_amount < 0.0 || required_reserves < 0.0 ||
        eonia_volume < 0.0) {
        throw DomainError("ECB snapshot " + date.iso() + " has a negative amount");
    }
    if (marginal_lending_rate < deposit_facility_rate) {
        throw DomainError("ECB snapshot " + date.iso() + " has marginal lending rate below deposit facility rate");
    }
}

EcbSnapshot ecb_snapshot(const QuoteSet& q, std::span<const std::string_view> required) {
    EcbSnapshot s;
    if (q.asof()) s.date = *q.asof();
    auto get = [&](std::string_view key) {
        if (const Quote* quote = q.find(QuoteKind::EcbFacility, key)) return quote->value;
        if (std::find(required.begin(), required.end(), key) != required.end()) {
            throw ConfigurationError("missing ECB quote " + std::string(key) +
                                     (q.asof() ? " on " + q.asof()->iso() : std::string{}));
        }
        return 0.0;
    };
    s.deposit_facility_amount = get(ecb_key::deposit_facility);
    s.current_account_amount = get(ecb_key::current_account);
    s.required_reserves = get(ecb_key::required_reserves);
    s.eonia_volume = get(ecb_key::eonia_volume);
    s.deposit_facility_rate = get(ecb_key::deposit_facility_rate);
    s.marginal_lending_rate = get(ecb_key::marginal_lending_rate);
    s.eonia_fixing = get(ecb_key::eonia);
    return s;
}

}  // namespace mcurve
