#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "mcurve/bootstrap.hpp"
#include "mcurve/credit_model.hpp"
#include "mcurve/csa_engine.hpp"
#include "mcurve/errors.hpp"
#include "mcurve/market_data.hpp"
#include "mcurve/replication.hpp"
#include "mcurve/risk_indices.hpp"
#include "mcurve/text.hpp"
#include "mcurve/vol_converter.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace mcurve::cli {
namespace {

class MissingFileError : public Error {
public:
    explicit MissingFileError(const fs::path& p) : Error("missing file: " + p.string()) {}
};

std::ifstream open_input(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw MissingFileError(p);
    return in;
}

fs::path resolve(const RunConfig& cfg, const std::string& p) {
    const fs::path path(p);
    return path.is_absolute() ? path : cfg.base_dir / path;
}

template <class T>
T get_or(const json& section, const char* key, T fallback) {
    if (!section.contains(key)) return fallback;
    try {
        return section.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigurationError(std::string("config key '") + key + "': " + e.what());
    }
}

const json& section(const RunConfig& cfg, const char* name) {
    static const json empty = json::object();
    return cfg.sections.contains(name) ? cfg.sections.at(name) : empty;
}

// ---------------------------------------------------------------------------
// Inputs

QuoteSet load_all_quotes(const RunConfig& cfg) {
    if (cfg.quotes.empty()) throw ConfigurationError(cfg.command + " needs at least one quote file");
    std::vector<QuoteSet> sets;
    for (const auto& p : cfg.quotes) {
        auto in = open_input(p);
        sets.push_back(load_quotes(in));
    }
    QuoteSet q = merge(sets);
    if (cfg.asof && q.asof() && *q.asof() != *cfg.asof) {
        throw ConfigurationError("quotes are as of " + q.asof()->iso() + ", run is as of " +
                                 cfg.asof->iso());
    }
    return q;
}

std::map<CivilDate, QuoteSet> load_history(const RunConfig& cfg) {
    if (cfg.quotes.empty()) throw ConfigurationError(cfg.command + " needs at least one quote file");
    std::map<CivilDate, std::vector<QuoteSet>> by_date;
    for (const auto& p : cfg.quotes) {
        auto in = open_input(p);
        for (auto& [d, q] : load_quote_history(in)) by_date[d].push_back(std::move(q));
    }
    std::map<CivilDate, QuoteSet> out;
    for (auto& [d, sets] : by_date) {
        if (cfg.asof && d > *cfg.asof) continue;
        out.emplace(d, merge(sets));
    }
    return out;
}

/// `date,<value>` rows; values are multiplied by 10^pow10 exactly as written.
DatedSeries read_dated_csv(const fs::path& p, int pow10) {
    auto in = open_input(p);
    DatedSeries s;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = text::trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (!header) {
            header = true;
            continue;
        }
        const auto f = text::split(t, ',');
        try {
            if (f.size() != 2) throw ParseError(0, "expected date,value");
            s.push_back({CivilDate::parse(text::trim(f[0])), text::parse_scaled(f[1], pow10)});
        } catch (const ParseError& e) {
            throw ParseError(line_no, p.filename().string() + ": " + e.what());
        } catch (const Error& e) {
            throw ParseError(line_no, p.filename().string() + ": " + e.what());
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Outputs

class Outputs {
public:
    Outputs(const RunConfig& cfg, std::ostream& log) : dir_(cfg.out_dir), log_(log) { fs::create_directories(dir_); }

    template <class Writer>
    void write(const std::string& name, Writer&& writer) {
        std::ostringstream buf;
        writer(buf);
        const fs::path p = dir_ / name;
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        out << buf.str();
        if (!out) throw Error("cannot write " + p.string());
        const std::string s = buf.str();
        log_ << "wrote " << p.string() << " (" << std::count(s.begin(), s.end(), '\n') << " lines)\n";
    }

private:
    fs::path dir_;
    std::ostream& log_;
};

// ---------------------------------------------------------------------------
// Curves

struct BuiltCurve {
    std::string name;
    Curve curve;
};

std::vector<BuiltCurve> build_curves(const QuoteSet& q, const RunConfig& cfg, const std::vector<std::string>& names) {
    std::vector<BootstrapRecipe> recipes;
    for (const auto& n : names) recipes.push_back(recipe_by_name(n, q, cfg.conventions));
    // Discounting first: every forwarding curve is stripped against it.
    std::stable_partition(recipes.begin(), recipes.end(),
                          [](const BootstrapRecipe& r) { return r.target.kind == CurveKind::Discounting; });
    std::vector<BuiltCurve> out;
    out.reserve(recipes.size());
    const Curve* disc = nullptr;
    for (const auto& r : recipes) {
        if (r.target.kind == CurveKind::Discounting) {
            if (disc) throw ConfigurationError("more than one discounting recipe");
            out.push_back({r.name, bootstrap_discount(q, r)});
            disc = &out.back().curve;
        } else {
            if (!disc) throw ConfigurationError("recipe " + r.name + " needs a discounting recipe in the same run");
            out.push_back({r.name, bootstrap_forward(r.target.tenor, q, *disc, r)});
        }
    }
    return out;
}

CurveSet curve_set(const std::vector<BuiltCurve>& built) {
    CurveSet s;
    for (const auto& b : built) s.add(b.curve);
    return s;
}

std::vector<std::string> with_recipe(std::vector<std::string> names, const std::string& extra) {
    if (std::find(names.begin(), names.end(), extra) == names.end()) names.push_back(extra);
    return names;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_bootstrap(const RunConfig& cfg, Outputs& out, std::ostream&) {
    const QuoteSet q = load_all_quotes(cfg);
    for (const auto& b : build_curves(q, cfg, cfg.recipes)) {
        out.write("curve_" + b.name + ".csv", [&](std::ostream& o) { write_curve(o, b.curve); });
    }
    return kOk;
}

int cmd_replicate(const RunConfig& cfg, Outputs& out, std::ostream& err) {
    const auto rows = replication_report(load_all_quotes(cfg), cfg.conventions);
    out.write("replication.csv", [&](std::ostream& o) { write_replication_report(o, rows); });
    int failed = 0;
    for (const auto& r : rows) {
        if (r.ok()) continue;
        ++failed;
        err << "error: " << to_string(r.panel) << ' ' << r.key << ": " << r.error << '\n';
    }
    return failed ? kRowErrors : kOk;
}

int cmd_basis_matrix(const RunConfig& cfg, Outputs& out, std::ostream&) {
    const json& s = section(cfg, "basis_matrix");
    std::vector<Period> maturities;
    for (const auto& m : get_or<std::vector<std::string>>(s, "maturities", {"1Y", "2Y", "3Y", "4Y", "5Y", "7Y", "10Y",
                                                                             "15Y", "20Y", "30Y"})) {
        maturities.push_back(Period::parse(m));
    }
    std::vector<std::pair<Period, Period>> pairs;
    for (const auto& p : get_or<std::vector<std::string>>(s, "pairs", {"ON/3M", "ON/6M", "3M/6M"})) {
        const auto parts = text::split(p, '/');
        if (parts.size() != 2) throw ConfigurationError("tenor pair '" + p + "' is not short/long");
        pairs.emplace_back(Period::parse(parts[0]), Period::parse(parts[1]));
    }
    const QuoteSet q = load_all_quotes(cfg);
    const CurveSet curves = curve_set(build_curves(q, cfg, cfg.recipes));
    const BasisMatrix m = basis_matrix(maturities, pairs, curves, cfg.conventions);
    out.write("basis_matrix.csv", [&](std::ostream& o) { write_basis_matrix(o, m); });
    return kOk;
}

int cmd_credit_sweep(const RunConfig& cfg, Outputs& out, std::ostream&) {
    const json& s = section(cfg, "credit_sweep");
    const auto rows = credit_sweep(get_or<std::vector<double>>(s, "lgd", {0.6}),
                                   get_or<std::vector<double>>(s, "q", {0.0, 0.05, 0.1}), get_or(s, "pd1", 0.99),
                                   get_or(s, "pd2", 0.97), get_or(s, "tau", 0.5));
    out.write("credit_sweep.csv", [&](std::ostream& o) { write_credit_sweep(o, rows); });
    return kOk;
}

int cmd_csa_sim(const RunConfig& cfg, Outputs& out, std::ostream&) {
    const json& s = section(cfg, "csa_sim");
    if (!s.contains("fixings")) throw ConfigurationError("csa_sim.fixings (date,rate_pct CSV) is required");
    const DatedSeries rc = read_dated_csv(resolve(cfg, get_or<std::string>(s, "fixings", "")), -2);
    DatedSeries npv;
    if (s.contains("npv")) {
        npv = read_dated_csv(resolve(cfg, get_or<std::string>(s, "npv", "")), 0);
    } else if (s.contains("payoff")) {
        npv = deterministic_npv_path(get_or(s, "payoff", 0.0), rc);
    } else {
        throw ConfigurationError("csa_sim needs either payoff or npv");
    }
    out.write("collateral_ledger.csv", [&](std::ostream& o) { write_collateral_ledger(o, simulate_margination(npv, rc)); });
    return kOk;
}

int cmd_indices(const RunConfig& cfg, Outputs& out, std::ostream& err) {
    const json& s = section(cfg, "indices");
    const double tail = get_or(s, "tail", 0.15);
    const auto window = get_or<std::size_t>(s, "window", 0);
    const auto history = load_history(cfg);

    std::vector<IndexPoint> cds, liquidity;
    std::vector<std::pair<EcbSnapshot, CorridorCheck>> corridor;
    int failed = 0;
    auto fail = [&](CivilDate d, const std::string& what, const std::exception& e) {
        ++failed;
        err << "error: " << d.iso() << ' ' << what << ": " << e.what() << '\n';
    };
    const std::string_view rate_keys[] = {ecb_key::deposit_facility_rate, ecb_key::marginal_lending_rate,
                                          ecb_key::eonia};
    for (const auto& [date, q] : history) {
        if (!q.of_kind(QuoteKind::Cds).empty()) {
            try {
                cds.push_back(trimmed_mean_index(panel_from_quotes(q), tail));
            } catch (const Error& e) {
                fail(date, "CDS index", e);
            }
        }
        if (q.of_kind(QuoteKind::EcbFacility).empty()) continue;
        try {
            const EcbSnapshot snap = ecb_snapshot(q);
            snap.validate();
            liquidity.push_back(liquidity_surplus_index(snap));
            const bool have_rates = std::all_of(std::begin(rate_keys), std::end(rate_keys), [&](std::string_view k) {
                return q.find(QuoteKind::EcbFacility, k) != nullptr;
            });
            if (have_rates) {
                corridor.emplace_back(snap, corridor_check(snap));
                if (!corridor.back().second.inside) err << "warning: " << corridor.back().second.detail << '\n';
            }
        } catch (const Error& e) {
            fail(date, "ECB snapshot", e);
        }
    }

    out.write("cds_index.csv", [&](std::ostream& o) { write_index_series(o, cds, 100.0, 4); });
    out.write("liquidity_index.csv", [&](std::ostream& o) { write_index_series(o, liquidity, 1e-6, 2); });
    if (window > 0) {
        DatedSeries raw;
        for (const auto& p : liquidity) raw.push_back({p.date, p.value});
        std::vector<IndexPoint> ma;
        for (const auto& p : moving_average(raw, window)) ma.push_back({p.date, p.value, window});
        out.write("liquidity_index_ma.csv", [&](std::ostream& o) { write_index_series(o, ma, 1e-6, 2); });
    }
    out.write("corridor.csv", [&](std::ostream& o) {
        o << "date,deposit_facility_pct,eonia_pct,marginal_lending_pct,inside\n";
        for (const auto& [snap, check] : corridor) {
            o << snap.date.iso() << ',' << text::format_fixed(snap.deposit_facility_rate * 100, 4) << ','
              << text::format_fixed(snap.eonia_fixing * 100, 4) << ','
              << text::format_fixed(snap.marginal_lending_rate * 100, 4) << ',' << (check.inside ? 1 : 0) << '\n';
        }
    });
    return failed ? kRowErrors : kOk;
}

int cmd_vol_convert(const RunConfig& cfg, Outputs& out, std::ostream&) {
    const json& s = section(cfg, "vol_convert");
    if (!s.contains("grid")) throw ConfigurationError("vol_convert.grid (forward-premium grid) is required");
    auto in = open_input(resolve(cfg, get_or<std::string>(s, "grid", "")));
    const SwaptionGrid grid = read_swaption_grid(in);
    const Period index = Period::parse(get_or<std::string>(s, "index", "6M"));
    const std::string discounting = text::upper(get_or<std::string>(s, "discounting", "eonia"));
    if (discounting != "EONIA" && discounting != "EURIBOR") {
        throw ConfigurationError("vol_convert.discounting must be eonia or euribor");
    }

    const QuoteSet q = load_all_quotes(cfg);
    std::string fwd_name = "euribor" + index.to_string();
    std::transform(fwd_name.begin(), fwd_name.end(), fwd_name.begin(), [](unsigned char c) { return std::tolower(c); });
    const CurveSet curves = curve_set(build_curves(q, cfg, with_recipe({"eonia"}, fwd_name)));
    const Curve& fwd = curves.forwarding(index);
    const Curve disc = discounting == "EONIA" ? curves.discount() : fwd.with_role(CurveRole::discounting());

    const GridConversion g = convert_forward_premia(grid, index, fwd, disc, cfg.conventions);
    out.write("spot_premia.csv", [&](std::ostream& o) { write_swaption_grid(o, g.spot_premia); });
    out.write("vols.csv", [&](std::ostream& o) { write_swaption_grid(o, g.vols); });
    return kOk;
}

using Command = int (*)(const RunConfig&, Outputs&, std::ostream&);

const std::map<std::string, Command, std::less<>>& command_table() {
    static const std::map<std::string, Command, std::less<>> t{
        {"bootstrap", cmd_bootstrap},       {"replicate-fra", cmd_replicate}, {"basis-matrix", cmd_basis_matrix},
        {"credit-sweep", cmd_credit_sweep}, {"csa-sim", cmd_csa_sim},         {"indices", cmd_indices},
        {"vol-convert", cmd_vol_convert}};
    return t;
}

SwapConventions parse_conventions(const json& c, SwapConventions conv) {
    for (const auto& [key, value] : c.items()) {
        if (!value.is_string() && key != "spot_lag") throw ConfigurationError("conventions." + key + " must be a string");
        if (key == "calendar") conv.calendar = Calendar::by_name(value.get<std::string>());
        else if (key == "spot_lag") conv.spot_lag = get_or(c, "spot_lag", conv.spot_lag);
        else if (key == "business_day_convention") conv.bdc = parse_business_day_convention(value.get<std::string>());
        else if (key == "fixed_frequency") conv.fixed_frequency = Period::parse(value.get<std::string>());
        else if (key == "fixed_day_count") conv.fixed_day_count = parse_day_count(value.get<std::string>());
        else if (key == "float_day_count") conv.float_day_count = parse_day_count(value.get<std::string>());
        else throw ConfigurationError("unknown conventions key '" + key + "'");
    }
    if (conv.spot_lag < 0) throw ConfigurationError("conventions.spot_lag must be non-negative");
    return conv;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const MissingFileError*>(&e)) return kMissingFile;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DuplicateQuoteError*>(&e) ||
        dynamic_cast<const json::exception*>(&e)) {
        return kSchema;
    }
    if (dynamic_cast<const CalibrationError*>(&e)) return kCalibration;
    if (dynamic_cast<const ConfigurationError*>(&e)) return kUsage;
    return kFailure;
}

}  // namespace

void apply_config(RunConfig& cfg, const json& doc) {
    if (!doc.is_object()) throw ConfigurationError("config must be a JSON object");
    static const std::set<std::string> sections{"basis_matrix", "credit_sweep", "csa_sim", "indices", "vol_convert"};
    for (const auto& [key, value] : doc.items()) {
        if (key == "command") cfg.command = get_or<std::string>(doc, "command", cfg.command);
        else if (key == "asof") cfg.asof = CivilDate::parse(get_or<std::string>(doc, "asof", ""));
        else if (key == "quotes") {
            cfg.quotes.clear();
            for (const auto& p : get_or<std::vector<std::string>>(doc, "quotes", {})) cfg.quotes.push_back(resolve(cfg, p));
        } else if (key == "conventions") {
            if (!value.is_object()) throw ConfigurationError("conventions must be an object");
            try {
                cfg.conventions = parse_conventions(value, cfg.conventions);
            } catch (const ParseError& e) {
                throw ConfigurationError(std::string("conventions: ") + e.what());
            }
        } else if (key == "recipes") cfg.recipes = get_or<std::vector<std::string>>(doc, "recipes", {});
        else if (key == "out") cfg.out_dir = resolve(cfg, get_or<std::string>(doc, "out", "."));
        else if (sections.count(key)) {
            if (!value.is_object()) throw ConfigurationError(key + " must be an object");
            cfg.sections[key] = value;
        } else {
            throw ConfigurationError("unknown config key '" + key + "'");
        }
    }
}

int run(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
    const auto& table = command_table();
    const auto it = table.find(cfg.command);
    if (it == table.end()) {
        err << "error: unknown command '" << cfg.command << "'\n";
        return kUsage;
    }
    try {
        Outputs out(cfg, log);
        return it->second(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int main_with_args(int argc, const char* const* argv, std::ostream& log, std::ostream& err) {
    CLI::App app{"Multi-curve EUR rates analytics, batch mode"};
    std::string positional, command, asof, config, out;
    std::vector<std::string> quotes;
    app.add_option("name", positional, "Command to run")->check(CLI::IsMember(commands()));
    app.add_option("--command", command, "Command to run (alternative to the positional form)")
        ->check(CLI::IsMember(commands()));
    app.add_option("--asof", asof, "Valuation date, YYYY-MM-DD");
    app.add_option("--quotes", quotes, "Quote CSV; repeat for several files");
    app.add_option("--config", config, "JSON run configuration");
    app.add_option("--out", out, "Output directory");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        log << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (!positional.empty()) {
        if (!command.empty() && command != positional) {
            err << "error: command given twice ('" << positional << "' and '" << command << "')\n";
            return kUsage;
        }
        command = positional;
    }

    RunConfig cfg;
    try {
        if (!config.empty()) {
            const fs::path path(config);
            cfg.base_dir = path.parent_path().empty() ? fs::path(".") : path.parent_path();
            auto in = open_input(path);
            apply_config(cfg, json::parse(in));
        }
        if (!command.empty()) cfg.command = command;
        if (!asof.empty()) cfg.asof = CivilDate::parse(asof);
        if (!quotes.empty()) cfg.quotes.assign(quotes.begin(), quotes.end());
        if (!out.empty()) cfg.out_dir = out;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    if (cfg.command.empty()) {
        err << "error: no command given\n" << app.help();
        return kUsage;
    }
    return run(cfg, log, err);
}

}  // namespace mcurve::cli
