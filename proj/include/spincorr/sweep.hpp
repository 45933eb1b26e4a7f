// Time sweeps over the correlation measures, figure presets, and CSV/JSON
// serialization. Output grids are uniform in tJ = tau * S2, which is the
// axis used by the figures; tau is emitted alongside for tooling.
#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "spincorr/measures.hpp"
#include "spincorr/spin.hpp"
#include "spincorr/version.hpp"

namespace spincorr::sweep {

enum class UnitMode { b_units, bits, figure };

inline std::string unit_mode_name(UnitMode m) {
    switch (m) {
        case UnitMode::b_units: return "B";
        case UnitMode::bits: return "bits";
        case UnitMode::figure: return "figure";
    }
    return "B";
}

inline UnitMode parse_unit_mode(const std::string& name) {
    if (name == "B") return UnitMode::b_units;
    if (name == "bits") return UnitMode::bits;
    if (name == "figure") return UnitMode::figure;
    throw std::invalid_argument("unknown unit mode '" + name + "' (expected B, bits or figure)");
}

// The nine sweepable measures plus the ratio columns used by the figure
// presets. Ratio values at points where the total correlation vanishes are
// emitted as their analytic limits (the tau -> 0 limits; all quantum
// measures share them at every revival by periodicity).
enum class MeasureId {
    total,            // I
    classical,        // Jc
    povm_both,        // Jgg
    quantum_both,     // Qgg
    classical_one,    // Cg
    quantum_one,      // Qg
    classical_orth,   // Co
    quantum_orth,     // Qo
    fid,              // fid
    ratio_qgg_i,      // Qgg_over_I
    ratio_qg_i,       // Qg_over_I
    ratio_qo_i,       // Qo_over_I
};

inline const char* measure_name(MeasureId id) {
    switch (id) {
        case MeasureId::total: return "I";
        case MeasureId::classical: return "Jc";
        case MeasureId::povm_both: return "Jgg";
        case MeasureId::quantum_both: return "Qgg";
        case MeasureId::classical_one: return "Cg";
        case MeasureId::quantum_one: return "Qg";
        case MeasureId::classical_orth: return "Co";
        case MeasureId::quantum_orth: return "Qo";
        case MeasureId::fid: return "fid";
        case MeasureId::ratio_qgg_i: return "Qgg_over_I";
        case MeasureId::ratio_qg_i: return "Qg_over_I";
        case MeasureId::ratio_qo_i: return "Qo_over_I";
    }
    return "?";
}

inline std::vector<MeasureId> parse_measure_list(const std::string& text) {
    static const std::pair<const char*, MeasureId> table[] = {
        {"I", MeasureId::total},        {"Jc", MeasureId::classical},
        {"Jgg", MeasureId::povm_both},  {"Qgg", MeasureId::quantum_both},
        {"Cg", MeasureId::classical_one}, {"Qg", MeasureId::quantum_one},
        {"Co", MeasureId::classical_orth}, {"Qo", MeasureId::quantum_orth},
        {"fid", MeasureId::fid},
    };
    std::vector<MeasureId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        bool found = false;
        for (const auto& [name, id] : table) {
            if (item == name) {
                out.push_back(id);
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown measure '" + item + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty measure list");
    return out;
}

inline bool is_ratio(MeasureId id) {
    return id == MeasureId::ratio_qgg_i || id == MeasureId::ratio_qg_i ||
           id == MeasureId::ratio_qo_i;
}

// Value of one measure at tau, in units of B (ratios and fid unitless).
inline double evaluate_measure(MeasureId id, const PairConfig& cfg, double tau) {
    using namespace spincorr::measures;
    switch (id) {
        case MeasureId::total: return total_mutual_information(cfg, tau);
        case MeasureId::classical: return classical_mutual_information(cfg, tau);
        case MeasureId::povm_both: return povm_mutual_information(cfg, tau);
        case MeasureId::quantum_both: return quantum_part_povm_both(cfg, tau);
        case MeasureId::classical_one: return classical_part_povm_one(cfg, tau);
        case MeasureId::quantum_one: return quantum_part_povm_one(cfg, tau);
        case MeasureId::classical_orth: return classical_part_orthogonal(cfg, tau);
        case MeasureId::quantum_orth: return quantum_part_orthogonal(cfg, tau);
        case MeasureId::fid: return free_induction_decay(cfg, tau);
        default: break;
    }
    // Ratio columns: guard the 0/0 at revivals with the analytic limit.
    const double total = measures::total_mutual_information(cfg, tau);
    const double j1 = cfg.s1.value() * (cfg.s1.value() + 1.0);
    const double j2 = cfg.s2.value() * (cfg.s2.value() + 1.0);
    const bool degenerate = total <= 1e-13 * (j1 + j2);
    switch (id) {
        case MeasureId::ratio_qgg_i:
            return degenerate ? measures::small_tau_limit_qgg_over_i(cfg)
                              : measures::quantum_part_povm_both(cfg, tau) / total;
        case MeasureId::ratio_qg_i:
            return degenerate ? measures::small_tau_limit_qg_over_i(cfg)
                              : measures::quantum_part_povm_one(cfg, tau) / total;
        case MeasureId::ratio_qo_i:
            return degenerate ? measures::small_tau_limit_qo_over_i()
                              : measures::quantum_part_orthogonal(cfg, tau) / total;
        default: break;
    }
    throw std::logic_error("evaluate_measure: unhandled measure");
}

struct SweepConfig {
    PairConfig pair;
    double tj_max = 10.0;
    int steps = 201;  // number of grid rows
    std::vector<MeasureId> measures{MeasureId::total, MeasureId::classical,
                                    MeasureId::povm_both, MeasureId::quantum_both,
                                    MeasureId::classical_one, MeasureId::quantum_one,
                                    MeasureId::fid};
    UnitMode unit_mode = UnitMode::b_units;
    std::optional<double> beta;  // required for bits

    void validate() const {
        if (steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
        if (!(tj_max >= 0.0)) throw std::invalid_argument("sweep: tj-max must be non-negative");
        if (unit_mode == UnitMode::bits && !beta)
            throw std::invalid_argument("sweep: unit mode 'bits' requires --beta");
        if (beta && !(*beta > 0.0)) throw std::invalid_argument("sweep: beta must be positive");
        for (MeasureId id : measures) {
            if ((id == MeasureId::classical_orth || id == MeasureId::quantum_orth ||
                 id == MeasureId::ratio_qo_i) &&
                pair.s1.twice() != 1)
                throw std::invalid_argument("sweep: Co/Qo require S1 = 1/2");
        }
    }
};

struct MeasureSeries {
    std::vector<double> tj;
    std::vector<double> tau;
    std::vector<std::pair<std::string, std::vector<double>>> columns;
    UnitMode unit_mode = UnitMode::b_units;
};

inline MeasureSeries run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    MeasureSeries series;
    series.unit_mode = cfg.unit_mode;
    const int n = cfg.steps;
    series.tj.resize(static_cast<std::size_t>(n));
    series.tau.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double tj = cfg.tj_max * static_cast<double>(k) / static_cast<double>(n - 1);
        series.tj[static_cast<std::size_t>(k)] = tj;
        series.tau[static_cast<std::size_t>(k)] = cfg.pair.tau_from_tj(tj);
    }
    const double s2 = cfg.pair.s2.value();
    for (MeasureId id : cfg.measures) {
        std::vector<double> values(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            double v = evaluate_measure(id, cfg.pair, series.tau[static_cast<std::size_t>(k)]);
            if (id != MeasureId::fid && !is_ratio(id)) {
                if (cfg.unit_mode == UnitMode::bits)
                    v *= correlation_unit(*cfg.beta);
                else if (cfg.unit_mode == UnitMode::figure)
                    v /= 2.0 * s2 * s2;
            }
            values[static_cast<std::size_t>(k)] = v;
        }
        series.columns.emplace_back(measure_name(id), std::move(values));
    }
    return series;
}

// A figure preset expands to one sweep block per spin assignment.
struct FigureBlock {
    SweepConfig config;
    MeasureSeries series;
};

struct FigureOverrides {
    std::optional<double> tj_max;
    std::optional<int> steps;
};

inline std::vector<FigureBlock> run_figure(int id, const FigureOverrides& ov = {}) {
    const double pi = std::numbers::pi;
    std::vector<SweepConfig> configs;
    switch (id) {
        case 1:
            // One full quantum period per spin value, amplitudes in units
            // of 2 B S^2 so the classical curve is spin-independent.
            for (int twice_s : {3, 9}) {
                SweepConfig c;
                c.pair = PairConfig(SpinNumber(twice_s), SpinNumber(twice_s));
                c.tj_max = 2.0 * pi * c.pair.s2.value();
                c.steps = 601;
                c.measures = {MeasureId::total, MeasureId::classical, MeasureId::povm_both};
                c.unit_mode = UnitMode::figure;
                configs.push_back(c);
            }
            break;
        case 2:
            for (int twice_s : {3, 9}) {
                SweepConfig c;
                c.pair = PairConfig(SpinNumber(twice_s), SpinNumber(twice_s));
                c.tj_max = 10.0;
                c.steps = 501;
                c.measures = {MeasureId::ratio_qgg_i, MeasureId::ratio_qg_i};
                configs.push_back(c);
            }
            break;
        case 3:
            for (int twice_s2 : {1, 3, 9}) {
                SweepConfig c;
                c.pair = PairConfig(SpinNumber(1), SpinNumber(twice_s2));
                c.tj_max = 10.0;
                c.steps = 501;
                c.measures = {MeasureId::ratio_qo_i, MeasureId::ratio_qg_i};
                configs.push_back(c);
            }
            break;
        default:
            throw std::invalid_argument("figure id must be 1, 2 or 3");
    }
    std::vector<FigureBlock> blocks;
    for (SweepConfig& c : configs) {
        if (ov.tj_max) c.tj_max = *ov.tj_max;
        if (ov.steps) c.steps = *ov.steps;
        blocks.push_back(FigureBlock{c, run_sweep(c)});
    }
    return blocks;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

// CSV, 17 significant digits, first column tJ, second tau.
inline void write_csv(const MeasureSeries& s, std::ostream& out) {
    out << "tJ,tau";
    for (const auto& [name, values] : s.columns) out << ',' << name;
    out << '\n';
    for (std::size_t k = 0; k < s.tj.size(); ++k) {
        out << detail::format_double(s.tj[k]) << ',' << detail::format_double(s.tau[k]);
        for (const auto& [name, values] : s.columns) out << ',' << detail::format_double(values[k]);
        out << '\n';
    }
}

// Figure CSV: blocks concatenated, spin columns after the time columns.
inline void write_csv(const std::vector<FigureBlock>& blocks, std::ostream& out) {
    if (blocks.empty()) throw std::invalid_argument("write_csv: no figure blocks");
    out << "tJ,tau,s1,s2";
    for (const auto& [name, values] : blocks.front().series.columns) out << ',' << name;
    out << '\n';
    for (const auto& block : blocks) {
        const double s1 = block.config.pair.s1.value();
        const double s2 = block.config.pair.s2.value();
        const MeasureSeries& s = block.series;
        for (std::size_t k = 0; k < s.tj.size(); ++k) {
            out << detail::format_double(s.tj[k]) << ',' << detail::format_double(s.tau[k]) << ','
                << detail::format_double(s1) << ',' << detail::format_double(s2);
            for (const auto& [name, values] : s.columns)
                out << ',' << detail::format_double(values[k]);
            out << '\n';
        }
    }
}

inline nlohmann::ordered_json metadata_json(const SweepConfig& cfg) {
    nlohmann::ordered_json meta;
    meta["generator"] = "spincorr";
    meta["version"] = kVersion;
    meta["format"] = kOutputFormatVersion;
    meta["s1"] = cfg.pair.s1.to_string();
    meta["s2"] = cfg.pair.s2.to_string();
    meta["tj_max"] = cfg.tj_max;
    meta["steps"] = cfg.steps;
    meta["units"] = unit_mode_name(cfg.unit_mode);
    if (cfg.beta)
        meta["beta"] = *cfg.beta;
    else
        meta["beta"] = nullptr;
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (MeasureId id : cfg.measures) names.push_back(measure_name(id));
    meta["measures"] = names;
    return meta;
}

inline void write_json(const SweepConfig& cfg, const MeasureSeries& s, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata_json(cfg);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < s.tj.size(); ++k) {
        nlohmann::ordered_json row;
        row["tJ"] = s.tj[k];
        row["tau"] = s.tau[k];
        for (const auto& [name, values] : s.columns) row[name] = values[k];
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

inline void write_json(int figure_id, const std::vector<FigureBlock>& blocks, std::ostream& out) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta;
    meta["generator"] = "spincorr";
    meta["version"] = kVersion;
    meta["format"] = kOutputFormatVersion;
    meta["figure"] = figure_id;
    nlohmann::ordered_json block_meta = nlohmann::ordered_json::array();
    for (const auto& block : blocks) block_meta.push_back(metadata_json(block.config));
    meta["blocks"] = std::move(block_meta);
    doc["metadata"] = std::move(meta);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& block : blocks) {
        const MeasureSeries& s = block.series;
        for (std::size_t k = 0; k < s.tj.size(); ++k) {
            nlohmann::ordered_json row;
            row["tJ"] = s.tj[k];
            row["tau"] = s.tau[k];
            row["s1"] = block.config.pair.s1.value();
            row["s2"] = block.config.pair.s2.value();
            for (const auto& [name, values] : s.columns) row[name] = values[k];
            rows.push_back(std::move(row));
        }
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

}  // namespace spincorr::sweep
