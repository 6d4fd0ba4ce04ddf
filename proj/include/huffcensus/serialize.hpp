#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "huffcensus/asymptotics.hpp"
#include "huffcensus/counting.hpp"
#include "huffcensus/genfun.hpp"
#include "huffcensus/interval.hpp"
#include "huffcensus/representations.hpp"

namespace huffcensus {

using json = nlohmann::json;

// Representations serialize as {"t": int, "kind": string, "data": array}.

inline json to_json(const Representation& rep) {
    json j;
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            j["t"] = r.t;
            if constexpr (std::is_same_v<T, UnitFractionExponents>) {
                j["kind"] = "exponents";
                j["data"] = r.xs;
            } else if constexpr (std::is_same_v<T, HuffmanSequence>) {
                j["kind"] = "huffman";
                j["data"] = r.a;
            } else if constexpr (std::is_same_v<T, BoundedDegreeSequence>) {
                j["kind"] = "degrees";
                j["data"] = r.b;
            } else if constexpr (std::is_same_v<T, ProperWord>) {
                j["kind"] = "word";
                json bits = json::array();
                for (auto b : r.bits) bits.push_back(static_cast<int>(b));
                j["data"] = bits;
            } else {
                j["kind"] = "tree";
                json lv = json::array();
                for (const auto& l : r.levels) lv.push_back(json::array({l.inner, l.leaf}));
                j["data"] = lv;
            }
        },
        rep);
    return j;
}

inline RepKind rep_kind_from_name(const std::string& name) {
    if (name == "exponents") return RepKind::exponents;
    if (name == "huffman") return RepKind::huffman;
    if (name == "degrees") return RepKind::degrees;
    if (name == "word") return RepKind::word;
    if (name == "tree") return RepKind::tree;
    throw std::invalid_argument("unknown representation kind: " + name);
}

inline Representation representation_from_json(const json& j, int default_t = 0,
                                               RepKind default_kind = RepKind::huffman) {
    int t = default_t;
    RepKind kind = default_kind;
    const json* data = &j;
    if (j.is_object()) {
        if (j.contains("t")) t = j.at("t").get<int>();
        if (j.contains("kind")) kind = rep_kind_from_name(j.at("kind").get<std::string>());
        data = &j.at("data");
    }
    if (t == 0) throw std::invalid_argument("representation needs t (field or flag)");
    if (!data->is_array()) throw std::invalid_argument("representation data must be an array");
    switch (kind) {
        case RepKind::exponents:
            return UnitFractionExponents{t, data->get<std::vector<long long>>()};
        case RepKind::huffman:
            return HuffmanSequence{t, data->get<std::vector<long long>>()};
        case RepKind::degrees:
            return BoundedDegreeSequence{t, data->get<std::vector<long long>>()};
        case RepKind::word: {
            ProperWord w{t, {}};
            for (const auto& b : *data) {
                auto v = b.get<int>();
                if (v != 0 && v != 1) throw std::invalid_argument("word bits must be 0/1");
                w.bits.push_back(static_cast<std::uint8_t>(v));
            }
            return w;
        }
        case RepKind::tree: {
            CanonicalTree tr{t, {}};
            for (const auto& lv : *data) {
                if (!lv.is_array() || lv.size() != 2)
                    throw std::invalid_argument("tree levels must be [inner, leaf] pairs");
                tr.levels.push_back({lv[0].get<long long>(), lv[1].get<long long>()});
            }
            return tr;
        }
    }
    throw std::invalid_argument("unknown representation kind");
}

// Compact one-line text forms matching the worked examples: sequences as
// (0,1,1,1,2), words as bare bit strings.
inline std::string to_text(const Representation& rep) {
    std::ostringstream os;
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ProperWord>) {
                for (auto b : r.bits) os << static_cast<int>(b);
            } else if constexpr (std::is_same_v<T, CanonicalTree>) {
                for (const auto& l : r.levels) os << "(" << l.inner << "," << l.leaf << ")";
            } else {
                const auto& v = [&] {
                    if constexpr (std::is_same_v<T, UnitFractionExponents>) return r.xs;
                    else if constexpr (std::is_same_v<T, HuffmanSequence>) return r.a;
                    else return r.b;
                }();
                os << "(";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
                os << ")";
            }
        },
        rep);
    return os.str();
}

inline json to_json(const CountTable& tab) {
    json rows = json::object();
    for (int t = tab.t_min; t <= tab.t_max; ++t) {
        json row = json::array();
        for (long long n = 0; n <= tab.n_max; ++n) row.push_back(tab.entry(t, n).str());
        rows[std::to_string(t)] = row;
    }
    return json{{"t_min", tab.t_min}, {"t_max", tab.t_max}, {"n_max", tab.n_max}, {"rows", rows}};
}

inline void write_csv(const CountTable& tab, std::ostream& os) {
    os << "t";
    for (long long n = 0; n <= tab.n_max; ++n) os << "," << n;
    os << "\n";
    for (int t = tab.t_min; t <= tab.t_max; ++t) {
        os << t;
        for (long long n = 0; n <= tab.n_max; ++n) os << "," << tab.entry(t, n).str();
        os << "\n";
    }
}

inline json to_json(const SeriesTruncation& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(c.str());
    return json{{"t", s.t}, {"order", s.order}, {"coeffs", coeffs}};
}

inline json to_json(const Interval& iv, int digits) {
    json j{{"lo", to_fraction_string(iv.lo)}, {"hi", to_fraction_string(iv.hi)}};
    try {
        j["decimal"] = decimal_render(iv, digits);
    } catch (const interval_too_wide&) {
        j["decimal"] = nullptr;
    }
    return j;
}

inline json to_json(const AsymptoticConstants& c) {
    return json{{"t", c.t},
                {"digits", c.digits},
                {"rho", to_json(c.rho, c.digits)},
                {"rho2", to_json(c.rho2, c.digits)},
                {"R", to_json(c.R, c.digits)},
                {"R2", to_json(c.R2, c.digits)},
                {"r3", to_fraction_string(c.r3)},
                {"R3", to_fraction_string(c.R3)}};
}

inline json to_json(const Theorem2Prediction& p) {
    auto band = [](const Theorem2Prediction::Band& b) {
        return json{{"center", to_fraction_string(b.center)},
                    {"half_width", to_fraction_string(b.half_width)}};
    };
    return json{{"t", p.t},        {"rho", band(p.rho)}, {"rho2", band(p.rho2)},
                {"r3", band(p.r3)}, {"R", band(p.R)},     {"R2", band(p.R2)},
                {"R3", band(p.R3)}};
}

inline json to_json(const AsymptoticCheckReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(json{{"n", r.n},
                            {"exact", r.exact.str()},
                            {"approx_lo", to_fraction_string(r.approx.lo)},
                            {"approx_hi", to_fraction_string(r.approx.hi)},
                            {"envelope", to_fraction_string(r.envelope)},
                            {"ratio_upper", to_fraction_string(r.ratio_upper)}});
    }
    return json{{"t", rep.t},
                {"n_max", rep.n_max},
                {"digits", rep.digits},
                {"ok", rep.ok},
                {"worst_ratio", to_fraction_string(rep.worst_ratio)},
                {"worst_n", rep.worst_n},
                {"rows", rows}};
}

}  // namespace huffcensus
